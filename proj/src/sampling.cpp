// Copyright 2026 The qgauge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgauge/sampling.hpp"

#include <cmath>

#include <Eigen/QR>

#include "qgauge/cp_criteria.hpp"

namespace qgauge {

namespace {

cplx complex_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re * M_SQRT1_2, im * M_SQRT1_2};
}

}  // namespace

CMatrix haar_isometry(Rng& rng, int rows, int cols) {
  if (cols < 1 || rows < cols) throw Error(ErrorKind::Domain, "isometry needs rows >= cols >= 1");
  CMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) g(i, j) = complex_gaussian(rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(rows, cols);
  const CMatrix& r = qr.matrixQR();
  for (int j = 0; j < cols; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

RMatrix haar_rotation(Rng& rng, int n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  RMatrix g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = normal(rng);
  Eigen::HouseholderQR<RMatrix> qr(g);
  RMatrix q = qr.householderQ();
  const RMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return q;
}

CVector haar_pure_state(Rng& rng, int dim) {
  CVector psi(dim);
  for (int i = 0; i < dim; ++i) psi(i) = complex_gaussian(rng);
  return psi / psi.norm();
}

KrausSet sample_cptp(int dim, int kraus_rank, std::uint64_t seed) {
  if (dim < 1 || kraus_rank < 1 || kraus_rank > dim * dim) {
    throw Error(ErrorKind::Domain, "sample_cptp needs 1 <= kraus_rank <= dim^2");
  }
  Rng rng(seed);
  const CMatrix v = haar_isometry(rng, dim * kraus_rank, dim);
  std::vector<CMatrix> ops;
  ops.reserve(static_cast<std::size_t>(kraus_rank));
  for (int n = 0; n < kraus_rank; ++n) ops.emplace_back(v.block(n * dim, 0, dim, dim));
  return KrausSet(std::move(ops));
}

TransferMatrix unital_qubit(const EtaTriple& eta, const RMatrix& o1, const RMatrix& o2) {
  if (o1.rows() != 3 || o1.cols() != 3 || o2.rows() != 3 || o2.cols() != 3) {
    throw Error(ErrorKind::Structural, "rotations must be 3x3");
  }
  const RMatrix t = o1 * Eigen::Vector3d(eta.e1, eta.e2, eta.e3).asDiagonal() * o2.transpose();
  return TransferMatrix(2, RVector::Zero(3), t);
}

TransferMatrix sample_unital_qubit(std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  EtaTriple eta;
  do {
    eta = EtaTriple{uniform(rng), uniform(rng), uniform(rng)};
  } while (!fa_conditions(eta).satisfied);
  const RMatrix o1 = haar_rotation(rng, 3);
  const RMatrix o2 = haar_rotation(rng, 3);
  return unital_qubit(eta, o1, o2);
}

}  // namespace qgauge
