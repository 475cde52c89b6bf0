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

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "qgauge/channel.hpp"

// Reference constructions used as independent oracles. Nothing here calls
// into the library's representation conversions.
namespace qgauge::test {

inline CMatrix pauli(int which) {
  CMatrix m(2, 2);
  const cplx i(0.0, 1.0);
  switch (which) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline std::vector<CMatrix> identity_kraus(int d) { return {CMatrix::Identity(d, d)}; }

inline std::vector<CMatrix> bit_flip_kraus(double p) {
  return {std::sqrt(1.0 - p) * pauli(0), std::sqrt(p) * pauli(1)};
}

/// ρ ↦ η ρ + (1-η) I/2.
inline std::vector<CMatrix> depolarizing_kraus(double eta) {
  const double q = 3.0 * (1.0 - eta) / 4.0;
  return {std::sqrt(1.0 - q) * pauli(0), std::sqrt(q / 3.0) * pauli(1),
          std::sqrt(q / 3.0) * pauli(2), std::sqrt(q / 3.0) * pauli(3)};
}

inline std::vector<CMatrix> amplitude_damping_kraus(double g) {
  CMatrix k0 = CMatrix::Zero(2, 2), k1 = CMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - g);
  k1(0, 1) = std::sqrt(g);
  return {k0, k1};
}

inline CMatrix apply_kraus(const std::vector<CMatrix>& ks, const CMatrix& rho) {
  CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : ks) out += k * rho * k.adjoint();
  return out;
}

/// Pauli transfer matrix R_ij = ½ Tr[σ_i E(σ_j)].
inline RMatrix ptm_oracle(const std::vector<CMatrix>& ks) {
  RMatrix r(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      r(i, j) = 0.5 * (pauli(i) * apply_kraus(ks, pauli(j))).trace().real();
    }
  }
  return r;
}

/// Σ_{kl} |k⟩⟨l| ⊗ E(|k⟩⟨l|).
inline CMatrix choi_oracle(const std::vector<CMatrix>& ks, int d) {
  CMatrix c = CMatrix::Zero(d * d, d * d);
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      CMatrix e = CMatrix::Zero(d, d);
      e(k, l) = 1.0;
      c.block(k * d, l * d, d, d) = apply_kraus(ks, e);
    }
  }
  return c;
}

inline double min_herm_eig(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// Max distance after brute-force permutation matching (small inputs only).
inline double perm_distance(std::vector<cplx> a, std::vector<cplx> b) {
  std::vector<int> idx(b.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  double best = 1e300;
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[idx[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

inline std::vector<cplx> eigvals(const CMatrix& m) {
  Eigen::ComplexEigenSolver<CMatrix> es(m, false);
  std::vector<cplx> v(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
  return v;
}

inline cplx polar(double r, double theta) { return std::polar(r, theta); }

}  // namespace qgauge::test
