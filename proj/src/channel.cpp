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

#include "qgauge/channel.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace qgauge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Structural: return "Structural";
    case ErrorKind::NotTracePreserving: return "NotTracePreserving";
    case ErrorKind::NonHermitianImage: return "NonHermitianImage";
    case ErrorKind::Numeric: return "Numeric";
    case ErrorKind::MalformedSpectrum: return "MalformedSpectrum";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::Domain: return "Domain";
    case ErrorKind::NotRealizable: return "NotRealizable";
  }
  return "Unknown";
}

namespace {

void require_finite(const CMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw Error(ErrorKind::Structural, std::string(what) + " has non-finite entries");
  }
}

}  // namespace

CVector vec(const CMatrix& a) {
  CVector v(a.size());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) v(i * a.cols() + j) = a(i, j);
  return v;
}

CMatrix unvec(const CVector& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim) {
    throw Error(ErrorKind::Structural, "unvec: length is not dim^2");
  }
  CMatrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = v(i * dim + j);
  return a;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}


std::vector<CMatrix> operator_basis(int dim) {
  if (dim < 1) throw Error(ErrorKind::Structural, "dimension must be positive");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<CMatrix> basis;
  basis.reserve(static_cast<std::size_t>(dim) * dim);
  basis.push_back(CMatrix::Identity(dim, dim) / std::sqrt(static_cast<double>(dim)));
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      CMatrix b = CMatrix::Zero(dim, dim);
      b(j, k) = inv_sqrt2;
      b(k, j) = inv_sqrt2;
      basis.push_back(std::move(b));
    }
  }
  for (int j = 0; j < dim; ++j) {
    for (int k = j + 1; k < dim; ++k) {
      CMatrix b = CMatrix::Zero(dim, dim);
      b(j, k) = cplx(0.0, -inv_sqrt2);
      b(k, j) = cplx(0.0, inv_sqrt2);
      basis.push_back(std::move(b));
    }
  }
  for (int l = 1; l < dim; ++l) {
    CMatrix b = CMatrix::Zero(dim, dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int m = 0; m < l; ++m) b(m, m) = norm;
    b(l, l) = -static_cast<double>(l) * norm;
    basis.push_back(std::move(b));
  }
  return basis;
}

std::string basis_id(int dim) {
  return dim == 2 ? "pauli-normalized" : "gell-mann-normalized/" + std::to_string(dim);
}

CMatrix basis_change(int dim) {
  const auto basis = operator_basis(dim);
  CMatrix u(dim * dim, dim * dim);
  for (std::size_t j = 0; j < basis.size(); ++j) u.col(static_cast<Eigen::Index>(j)) = vec(basis[j]);
  return u;
}

// ---------------------------------------------------------------------------

KrausSet::KrausSet(std::vector<CMatrix> operators, double tp_tol)
    : dim_(0), operators_(std::move(operators)) {
  if (operators_.empty()) throw Error(ErrorKind::Structural, "Kraus set is empty");
  dim_ = static_cast<int>(operators_.front().rows());
  if (dim_ < 1) throw Error(ErrorKind::Structural, "Kraus operators must be non-empty");
  for (const auto& k : operators_) {
    if (k.rows() != dim_ || k.cols() != dim_) {
      throw Error(ErrorKind::Structural, "Kraus operators must all be dim x dim");
    }
    require_finite(k, "Kraus operator");
  }
  if (operators_.size() > static_cast<std::size_t>(dim_) * dim_) {
    throw Error(ErrorKind::Structural, "more than dim^2 Kraus operators");
  }
  const double err = completeness_error();
  if (err > tp_tol) {
    throw Error(ErrorKind::NotTracePreserving,
                "sum K^dag K deviates from identity by " + std::to_string(err));
  }
}

CMatrix KrausSet::apply(const CMatrix& rho) const {
  CMatrix out = CMatrix::Zero(dim_, dim_);
  for (const auto& k : operators_) out.noalias() += k * rho * k.adjoint();
  return out;
}

double KrausSet::completeness_error() const {
  CMatrix acc = -CMatrix::Identity(dim_, dim_);
  for (const auto& k : operators_) acc.noalias() += k.adjoint() * k;
  return max_abs(acc);
}

Superoperator::Superoperator(int dim, CMatrix matrix) : dim_(dim), matrix_(std::move(matrix)) {
  if (dim < 1) throw Error(ErrorKind::Structural, "dimension must be positive");
  const Eigen::Index n = static_cast<Eigen::Index>(dim) * dim;
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw Error(ErrorKind::Structural, "superoperator must be dim^2 x dim^2");
  }
  require_finite(matrix_, "superoperator");
}

CMatrix Superoperator::apply_to(const CMatrix& rho) const {
  return unvec(matrix_ * vec(rho), dim_);
}

Superoperator Superoperator::compose(const Superoperator& inner) const {
  if (inner.dim_ != dim_) throw Error(ErrorKind::Structural, "compose: dimension mismatch");
  return Superoperator(dim_, matrix_ * inner.matrix_);
}

TransferMatrix::TransferMatrix(int dim, RVector translation, RMatrix bloch_map)
    : dim_(dim), k_(std::move(translation)), t_(std::move(bloch_map)), basis_id_(basis_id(dim)) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim) * dim - 1;
  if (dim < 1 || k_.size() != n || t_.rows() != n || t_.cols() != n) {
    throw Error(ErrorKind::Structural, "transfer matrix blocks have the wrong size");
  }
  if (!k_.allFinite() || !t_.allFinite()) {
    throw Error(ErrorKind::Structural, "transfer matrix has non-finite entries");
  }
}

TransferMatrix TransferMatrix::from_full(int dim, const RMatrix& full) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim) * dim;
  if (full.rows() != n || full.cols() != n) {
    throw Error(ErrorKind::Structural, "full transfer matrix must be dim^2 x dim^2");
  }
  double dev = std::abs(full(0, 0) - 1.0);
  for (Eigen::Index j = 1; j < n; ++j) dev = std::max(dev, std::abs(full(0, j)));
  if (!(dev <= kTransferRowTol)) {
    throw Error(ErrorKind::NotTracePreserving,
                "first row deviates from (1, 0, ..., 0) by " + std::to_string(dev));
  }
  return TransferMatrix(dim, full.col(0).tail(n - 1), full.bottomRightCorner(n - 1, n - 1));
}

RMatrix TransferMatrix::full() const {
  const Eigen::Index n = static_cast<Eigen::Index>(dim_) * dim_;
  RMatrix r = RMatrix::Zero(n, n);
  r(0, 0) = 1.0;
  r.col(0).tail(n - 1) = k_;
  r.bottomRightCorner(n - 1, n - 1) = t_;
  return r;
}

bool TransferMatrix::is_unital(double tol) const {
  return k_.size() == 0 || k_.cwiseAbs().maxCoeff() <= tol;
}

ChoiMatrix::ChoiMatrix(int dim, CMatrix matrix) : dim_(dim), matrix_(std::move(matrix)) {}

// ---------------------------------------------------------------------------

Superoperator kraus_to_superoperator(const KrausSet& ks) {
  const int d = ks.dim();
  CMatrix phi = CMatrix::Zero(d * d, d * d);
  for (const auto& k : ks.operators()) phi += kron(k, k.conjugate());
  return Superoperator(d, std::move(phi));
}

RMatrix transfer_form(const Superoperator& phi) {
  const CMatrix u = basis_change(phi.dim());
  const CMatrix r = u.adjoint() * phi.matrix() * u;
  const double imag = max_abs(RMatrix(r.imag()));
  if (!(imag <= kHermitianImageTol)) {
    throw Error(ErrorKind::NonHermitianImage,
                "transfer form has imaginary residue " + std::to_string(imag));
  }
  return r.real();
}

TransferMatrix superoperator_to_transfer(const Superoperator& phi) {
  return TransferMatrix::from_full(phi.dim(), transfer_form(phi));
}

Superoperator transfer_to_superoperator(const TransferMatrix& tm) {
  if (tm.basis() != basis_id(tm.dim())) {
    throw Error(ErrorKind::Structural, "transfer matrix is not in the library basis");
  }
  const CMatrix u = basis_change(tm.dim());
  return Superoperator(tm.dim(), u * tm.full().cast<cplx>() * u.adjoint());
}

ChoiMatrix choi_matrix(const Superoperator& phi) {
  const int d = phi.dim();
  const CMatrix& m = phi.matrix();
  CMatrix c(d * d, d * d);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l)
        for (int j = 0; j < d; ++j) c(k * d + i, l * d + j) = m(i * d + j, k * d + l);
  return ChoiMatrix(d, std::move(c));
}

double default_cp_tolerance(int dim) { return 1e-10 * dim; }

CpReport is_completely_positive(const Superoperator& phi, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::Domain, "CP tolerance must be positive");
  const ChoiMatrix choi = choi_matrix(phi);
  const CMatrix& c = choi.matrix();
  const double asym = max_abs(CMatrix(c - c.adjoint()));
  if (asym > 1e-8) {
    throw Error(ErrorKind::Structural,
                "Choi matrix is not Hermitian (residue " + std::to_string(asym) + ")");
  }
  const CMatrix herm = 0.5 * (c + c.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::Numeric, "Hermitian eigensolver failed on the Choi matrix");
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  return CpReport{min_eig >= -tol, min_eig};
}

CpReport is_completely_positive(const Superoperator& phi) {
  return is_completely_positive(phi, default_cp_tolerance(phi.dim()));
}

}  // namespace qgauge
