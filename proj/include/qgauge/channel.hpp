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

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qgauge/error.hpp"

namespace qgauge {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kKrausCompletenessTol = 1e-12;
inline constexpr double kTransferRowTol = 1e-8;
inline constexpr double kHermitianImageTol = 1e-8;

/// Row-stacking vectorization: vec(A)[i*d + j] = A(i, j). With this
/// convention vec(A X B) = (A ⊗ Bᵀ) vec(X), so a Kraus term K ρ K† maps to
/// K ⊗ conj(K).
CVector vec(const CMatrix& a);
CMatrix unvec(const CVector& v, int dim);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Largest absolute entry; the norm used for every tolerance comparison.
template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& a) {
  return a.size() ? a.cwiseAbs().maxCoeff() : 0.0;
}

// ---------------------------------------------------------------------------
// Operator basis

/// Hermitian orthonormal basis {B_0 = I/√d, B_1, ..., B_{d²-1}}.
///
/// For every d the elements are normalized generalized Gell-Mann matrices in
/// the order: identity; symmetric (|j⟩⟨k| + |k⟩⟨j|)/√2 for j < k in
/// lexicographic order; antisymmetric (-i|j⟩⟨k| + i|k⟩⟨j|)/√2 in the same
/// order; diagonal (Σ_{m<l} |m⟩⟨m| - l|l⟩⟨l|)/√(l(l+1)) for l = 1..d-1.
/// For d = 2 this is exactly {I, X, Y, Z}/√2.
std::vector<CMatrix> operator_basis(int dim);

/// "pauli-normalized" for d = 2, "gell-mann-normalized/<d>" otherwise.
std::string basis_id(int dim);

/// Unitary whose j-th column is vec(B_j).
CMatrix basis_change(int dim);

// ---------------------------------------------------------------------------
// Representations

class KrausSet {
 public:
  /// Throws Structural on empty/mismatched/non-finite operators and
  /// NotTracePreserving when Σ K†K deviates from I by more than tp_tol.
  explicit KrausSet(std::vector<CMatrix> operators,
                    double tp_tol = kKrausCompletenessTol);

  int dim() const { return dim_; }
  std::size_t size() const { return operators_.size(); }
  const std::vector<CMatrix>& operators() const { return operators_; }

  CMatrix apply(const CMatrix& rho) const;

  /// max |Σ K†K - I|.
  double completeness_error() const;

 private:
  int dim_;
  std::vector<CMatrix> operators_;
};

class Superoperator {
 public:
  Superoperator(int dim, CMatrix matrix);

  int dim() const { return dim_; }
  const CMatrix& matrix() const { return matrix_; }

  CVector apply(const CVector& vec_rho) const { return matrix_ * vec_rho; }
  CMatrix apply_to(const CMatrix& rho) const;

  /// this ∘ inner (inner acts first).
  Superoperator compose(const Superoperator& inner) const;

 private:
  int dim_;
  CMatrix matrix_;
};

/// Real block form (1, 0; k, T) in the library basis.
class TransferMatrix {
 public:
  TransferMatrix(int dim, RVector translation, RMatrix bloch_map);

  /// Builds from a full d²×d² real matrix; the first row must be
  /// (1, 0, ..., 0) within kTransferRowTol.
  static TransferMatrix from_full(int dim, const RMatrix& full);

  int dim() const { return dim_; }
  const RVector& translation() const { return k_; }
  const RMatrix& bloch_map() const { return t_; }
  const std::string& basis() const { return basis_id_; }

  RMatrix full() const;
  bool is_unital(double tol = 1e-12) const;

 private:
  int dim_;
  RVector k_;
  RMatrix t_;
  std::string basis_id_;
};

class ChoiMatrix {
 public:
  ChoiMatrix(int dim, CMatrix matrix);
  int dim() const { return dim_; }
  const CMatrix& matrix() const { return matrix_; }

 private:
  int dim_;
  CMatrix matrix_;
};

struct CpReport {
  bool completely_positive = false;
  double min_eigenvalue = 0.0;
};

Superoperator kraus_to_superoperator(const KrausSet& ks);

/// Entry (i, j) of the full matrix is Tr[B_i† E(B_j)].
/// Throws NotTracePreserving or NonHermitianImage.
TransferMatrix superoperator_to_transfer(const Superoperator& phi);

Superoperator transfer_to_superoperator(const TransferMatrix& tm);

/// Full real matrix U†ΦU without the trace-preservation check. Throws
/// NonHermitianImage when the image is not real.
RMatrix transfer_form(const Superoperator& phi);

/// Reshuffle C[(k,i),(l,j)] = Φ[(i,j),(k,l)] = E(|k⟩⟨l|)_{ij}; C ⪰ 0 iff the
/// channel is completely positive.
ChoiMatrix choi_matrix(const Superoperator& phi);

double default_cp_tolerance(int dim);

/// True iff the minimal Choi eigenvalue is ≥ -tol. Throws Structural when the
/// Choi matrix is not Hermitian to 1e-8, Domain when tol <= 0.
CpReport is_completely_positive(const Superoperator& phi, double tol);
CpReport is_completely_positive(const Superoperator& phi);

}  // namespace qgauge
