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

#include <array>
#include <span>
#include <variant>
#include <vector>

#include "qgauge/channel.hpp"

namespace qgauge {

inline constexpr double kConjugatePairTol = 1e-8;
inline constexpr double kUnitFlagDistance = 1e-6;
inline constexpr double kRealClassTol = 1e-9;

/// Eigenvalues of a superoperator with the designated unit eigenvalue λ₀.
class Spectrum {
 public:
  /// values.size() must equal dim².
  static Spectrum from_values(int dim, std::vector<cplx> values);

  int dim() const { return dim_; }
  const std::vector<cplx>& values() const { return values_; }
  std::size_t unit_index() const { return unit_index_; }
  cplx unit_value() const { return values_[unit_index_]; }

  /// γ = 1 - max |λ| over the non-designated values.
  double gap() const { return gap_; }

  /// Set when the value closest to 1 is further than kUnitFlagDistance.
  bool unit_flagged() const { return unit_flagged_; }

  /// Greedy nearest-conjugate matching succeeded at kConjugatePairTol.
  bool conjugation_closed() const { return conjugation_closed_; }

  /// Values other than the designated one, in stored order.
  std::vector<cplx> nonunit() const;

  /// Moduli of nonunit(), decreasing.
  std::vector<double> nonunit_moduli() const;

  /// Real part of the product of the non-unit values (det T for d = 2).
  double nonunit_product() const;

  cplx sum() const;

 private:
  Spectrum() = default;

  int dim_ = 0;
  std::vector<cplx> values_;
  std::size_t unit_index_ = 0;
  double gap_ = 0.0;
  bool unit_flagged_ = false;
  bool conjugation_closed_ = true;
};

/// Throws Numeric on eigensolver failure.
Spectrum spectrum(const Superoperator& phi);

struct AllReal {
  std::array<double, 3> values;  // decreasing |·|
};

struct ConjugatePair {
  double x;
  cplx z;  // Im z > 0
};

using QubitSpectralClass = std::variant<AllReal, ConjugatePair>;

/// Throws UnsupportedDimension for d != 2 and MalformedSpectrum when the
/// spectrum is not conjugation closed.
QubitSpectralClass classify_qubit_spectrum(const Spectrum& sp);

struct EtaTriple {
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;

  double product() const { return e1 * e2 * e3; }
};

/// s₁ ≥ s₂ ≥ s₃ ≥ 0; the constructor sorts, and rejects negative entries.
class SingularTriple {
 public:
  SingularTriple(double a, double b, double c);

  double s1() const { return s_[0]; }
  double s2() const { return s_[1]; }
  double s3() const { return s_[2]; }
  double operator[](std::size_t i) const { return s_[i]; }
  double sum() const { return s_[0] + s_[1] + s_[2]; }
  double product() const { return s_[0] * s_[1] * s_[2]; }

 private:
  std::array<double, 3> s_;
};

/// Nonnegative, decreasing.
std::vector<double> singular_values(const RMatrix& m);

struct MajorizationReport {
  bool weak_ok = false;
  bool log_ok = false;
  bool det_ok = false;
  /// Σ_{i≤k} s_i - Σ_{i≤k} |λ_i| for k = 1..N.
  std::vector<double> weak_margins;
  /// Π_{i≤k} s_i - Π_{i≤k} |λ_i| for k = 1..N-1.
  std::vector<double> log_margins;
  /// Π s_i - Π |λ_i|.
  double det_gap = 0.0;
};

/// Both inputs decreasing and of equal length (Structural otherwise).
/// Comparisons are relative to max(1, magnitude of the compared quantity):
/// partial sums at 1e-12 and products at 1e-9.
MajorizationReport check_majorization(std::span<const double> moduli,
                                      std::span<const double> singulars);

/// Minimal over all bijections of the maximal |a_i - b_π(i)| (bottleneck
/// assignment). Sizes must agree.
double spectral_distance(std::span<const cplx> a, std::span<const cplx> b);

}  // namespace qgauge
