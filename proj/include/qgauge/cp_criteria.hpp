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
#include <cstdint>
#include <optional>
#include <string>

#include "qgauge/spectrum.hpp"

namespace qgauge {

/// |det| below this is treated as zero.
inline constexpr double kDetZeroBand = 1e-12;
inline constexpr double kVerdictTol = 1e-12;
inline constexpr double kFeasibilityTol = 1e-9;

enum class DetSign { Negative, Zero, Positive };

DetSign det_sign_of(double det);

enum class Branch { None, PositiveDet, NegativeDet, ZeroDet };

std::string_view to_string(Branch b);

using KVector = std::array<double, 3>;

struct Witness {
  SingularTriple s;
  KVector k;
};

/// Outcome of one necessary-condition test. `margin` is the smallest slack
/// among the inequalities involved (negative when violated). A violated
/// verdict refutes complete positivity; a satisfied one is inconclusive.
struct CriterionVerdict {
  std::string criterion;
  bool satisfied = false;
  double margin = 0.0;
  Branch branch = Branch::None;
  std::optional<Witness> witness;
};

CriterionVerdict make_verdict(std::string criterion, double margin,
                              Branch branch = Branch::None);

/// 1 ± η₃ ≥ |η₁ ± η₂| (signs correlated).
CriterionVerdict fa_conditions(const EtaTriple& eta);

/// Singular-value form: 1 - Σs + 2 min s ≥ 0 for det T ≥ 0 and 1 - Σs ≥ 0
/// for det T ≤ 0. DetSign::Zero evaluates both and keeps the larger margin.
CriterionVerdict fa_singular(const SingularTriple& s, DetSign sign);

/// Gauge-invariant necessary criterion on the three non-unit eigenvalues of
/// a qubit superoperator (valid for unital and non-unital channels).
CriterionVerdict theorem1(const Spectrum& sp);

/// The four faces of the tetrahedron for an all-real qubit spectrum.
CriterionVerdict real_tetrahedron(double l1, double l2, double l3);

/// |z| ≤ (1 + x)/2 for the spectrum {1, x, z, z̄}.
CriterionVerdict complex_pair_disc(double x, cplx z);

/// -1/27 ≤ λ₁λ₂λ₃ ≤ 1.
CriterionVerdict det_range_check(const Spectrum& sp);

struct KNormBound {
  double bound = 0.0;
  bool feasible = false;
};

/// B = 1 - Σ|λ_i|² + 2 λ₁λ₂λ₃; any CP channel with this spectrum has
/// ‖k‖² ≤ B. B < -1e-12 certifies no CP channel has this spectrum.
KNormBound k_norm_bound(const Spectrum& sp);

/// margin = B - ‖k‖² for a channel whose translation is known.
CriterionVerdict k_norm_check(const Spectrum& sp, double k_norm_sq);

/// (1+η₁+η₂+η₃)(1+η₁-η₂-η₃)(1-η₁+η₂-η₃)(1-η₁-η₂+η₃).
double q_product(double e1, double e2, double e3);

/// Z(η) = ‖k‖⁴ - 2‖k‖² - 2Σ η_i²(2k_i² - ‖k‖²) + q(η) ≥ 0, with k expressed
/// in the frame where T is diagonal.
CriterionVerdict z_condition(const EtaTriple& eta, const KVector& k);

/// Z(s) ≥ 0 for det T ≥ 0, Z(s) - 16 det T ≥ 0 for det T ≤ 0, with
/// det T = sign · s₁s₂s₃. Necessary only; it does not imply fa_singular.
CriterionVerdict z_condition_singular(const SingularTriple& s,
                                      const KVector& k, DetSign sign);

struct ZSearchOptions {
  int grid = 25;
  int refine_iterations = 200;
};

struct ZFeasibility {
  bool feasible = false;
  double best_margin = 0.0;
  std::optional<Witness> witness;
  /// Set when k_norm_bound already refuted the spectrum.
  bool k_norm_infeasible = false;
};

/// Searches singular triples majorizing the spectrum's moduli (weak, log
/// and product equality) together with translations ‖k‖² ≤ k_norm_bound,
/// maximizing the minimum of the Z-condition, fa_singular and
/// ‖k‖²-bound margins. Grid phase, `samples` seeded random probes, then a
/// Nelder-Mead refinement from the best point. Infeasible refutes CP.
ZFeasibility z_feasibility(const Spectrum& sp, int samples,
                           std::uint64_t seed,
                           const ZSearchOptions& options = {});

CriterionVerdict to_verdict(const ZFeasibility& z);

}  // namespace qgauge
