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

#include <cstdint>
#include <vector>

#include "qgauge/channel.hpp"

namespace qgauge {

inline constexpr double kDefaultConditionCap = 1e4;

/// Real invertible X acting on the transfer-matrix (Hermitian basis)
/// representation, with first row (1, 0, ..., 0) exactly.
class GaugeTransform {
 public:
  /// Throws Structural when the first row is not exactly (1, 0, ..., 0),
  /// Numeric when X is singular or its condition exceeds `condition_cap`.
  GaugeTransform(int dim, RMatrix x, double condition_cap = kDefaultConditionCap);

  static GaugeTransform identity(int dim);

  int dim() const { return dim_; }
  const RMatrix& matrix() const { return x_; }
  const RMatrix& inverse_matrix() const { return x_inv_; }
  /// 2-norm condition number.
  double condition_estimate() const { return condition_; }

  GaugeTransform compose(const GaugeTransform& other) const;  // this · other
  GaugeTransform inverse() const;

  /// X expressed on row-stacked vectorized operators: U X U†.
  CMatrix computational_matrix() const;
  CMatrix computational_inverse() const;

 private:
  struct Unchecked {};
  GaugeTransform(Unchecked, int dim, RMatrix x);
  friend GaugeTransform make_unchecked_gauge(int dim, RMatrix x);

  int dim_;
  RMatrix x_;
  RMatrix x_inv_;
  double condition_;
};

/// X = I + strength·G, G standard Gaussian with its first row zeroed;
/// resampled while the condition exceeds the cap. Numeric after 100 failed
/// attempts.
GaugeTransform random_gauge(int dim, double strength, std::uint64_t seed,
                            double condition_cap = kDefaultConditionCap);

/// M = X⁻¹ Φ X.
Superoperator apply_gauge(const Superoperator& phi, const GaugeTransform& x);

enum class Frame { Physical, Gauge };

/// Gates, initial state |ρ⟩⟩ = vec(ρ) and effect ⟨⟨E| = vec(E)†. The
/// two-outcome measurement is {E, I - E}; the I - E outcome is evaluated with
/// the fixed trace functional so it detects gauges that break trace
/// preservation.
class GateSet {
 public:
  /// Checks that ρ is a density matrix and 0 ≤ E ≤ I within 1e-10.
  static GateSet physical(std::vector<Superoperator> gates, const CMatrix& rho,
                          const CMatrix& effect);

  int dim() const { return dim_; }
  const std::vector<Superoperator>& gates() const { return gates_; }
  const CVector& state() const { return state_; }
  /// Row covector.
  const Eigen::RowVectorXcd& effect() const { return effect_; }
  Frame frame() const { return frame_; }

 private:
  GateSet(int dim, std::vector<Superoperator> gates, CVector state,
          Eigen::RowVectorXcd effect, Frame frame);
  friend GateSet transform_gateset(const GateSet&, const GaugeTransform&);

  int dim_;
  std::vector<Superoperator> gates_;
  CVector state_;
  Eigen::RowVectorXcd effect_;
  Frame frame_;
};

/// Gates conjugated, state → X⁻¹|ρ⟩⟩, effect → ⟨⟨E|X. Marked Frame::Gauge.
GateSet transform_gateset(const GateSet& gs, const GaugeTransform& x);

/// ⟨⟨E|Φ_{k₁}⋯Φ_{kₙ}|ρ⟩⟩ (the last index acts first).
double sequence_probability(const GateSet& gs, const std::vector<int>& seq);

/// ⟨⟨I|Φ_{k₁}⋯Φ_{kₙ}|ρ⟩⟩ - ⟨⟨E|⋯|ρ⟩⟩, the probability of the I - E outcome.
double complement_probability(const GateSet& gs, const std::vector<int>& seq);

struct OrbitReport {
  double max_prob_deviation = 0.0;
  double max_spectral_deviation = 0.0;
  double condition = 1.0;
  std::size_t sequences = 0;
};

/// Compares both outcome probabilities for every sequence of length
/// 0..max_len, and the gate spectra, between gs and its gauge image.
OrbitReport verify_orbit_invariance(const GateSet& gs, const GaugeTransform& x,
                                    int max_len);

}  // namespace qgauge
