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
#include <optional>

#include "qgauge/channel.hpp"
#include "qgauge/spectrum.hpp"

namespace qgauge {

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

struct DiamondBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// (Tr Φ + d) / (d(d+1)). Structural when Im Tr Φ exceeds 1e-10.
double avg_gate_fidelity(const Superoperator& phi);
double avg_gate_fidelity_from_spectrum(const Spectrum& sp);

/// Mean of ⟨ψ|E(ψ)|ψ⟩ over n Haar-random pure states.
MonteCarloEstimate mc_avg_gate_fidelity(const KrausSet& ks, int n,
                                        std::uint64_t seed);

/// u = (Tr[Φ†Φ] - 1 - ‖k‖²) / (d² - 1) = ‖T‖²_F / (d² - 1).
double unitarity_exact(const TransferMatrix& tm);

/// u = d/(d-1) E_ψ ‖E(ψ - I/d)‖²_F, i.e. the purity of the traceless part
/// of the output after removing the image of the maximally mixed state.
MonteCarloEstimate mc_unitarity(const KrausSet& ks, int n, std::uint64_t seed);

/// [1 - d r / (d-1)]²; saturated iff T is a scalar multiple of identity.
double unitarity_lower_from_r(double r, int dim);

/// (Σ_k |λ_k|² - d) / (d(d-1)) over all d² eigenvalues.
double unitarity_lower_from_spectrum(const Spectrum& sp);

/// (d+1) r / d ≤ ε⋄ ≤ √(d(d+1) r).
DiamondBounds diamond_bounds_from_r(double r, int dim);

/// √((d²-1)/(2d²)) · √(u - 1 + 2dr/(d-1)). Radicands down to -1e-12 are
/// clamped to zero; below that Domain is thrown.
double diamond_lower_wallman(double u, double r, int dim);

struct MetricsReport {
  int dim = 0;
  double f_avg = 0.0;
  double error_rate = 0.0;
  double u_lower_r = 0.0;
  double u_lower_spectrum = 0.0;
  double diamond_lower_r = 0.0;
  double diamond_upper_r = 0.0;
  /// Wallman bound evaluated at the best gauge-invariant unitarity bound.
  double diamond_lower_wallman = 0.0;
  /// Gauge dependent; present only when the transfer matrix is known.
  std::optional<double> unitarity;
  std::optional<double> diamond_lower_wallman_exact_u;
};

/// r is taken from the spectrum so every field except `unitarity` is
/// gauge invariant.
MetricsReport metrics_report(const Spectrum& sp,
                             const std::optional<TransferMatrix>& tm = {});

}  // namespace qgauge
