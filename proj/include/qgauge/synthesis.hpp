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

#include "qgauge/channel.hpp"

namespace qgauge {

/// Extended bistochastic matrix with corners {a, 1-a; 1-a, a}. Domain
/// unless 0 ≤ a ≤ 1.
Superoperator classical_channel(double a);

/// diag(1, e^{-iα}, e^{iα}, 1).
Superoperator phase_unitary_channel(double alpha);

/// p S_a + (1-p) Ψ_α, spectrum {1, 1-2p(1-a), (1-p)e^{∓iα}}.
Superoperator mixture_channel(double p, double a, double alpha);

/// Φ_{p,a,α} with p = 1-|z|, a = (x - 2|z| + 1)/(2 - 2|z|), α = arg z.
/// NotRealizable when |z| > (1+x)/2; Domain for Im z = 0 (use
/// xi_from_real_spectrum) or |x| > 1. |z| = 1 returns Ψ_{arg z}.
Superoperator synthesize_from_complex_pair(double x, cplx z);

/// Normal superoperator with eigenvalues {1, l1, l2, l3}. NotRealizable when
/// the triple lies outside the tetrahedron.
Superoperator xi_from_real_spectrum(double l1, double l2, double l3);

/// k = 0, T = -I/3: det T = -1/27, minimal Choi eigenvalue 0.
Superoperator det_saturating_channel();

namespace detail {
/// p S_a + (1-p) Ψ_α without parameter checks.
CMatrix mixture_matrix(double p, double a, double alpha);
}  // namespace detail

}  // namespace qgauge
