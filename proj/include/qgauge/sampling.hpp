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
#include <random>

#include "qgauge/channel.hpp"
#include "qgauge/spectrum.hpp"

namespace qgauge {

using Rng = std::mt19937_64;

/// Kraus operators taken as the d×d blocks of a Haar-random isometry
/// C^d → C^{d·kraus_rank}. Deterministic for a fixed seed.
KrausSet sample_cptp(int dim, int kraus_rank, std::uint64_t seed);

/// Unital qubit channel T = O₁ diag(η) O₂ᵀ, η uniform on the set allowed by
/// 1 ± η₃ ≥ |η₁ ± η₂|, O₁, O₂ Haar on SO(3).
TransferMatrix sample_unital_qubit(std::uint64_t seed);

/// Deterministic counterpart of sample_unital_qubit.
TransferMatrix unital_qubit(const EtaTriple& eta, const RMatrix& o1,
                            const RMatrix& o2);

RMatrix haar_rotation(Rng& rng, int n);
CMatrix haar_isometry(Rng& rng, int rows, int cols);

/// Normalized standard complex Gaussian vector.
CVector haar_pure_state(Rng& rng, int dim);

}  // namespace qgauge
