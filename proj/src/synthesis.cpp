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

#include "qgauge/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qgauge/cp_criteria.hpp"

namespace qgauge {

namespace {

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorKind::Domain, std::string(name) + " must lie in [0, 1]");
  }
}

CMatrix classical_matrix(double a) {
  CMatrix s = CMatrix::Zero(4, 4);
  s(0, 0) = a;
  s(0, 3) = 1.0 - a;
  s(3, 0) = 1.0 - a;
  s(3, 3) = a;
  return s;
}

CMatrix phase_matrix(double alpha) {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = std::polar(1.0, -alpha);
  m(2, 2) = std::polar(1.0, alpha);
  m(3, 3) = 1.0;
  return m;
}

}  // namespace

namespace detail {
CMatrix mixture_matrix(double p, double a, double alpha) {
  return p * classical_matrix(a) + (1.0 - p) * phase_matrix(alpha);
}
}  // namespace detail

Superoperator classical_channel(double a) {
  require_unit_interval(a, "a");
  return Superoperator(2, classical_matrix(a));
}

Superoperator phase_unitary_channel(double alpha) {
  if (!std::isfinite(alpha)) throw Error(ErrorKind::Domain, "alpha must be finite");
  return Superoperator(2, phase_matrix(alpha));
}

Superoperator mixture_channel(double p, double a, double alpha) {
  require_unit_interval(p, "p");
  require_unit_interval(a, "a");
  if (!std::isfinite(alpha)) throw Error(ErrorKind::Domain, "alpha must be finite");
  return Superoperator(2, detail::mixture_matrix(p, a, alpha));
}

Superoperator synthesize_from_complex_pair(double x, cplx z) {
  if (!std::isfinite(x) || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorKind::Domain, "spectrum values must be finite");
  }
  if (z.imag() == 0.0) {
    throw Error(ErrorKind::Domain, "Im z = 0: use xi_from_real_spectrum for real spectra");
  }
  if (std::abs(x) > 1.0) throw Error(ErrorKind::Domain, "|x| must not exceed 1");
  const auto disc = complex_pair_disc(x, z);
  if (!disc.satisfied) {
    std::ostringstream msg;
    msg << "|z| <= (1+x)/2 violated: |z| = " << std::abs(z) << ", (1+x)/2 = " << 0.5 * (1.0 + x);
    throw Error(ErrorKind::NotRealizable, msg.str());
  }
  const double r = std::abs(z);
  const double alpha = std::arg(z);
  // |z| = 1 forces x = 1 and the formula for a degenerates; p = 0 limit.
  if (r >= 1.0 - 1e-12) return phase_unitary_channel(alpha);
  const double p = 1.0 - r;
  const double a = std::clamp((x - 2.0 * r + 1.0) / (2.0 - 2.0 * r), 0.0, 1.0);
  return mixture_channel(p, a, alpha);
}

Superoperator xi_from_real_spectrum(double l1, double l2, double l3) {
  const auto tetra = real_tetrahedron(l1, l2, l3);
  if (!tetra.satisfied) {
    std::ostringstream msg;
    msg << "eigenvalues (" << l1 << ", " << l2 << ", " << l3
        << ") lie outside the tetrahedron, margin " << tetra.margin;
    throw Error(ErrorKind::NotRealizable, msg.str());
  }
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = 0.5 * (1.0 + l1);
  m(0, 3) = m(3, 0) = 0.5 * (1.0 - l1);
  m(1, 1) = m(2, 2) = 0.5 * (l2 + l3);
  m(1, 2) = m(2, 1) = 0.5 * (l3 - l2);
  return Superoperator(2, std::move(m));
}

Superoperator det_saturating_channel() {
  return transfer_to_superoperator(
      TransferMatrix(2, RVector::Zero(3), -RMatrix::Identity(3, 3) / 3.0));
}

}  // namespace qgauge
