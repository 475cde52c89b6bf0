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

#include "qgauge/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgauge/sampling.hpp"

namespace qgauge {

namespace {

double fidelity_from_trace(cplx trace, int d) {
  if (std::abs(trace.imag()) >= 1e-10) {
    throw Error(ErrorKind::Structural,
                "trace has imaginary residue " + std::to_string(trace.imag()));
  }
  return (trace.real() + d) / (static_cast<double>(d) * (d + 1));
}

void require_samples(int n) {
  if (n < 2) throw Error(ErrorKind::Domain, "Monte-Carlo estimates need n >= 2");
}

// Welford accumulation.
class RunningMoments {
 public:
  void push(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
  }
  MonteCarloEstimate estimate() const {
    const double var = n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0;
    return {mean_, std::sqrt(std::max(0.0, var) / static_cast<double>(n_))};
  }

 private:
  long long n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace

double avg_gate_fidelity(const Superoperator& phi) {
  return fidelity_from_trace(phi.matrix().trace(), phi.dim());
}

double avg_gate_fidelity_from_spectrum(const Spectrum& sp) {
  return fidelity_from_trace(sp.sum(), sp.dim());
}

MonteCarloEstimate mc_avg_gate_fidelity(const KrausSet& ks, int n, std::uint64_t seed) {
  require_samples(n);
  Rng rng(seed);
  RunningMoments acc;
  for (int i = 0; i < n; ++i) {
    const CVector psi = haar_pure_state(rng, ks.dim());
    double value = 0.0;
    for (const auto& k : ks.operators()) value += std::norm(psi.dot(k * psi));
    acc.push(value);
  }
  return acc.estimate();
}

double unitarity_exact(const TransferMatrix& tm) {
  const int d = tm.dim();
  if (d < 2) throw Error(ErrorKind::Domain, "unitarity needs dim >= 2");
  // Tr[Φ†Φ] = 1 + ‖k‖² + ‖T‖²_F in the orthonormal basis.
  const RMatrix full = tm.full();
  const double tr = (full.transpose() * full).trace();
  return (tr - 1.0 - tm.translation().squaredNorm()) / (static_cast<double>(d) * d - 1.0);
}

MonteCarloEstimate mc_unitarity(const KrausSet& ks, int n, std::uint64_t seed) {
  require_samples(n);
  const int d = ks.dim();
  if (d < 2) throw Error(ErrorKind::Domain, "unitarity needs dim >= 2");
  const CMatrix mixed_image = ks.apply(CMatrix::Identity(d, d) / static_cast<double>(d));
  const double scale = static_cast<double>(d) / (d - 1);
  Rng rng(seed);
  RunningMoments acc;
  for (int i = 0; i < n; ++i) {
    const CVector psi = haar_pure_state(rng, d);
    const CMatrix traceless = ks.apply(psi * psi.adjoint()) - mixed_image;
    acc.push(scale * traceless.squaredNorm());
  }
  return acc.estimate();
}

double unitarity_lower_from_r(double r, int dim) {
  if (r < 0.0 || dim < 2) throw Error(ErrorKind::Domain, "needs r >= 0 and dim >= 2");
  const double b = 1.0 - dim * r / (dim - 1.0);
  return b * b;
}

double unitarity_lower_from_spectrum(const Spectrum& sp) {
  const int d = sp.dim();
  if (d < 2) throw Error(ErrorKind::Domain, "needs dim >= 2");
  double sum = 0.0;
  for (const auto& v : sp.values()) sum += std::norm(v);
  return (sum - d) / (static_cast<double>(d) * (d - 1));
}

DiamondBounds diamond_bounds_from_r(double r, int dim) {
  if (r < 0.0 || dim < 1) throw Error(ErrorKind::Domain, "needs r >= 0");
  return {(dim + 1.0) * r / dim, std::sqrt(dim * (dim + 1.0) * r)};
}

double diamond_lower_wallman(double u, double r, int dim) {
  if (dim < 2) throw Error(ErrorKind::Domain, "needs dim >= 2");
  double radicand = u - 1.0 + 2.0 * dim * r / (dim - 1.0);
  if (radicand < -1e-12) {
    throw Error(ErrorKind::Domain, "inconsistent (u, r): radicand " + std::to_string(radicand));
  }
  radicand = std::max(0.0, radicand);
  const double d2 = static_cast<double>(dim) * dim;
  return std::sqrt((d2 - 1.0) / (2.0 * d2)) * std::sqrt(radicand);
}

MetricsReport metrics_report(const Spectrum& sp, const std::optional<TransferMatrix>& tm) {
  MetricsReport rep;
  const int d = sp.dim();
  rep.dim = d;
  rep.f_avg = avg_gate_fidelity_from_spectrum(sp);
  rep.error_rate = 1.0 - rep.f_avg;
  const double r = std::max(0.0, rep.error_rate);
  rep.u_lower_r = unitarity_lower_from_r(r, d);
  rep.u_lower_spectrum = unitarity_lower_from_spectrum(sp);
  const auto diamond = diamond_bounds_from_r(r, d);
  rep.diamond_lower_r = diamond.lower;
  rep.diamond_upper_r = diamond.upper;
  rep.diamond_lower_wallman =
      diamond_lower_wallman(std::max(rep.u_lower_r, rep.u_lower_spectrum), r, d);
  if (tm) {
    rep.unitarity = unitarity_exact(*tm);
    rep.diamond_lower_wallman_exact_u = diamond_lower_wallman(*rep.unitarity, r, d);
  }
  return rep;
}

}  // namespace qgauge
