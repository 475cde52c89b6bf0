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

#include "qgauge/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qgauge {

namespace {

bool greedy_conjugate_closed(const std::vector<cplx>& values, double tol) {
  std::vector<bool> used(values.size(), false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    if (std::abs(values[i].imag()) * 2.0 <= tol) continue;  // self-conjugate
    const cplx target = std::conj(values[i]);
    std::size_t best = values.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(values[j] - target);
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best == values.size() || best_dist > tol) return false;
    used[best] = true;
  }
  return true;
}

std::vector<cplx> to_std(const Eigen::VectorXcd& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace

Spectrum Spectrum::from_values(int dim, std::vector<cplx> values) {
  if (dim < 1 || values.size() != static_cast<std::size_t>(dim) * dim) {
    throw Error(ErrorKind::Structural, "spectrum must hold dim^2 values");
  }
  for (const auto& v : values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorKind::Structural, "spectrum has non-finite values");
    }
  }
  Spectrum sp;
  sp.dim_ = dim;
  sp.values_ = std::move(values);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sp.values_.size(); ++i) {
    const double dist = std::abs(sp.values_[i] - 1.0);
    if (dist < best) {
      best = dist;
      sp.unit_index_ = i;
    }
  }
  sp.unit_flagged_ = best > kUnitFlagDistance;
  double lead = 0.0;
  for (std::size_t i = 0; i < sp.values_.size(); ++i) {
    if (i != sp.unit_index_) lead = std::max(lead, std::abs(sp.values_[i]));
  }
  sp.gap_ = 1.0 - lead;
  sp.conjugation_closed_ = greedy_conjugate_closed(sp.values_, kConjugatePairTol);
  return sp;
}

std::vector<cplx> Spectrum::nonunit() const {
  std::vector<cplx> out;
  out.reserve(values_.size() - 1);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i != unit_index_) out.push_back(values_[i]);
  }
  return out;
}

std::vector<double> Spectrum::nonunit_moduli() const {
  std::vector<double> out;
  for (const auto& v : nonunit()) out.push_back(std::abs(v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double Spectrum::nonunit_product() const {
  cplx p = 1.0;
  for (const auto& v : nonunit()) p *= v;
  return p.real();
}

cplx Spectrum::sum() const {
  return std::accumulate(values_.begin(), values_.end(), cplx(0.0));
}

Spectrum spectrum(const Superoperator& phi) {
  RMatrix real_form;
  bool hermiticity_preserving = true;
  try {
    real_form = transfer_form(phi);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonHermitianImage) throw;
    hermiticity_preserving = false;
  }
  if (hermiticity_preserving) {
    // Real Schur form keeps complex eigenvalues in exact conjugate pairs.
    Eigen::EigenSolver<RMatrix> solver(real_form, false);
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorKind::Numeric,
                  "real eigensolver did not converge on a " + std::to_string(real_form.rows()) +
                      "x" + std::to_string(real_form.cols()) + " matrix");
    }
    return Spectrum::from_values(phi.dim(), to_std(solver.eigenvalues()));
  }
  Eigen::ComplexEigenSolver<CMatrix> solver(phi.matrix(), false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::Numeric,
                "complex eigensolver did not converge on a " +
                    std::to_string(phi.matrix().rows()) + "x" +
                    std::to_string(phi.matrix().cols()) + " matrix");
  }
  return Spectrum::from_values(phi.dim(), to_std(solver.eigenvalues()));
}

QubitSpectralClass classify_qubit_spectrum(const Spectrum& sp) {
  if (sp.dim() != 2) {
    throw Error(ErrorKind::UnsupportedDimension, "qubit classification needs dim = 2");
  }
  if (!sp.conjugation_closed()) {
    throw Error(ErrorKind::MalformedSpectrum, "spectrum is not closed under conjugation");
  }
  auto rest = sp.nonunit();
  const bool all_real = std::all_of(rest.begin(), rest.end(),
                                    [](cplx v) { return std::abs(v.imag()) < kRealClassTol; });
  if (all_real) {
    std::sort(rest.begin(), rest.end(), [](cplx a, cplx b) { return std::abs(a) > std::abs(b); });
    return AllReal{{rest[0].real(), rest[1].real(), rest[2].real()}};
  }
  // The real member is the one with the smallest imaginary part.
  std::sort(rest.begin(), rest.end(),
            [](cplx a, cplx b) { return std::abs(a.imag()) < std::abs(b.imag()); });
  const cplx z = rest[1].imag() > 0.0 ? rest[1] : rest[2];
  return ConjugatePair{rest[0].real(), z};
}

SingularTriple::SingularTriple(double a, double b, double c) : s_{a, b, c} {
  for (double v : s_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::Domain, "singular values must be finite and nonnegative");
    }
  }
  std::sort(s_.begin(), s_.end(), std::greater<>());
}

std::vector<double> singular_values(const RMatrix& m) {
  if (m.size() == 0) return {};
  Eigen::JacobiSVD<RMatrix> svd(m);
  const auto& sv = svd.singularValues();
  std::vector<double> out(sv.data(), sv.data() + sv.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

MajorizationReport check_majorization(std::span<const double> moduli,
                                      std::span<const double> singulars) {
  if (moduli.size() != singulars.size()) {
    throw Error(ErrorKind::Structural, "majorization inputs differ in length");
  }
  const auto decreasing = [](std::span<const double> v) {
    return std::is_sorted(v.begin(), v.end(), std::greater<>());
  };
  if (!decreasing(moduli) || !decreasing(singulars)) {
    throw Error(ErrorKind::Structural, "majorization inputs must be decreasing");
  }
  MajorizationReport rep;
  rep.weak_ok = rep.log_ok = true;
  const std::size_t n = moduli.size();
  double sum_m = 0.0, sum_s = 0.0, prod_m = 1.0, prod_s = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    sum_m += moduli[k];
    sum_s += singulars[k];
    prod_m *= moduli[k];
    prod_s *= singulars[k];
    const double wm = sum_s - sum_m;
    rep.weak_margins.push_back(wm);
    if (wm < -1e-12 * std::max(1.0, sum_s)) rep.weak_ok = false;
    if (k + 1 < n) {
      const double lm = prod_s - prod_m;
      rep.log_margins.push_back(lm);
      if (lm < -1e-9 * std::max(1.0, prod_s)) rep.log_ok = false;
    }
  }
  rep.det_gap = prod_s - prod_m;
  rep.det_ok = std::abs(rep.det_gap) <= 1e-9 * std::max(1.0, prod_s);
  return rep;
}

double spectral_distance(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Structural, "spectra differ in size");
  const std::size_t n = a.size();
  if (n == 0) return 0.0;
  std::vector<double> dist(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = std::abs(a[i] - b[j]);
  std::vector<double> levels = dist;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // Perfect matching restricted to edges with dist <= threshold (Kuhn).
  const auto has_matching = [&](double threshold) {
    std::vector<int> match_b(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<bool> seen(n, false);
      std::function<bool(std::size_t)> augment = [&](std::size_t u) {
        for (std::size_t v = 0; v < n; ++v) {
          if (seen[v] || dist[u * n + v] > threshold) continue;
          seen[v] = true;
          if (match_b[v] < 0 || augment(static_cast<std::size_t>(match_b[v]))) {
            match_b[v] = static_cast<int>(u);
            return true;
          }
        }
        return false;
      };
      if (!augment(i)) return false;
    }
    return true;
  };
  std::size_t lo = 0, hi = levels.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (has_matching(levels[mid])) hi = mid; else lo = mid + 1;
  }
  return levels[lo];
}

}  // namespace qgauge
