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

#include "qgauge/cp_criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qgauge/sampling.hpp"

namespace qgauge {

DetSign det_sign_of(double det) {
  if (std::abs(det) < kDetZeroBand) return DetSign::Zero;
  return det > 0.0 ? DetSign::Positive : DetSign::Negative;
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::None: return "none";
    case Branch::PositiveDet: return "det>=0";
    case Branch::NegativeDet: return "det<0";
    case Branch::ZeroDet: return "det=0";
  }
  return "none";
}

namespace {

Branch branch_of(DetSign sign) {
  switch (sign) {
    case DetSign::Positive: return Branch::PositiveDet;
    case DetSign::Negative: return Branch::NegativeDet;
    case DetSign::Zero: return Branch::ZeroDet;
  }
  return Branch::None;
}

void require_qubit(const Spectrum& sp, const char* what) {
  if (sp.dim() != 2) {
    throw Error(ErrorKind::UnsupportedDimension, std::string(what) + " is defined for qubits only");
  }
}

// Signed-determinant branch rule shared by the eta and singular-value forms.
double branch_margin(double sum, double min_value, DetSign sign) {
  const double positive = 1.0 - sum + 2.0 * min_value;
  const double negative = 1.0 - sum;
  switch (sign) {
    case DetSign::Positive: return positive;
    case DetSign::Negative: return negative;
    case DetSign::Zero: return std::max(positive, negative);
  }
  return negative;
}

double z_value(double e1, double e2, double e3, const KVector& k) {
  const double n2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
  const double mix = e1 * e1 * (2.0 * k[0] * k[0] - n2) + e2 * e2 * (2.0 * k[1] * k[1] - n2) +
                     e3 * e3 * (2.0 * k[2] * k[2] - n2);
  return n2 * n2 - 2.0 * n2 - 2.0 * mix + q_product(e1, e2, e3);
}

double z_singular_margin(const SingularTriple& s, const KVector& k, DetSign sign) {
  const double z = z_value(s.s1(), s.s2(), s.s3(), k);
  const double shifted = z + 16.0 * s.product();  // Z(s) - 16 det T, det T = -s1 s2 s3
  switch (sign) {
    case DetSign::Positive: return z;
    case DetSign::Negative: return shifted;
    case DetSign::Zero: return std::max(z, shifted);
  }
  return z;
}

}  // namespace

CriterionVerdict make_verdict(std::string criterion, double margin, Branch branch) {
  CriterionVerdict v;
  v.criterion = std::move(criterion);
  v.margin = margin;
  v.satisfied = margin >= -kVerdictTol;
  v.branch = branch;
  return v;
}

CriterionVerdict fa_conditions(const EtaTriple& eta) {
  const double plus = 1.0 + eta.e3 - std::abs(eta.e1 + eta.e2);
  const double minus = 1.0 - eta.e3 - std::abs(eta.e1 - eta.e2);
  return make_verdict("fa_conditions", std::min(plus, minus));
}

CriterionVerdict fa_singular(const SingularTriple& s, DetSign sign) {
  return make_verdict("fa_singular", branch_margin(s.sum(), s.s3(), sign), branch_of(sign));
}

CriterionVerdict theorem1(const Spectrum& sp) {
  require_qubit(sp, "theorem1");
  const auto m = sp.nonunit_moduli();
  const DetSign sign = det_sign_of(sp.nonunit_product());
  return make_verdict("theorem1", branch_margin(m[0] + m[1] + m[2], m[2], sign), branch_of(sign));
}

CriterionVerdict real_tetrahedron(double l1, double l2, double l3) {
  const double margin = std::min({1.0 + l1 + l2 + l3, 1.0 + l1 - l2 - l3,
                                  1.0 - l1 + l2 - l3, 1.0 - l1 - l2 + l3});
  return make_verdict("real_tetrahedron", margin);
}

CriterionVerdict complex_pair_disc(double x, cplx z) {
  double margin = 0.5 * (1.0 + x) - std::abs(z);
  if (std::abs(x) > 1.0) margin = std::min(margin, 1.0 - std::abs(x));
  return make_verdict("complex_pair_disc", margin);
}

CriterionVerdict det_range_check(const Spectrum& sp) {
  require_qubit(sp, "det_range_check");
  const double p = sp.nonunit_product();
  return make_verdict("det_range", std::min(p + 1.0 / 27.0, 1.0 - p),
                      branch_of(det_sign_of(p)));
}

KNormBound k_norm_bound(const Spectrum& sp) {
  require_qubit(sp, "k_norm_bound");
  double b = 1.0 + 2.0 * sp.nonunit_product();
  for (const auto& v : sp.nonunit()) b -= std::norm(v);
  return KNormBound{b, b >= -kVerdictTol};
}

CriterionVerdict k_norm_check(const Spectrum& sp, double k_norm_sq) {
  return make_verdict("k_norm_bound", k_norm_bound(sp).bound - k_norm_sq);
}

double q_product(double e1, double e2, double e3) {
  return (1.0 + e1 + e2 + e3) * (1.0 + e1 - e2 - e3) * (1.0 - e1 + e2 - e3) *
         (1.0 - e1 - e2 + e3);
}

CriterionVerdict z_condition(const EtaTriple& eta, const KVector& k) {
  return make_verdict("z_condition", z_value(eta.e1, eta.e2, eta.e3, k));
}

CriterionVerdict z_condition_singular(const SingularTriple& s, const KVector& k, DetSign sign) {
  return make_verdict("z_condition_singular", z_singular_margin(s, k, sign), branch_of(sign));
}

// ---------------------------------------------------------------------------
// Z feasibility search

namespace {

constexpr int kParams = 5;
using Point = std::array<double, kParams>;

/// Parametrization of the search space by the unit cube:
///   p0 → s1 ∈ [m1, max(1, m1)]
///   p1 → s2 ∈ [lower(s1), s1], lower enforcing the weak and log partial
///        inequalities and s3 ≤ s2
///   s3 = |P| / (s1 s2) (product equality)
///   p2 → ‖k‖² ∈ [0, B]
///   p3, p4 → polar/azimuthal angle of k in the positive octant.
class ZProblem {
 public:
  ZProblem(const std::vector<double>& moduli, double det, double k_bound)
      : m1_(moduli[0]), m2_(moduli[1]), m3_(moduli[2]),
        p_abs_(std::abs(det)), det_(det), sign_(det_sign_of(det)),
        k_bound_(std::max(0.0, k_bound)) {}

  struct SPart {
    double s1, s2, s3;
    double k_free;  // min of the margins that do not depend on k
  };

  SPart singulars(double u, double v) const {
    const double s1 = m1_ + u * (std::max(1.0, m1_) - m1_);
    double s2 = 0.0, s3 = 0.0;
    if (s1 > 0.0) {
      double lo = std::max({m1_ * m2_ / s1, m1_ + m2_ - s1, std::sqrt(p_abs_ / s1), 0.0});
      lo = std::min(lo, s1);
      s2 = lo + v * (s1 - lo);
      s3 = s2 > 0.0 ? std::min(p_abs_ / (s1 * s2), s2) : 0.0;
    }
    const double sum = s1 + s2 + s3;
    const double fa = branch_margin(sum, s3, sign_);
    const double weak = sum - (m1_ + m2_ + m3_);
    return {s1, s2, s3, std::min(fa, weak)};
  }

  double k_margin(const SPart& s, double kappa, const KVector& w) const {
    const double r = std::sqrt(kappa);
    const KVector k{r * w[0], r * w[1], r * w[2]};
    const double z = z_singular_margin(SingularTriple(s.s1, s.s2, s.s3), k, sign_);
    const double kb = 1.0 - (s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3) + 2.0 * det_ - kappa;
    return std::min(z, kb);
  }

  static KVector direction(double th, double ph) {
    const double theta = th * std::numbers::pi / 2.0;
    const double phi = ph * std::numbers::pi / 2.0;
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
  }

  static Point clamp(Point p) {
    for (auto& x : p) x = std::clamp(x, 0.0, 1.0);
    return p;
  }

  double eval(const Point& raw) const {
    const Point p = clamp(raw);
    const SPart s = singulars(p[0], p[1]);
    return std::min(s.k_free, k_margin(s, p[2] * k_bound_, direction(p[3], p[4])));
  }

  Witness witness(const Point& raw) const {
    const Point p = clamp(raw);
    const SPart s = singulars(p[0], p[1]);
    const double r = std::sqrt(p[2] * k_bound_);
    const KVector w = direction(p[3], p[4]);
    return Witness{SingularTriple(s.s1, s.s2, s.s3), KVector{r * w[0], r * w[1], r * w[2]}};
  }

  double k_bound() const { return k_bound_; }

 private:
  double m1_, m2_, m3_, p_abs_, det_;
  DetSign sign_;
  double k_bound_;
};

/// Maximizes f over the unit cube (points are clamped on evaluation).
template <typename F>
std::pair<Point, double> nelder_mead_max(F&& f, Point start, double step, int iterations) {
  std::array<Point, kParams + 1> simplex;
  std::array<double, kParams + 1> value;
  simplex[0] = start;
  for (int i = 0; i < kParams; ++i) {
    Point p = start;
    p[i] += (p[i] + step <= 1.0) ? step : -step;
    simplex[i + 1] = p;
  }
  for (int i = 0; i <= kParams; ++i) value[i] = f(simplex[i]);

  const auto affine = [](const Point& a, const Point& b, double t) {
    Point out;
    for (int i = 0; i < kParams; ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
  };

  for (int it = 0; it < iterations; ++it) {
    std::array<int, kParams + 1> order;
    for (int i = 0; i <= kParams; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return value[a] > value[b]; });
    const int best = order.front(), worst = order.back(), second = order[kParams - 1];

    Point centroid{};
    for (int i = 0; i <= kParams; ++i) {
      if (i == worst) continue;
      for (int j = 0; j < kParams; ++j) centroid[j] += simplex[i][j] / kParams;
    }
    const Point reflected = ZProblem::clamp(affine(centroid, simplex[worst], -1.0));
    const double fr = f(reflected);
    if (fr > value[best]) {
      const Point expanded = ZProblem::clamp(affine(centroid, simplex[worst], -2.0));
      const double fe = f(expanded);
      if (fe > fr) { simplex[worst] = expanded; value[worst] = fe; }
      else { simplex[worst] = reflected; value[worst] = fr; }
      continue;
    }
    if (fr > value[second]) {
      simplex[worst] = reflected;
      value[worst] = fr;
      continue;
    }
    const Point contracted = affine(centroid, simplex[worst], 0.5);
    const double fc = f(contracted);
    if (fc > value[worst]) {
      simplex[worst] = contracted;
      value[worst] = fc;
      continue;
    }
    for (int i = 0; i <= kParams; ++i) {
      if (i == best) continue;
      simplex[i] = affine(simplex[best], simplex[i], 0.5);
      value[i] = f(simplex[i]);
    }
  }
  int best = 0;
  for (int i = 1; i <= kParams; ++i) {
    if (value[i] > value[best]) best = i;
  }
  return {simplex[best], value[best]};
}

}  // namespace

ZFeasibility z_feasibility(const Spectrum& sp, int samples, std::uint64_t seed,
                           const ZSearchOptions& options) {
  require_qubit(sp, "z_feasibility");
  if (samples < 1) throw Error(ErrorKind::Domain, "z_feasibility needs samples >= 1");
  if (options.grid < 2) throw Error(ErrorKind::Domain, "z_feasibility grid must be >= 2");

  ZFeasibility out;
  const KNormBound kb = k_norm_bound(sp);
  if (!kb.feasible) {
    out.feasible = false;
    out.best_margin = kb.bound;
    out.k_norm_infeasible = true;
    return out;
  }

  const ZProblem problem(sp.nonunit_moduli(), sp.nonunit_product(), kb.bound);
  const auto f = [&](const Point& p) { return problem.eval(p); };

  // Grid phase over (s1, s2, ‖k‖²) with k along the coordinate axes and the
  // octant diagonal. Strict improvement keeps the lexicographically first
  // optimum. The first node (s = moduli, k = 0) is the normal-channel witness.
  const int g = options.grid;
  const double diag_th = std::acos(1.0 / std::sqrt(3.0)) / (std::numbers::pi / 2.0);
  const std::array<std::array<double, 2>, 4> dirs{{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {diag_th, 0.5}}};
  std::array<KVector, 4> dir_vecs;
  for (std::size_t i = 0; i < dirs.size(); ++i) dir_vecs[i] = ZProblem::direction(dirs[i][0], dirs[i][1]);

  Point best_point{};
  double best = -std::numeric_limits<double>::infinity();
  for (int iu = 0; iu < g; ++iu) {
    const double u = static_cast<double>(iu) / (g - 1);
    for (int iv = 0; iv < g; ++iv) {
      const double v = static_cast<double>(iv) / (g - 1);
      const auto s = problem.singulars(u, v);
      if (s.k_free <= best) continue;  // k cannot lift the minimum above best
      for (int it = 0; it < g; ++it) {
        const double t = static_cast<double>(it) / (g - 1);
        const std::size_t ndirs = it == 0 ? 1 : dir_vecs.size();
        for (std::size_t id = 0; id < ndirs; ++id) {
          const double val = std::min(s.k_free, problem.k_margin(s, t * problem.k_bound(), dir_vecs[id]));
          if (val > best) {
            best = val;
            best_point = Point{u, v, t, dirs[id][0], dirs[id][1]};
          }
        }
      }
    }
  }

  Rng rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int i = 0; i < samples; ++i) {
    Point p;
    for (auto& x : p) x = uniform(rng);
    const double val = f(p);
    if (val > best) {
      best = val;
      best_point = p;
    }
  }

  const auto [refined, refined_value] =
      nelder_mead_max(f, best_point, 1.0 / (g - 1), options.refine_iterations);
  if (refined_value > best) {
    best = refined_value;
    best_point = refined;
  }

  out.best_margin = best;
  out.feasible = best >= -kFeasibilityTol;
  out.witness = problem.witness(best_point);
  return out;
}

CriterionVerdict to_verdict(const ZFeasibility& z) {
  CriterionVerdict v;
  v.criterion = "z_feasibility";
  v.margin = z.best_margin;
  v.satisfied = z.feasible;
  v.witness = z.witness;
  return v;
}

}  // namespace qgauge
