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

#include "qgauge/gauge.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "qgauge/sampling.hpp"
#include "qgauge/spectrum.hpp"
#include "qgauge/testing.hpp"

namespace qgauge {

namespace {

double condition_number(const RMatrix& x) {
  Eigen::JacobiSVD<RMatrix> svd(x);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  return smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
}

void require_dims(int expected, int actual) {
  if (expected != actual) throw Error(ErrorKind::Structural, "gauge/channel dimension mismatch");
}

}  // namespace

GaugeTransform::GaugeTransform(int dim, RMatrix x, double condition_cap)
    : GaugeTransform(Unchecked{}, dim, std::move(x)) {
  if (x_(0, 0) != 1.0) throw Error(ErrorKind::Structural, "gauge must have X(0,0) = 1");
  for (Eigen::Index j = 1; j < x_.cols(); ++j) {
    if (x_(0, j) != 0.0) {
      throw Error(ErrorKind::Structural, "gauge first row must be (1, 0, ..., 0)");
    }
  }
  if (!std::isfinite(condition_)) throw Error(ErrorKind::Numeric, "gauge matrix is singular");
  if (condition_ > condition_cap) {
    throw Error(ErrorKind::Numeric,
                "gauge condition " + std::to_string(condition_) + " exceeds cap");
  }
  // The inverse of a group element has first row e0 exactly.
  x_inv_.row(0).setZero();
  x_inv_(0, 0) = 1.0;
}

GaugeTransform::GaugeTransform(Unchecked, int dim, RMatrix x) : dim_(dim), x_(std::move(x)) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim) * dim;
  if (dim < 1 || x_.rows() != n || x_.cols() != n) {
    throw Error(ErrorKind::Structural, "gauge matrix must be dim^2 x dim^2");
  }
  if (!x_.allFinite()) throw Error(ErrorKind::Structural, "gauge matrix has non-finite entries");
  condition_ = condition_number(x_);
  if (!std::isfinite(condition_)) throw Error(ErrorKind::Numeric, "gauge matrix is singular");
  x_inv_ = x_.fullPivLu().inverse();
}

GaugeTransform GaugeTransform::identity(int dim) {
  return GaugeTransform(dim, RMatrix::Identity(dim * dim, dim * dim));
}

GaugeTransform GaugeTransform::compose(const GaugeTransform& other) const {
  require_dims(dim_, other.dim_);
  return GaugeTransform(dim_, x_ * other.x_, std::numeric_limits<double>::infinity());
}

GaugeTransform GaugeTransform::inverse() const {
  return GaugeTransform(dim_, x_inv_, std::numeric_limits<double>::infinity());
}

CMatrix GaugeTransform::computational_matrix() const {
  const CMatrix u = basis_change(dim_);
  return u * x_.cast<cplx>() * u.adjoint();
}

CMatrix GaugeTransform::computational_inverse() const {
  const CMatrix u = basis_change(dim_);
  return u * x_inv_.cast<cplx>() * u.adjoint();
}

GaugeTransform make_unchecked_gauge(int dim, RMatrix x) {
  return GaugeTransform(GaugeTransform::Unchecked{}, dim, std::move(x));
}

GaugeTransform broken_gauge(int dim, double offset) {
  RMatrix x = RMatrix::Identity(dim * dim, dim * dim);
  x.row(0).tail(dim * dim - 1).setConstant(offset);
  return make_unchecked_gauge(dim, std::move(x));
}

GaugeTransform random_gauge(int dim, double strength, std::uint64_t seed, double condition_cap) {
  if (!(strength >= 0.0)) throw Error(ErrorKind::Domain, "gauge strength must be >= 0");
  const int n = dim * dim;
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int attempt = 0; attempt < 100; ++attempt) {
    RMatrix g(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) g(i, j) = normal(rng);
    g.row(0).setZero();
    RMatrix x = RMatrix::Identity(n, n) + strength * g;
    try {
      return GaugeTransform(dim, std::move(x), condition_cap);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Numeric) throw;
    }
  }
  throw Error(ErrorKind::Numeric, "random_gauge: 100 draws exceeded the condition cap");
}

Superoperator apply_gauge(const Superoperator& phi, const GaugeTransform& x) {
  require_dims(x.dim(), phi.dim());
  return Superoperator(phi.dim(),
                       x.computational_inverse() * phi.matrix() * x.computational_matrix());
}

// ---------------------------------------------------------------------------

GateSet::GateSet(int dim, std::vector<Superoperator> gates, CVector state,
                 Eigen::RowVectorXcd effect, Frame frame)
    : dim_(dim), gates_(std::move(gates)), state_(std::move(state)),
      effect_(std::move(effect)), frame_(frame) {}

GateSet GateSet::physical(std::vector<Superoperator> gates, const CMatrix& rho,
                          const CMatrix& effect) {
  const int d = static_cast<int>(rho.rows());
  if (d < 1 || rho.cols() != d || effect.rows() != d || effect.cols() != d) {
    throw Error(ErrorKind::Structural, "state and effect must be dim x dim");
  }
  for (const auto& g : gates) require_dims(d, g.dim());
  constexpr double tol = 1e-10;
  if (max_abs(CMatrix(rho - rho.adjoint())) > tol || max_abs(CMatrix(effect - effect.adjoint())) > tol) {
    throw Error(ErrorKind::Structural, "state and effect must be Hermitian");
  }
  if (std::abs(rho.trace() - 1.0) > tol) throw Error(ErrorKind::Structural, "state must have unit trace");
  Eigen::SelfAdjointEigenSolver<CMatrix> rs(rho, Eigen::EigenvaluesOnly);
  if (rs.eigenvalues().minCoeff() < -tol) throw Error(ErrorKind::Structural, "state is not positive");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(effect, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol || es.eigenvalues().maxCoeff() > 1.0 + tol) {
    throw Error(ErrorKind::Structural, "effect eigenvalues must lie in [0, 1]");
  }
  return GateSet(d, std::move(gates), vec(rho), vec(effect).adjoint(), Frame::Physical);
}

GateSet transform_gateset(const GateSet& gs, const GaugeTransform& x) {
  require_dims(x.dim(), gs.dim());
  const CMatrix xc = x.computational_matrix();
  const CMatrix xinv = x.computational_inverse();
  std::vector<Superoperator> gates;
  gates.reserve(gs.gates().size());
  for (const auto& g : gs.gates()) gates.emplace_back(gs.dim(), xinv * g.matrix() * xc);
  return GateSet(gs.dim(), std::move(gates), xinv * gs.state(), gs.effect() * xc, Frame::Gauge);
}

namespace {

CVector propagate(const GateSet& gs, const std::vector<int>& seq) {
  CVector v = gs.state();
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (*it < 0 || static_cast<std::size_t>(*it) >= gs.gates().size()) {
      throw Error(ErrorKind::Structural, "gate index out of range");
    }
    v = gs.gates()[static_cast<std::size_t>(*it)].matrix() * v;
  }
  return v;
}

double real_probability(cplx p) {
  if (std::abs(p.imag()) > 1e-9 * std::max(1.0, std::abs(p))) {
    throw Error(ErrorKind::Structural,
                "probability has imaginary residue " + std::to_string(p.imag()));
  }
  return p.real();
}

Eigen::RowVectorXcd trace_functional(int dim) {
  return vec(CMatrix::Identity(dim, dim)).adjoint();
}

}  // namespace

double sequence_probability(const GateSet& gs, const std::vector<int>& seq) {
  return real_probability(gs.effect() * propagate(gs, seq));
}

double complement_probability(const GateSet& gs, const std::vector<int>& seq) {
  const CVector v = propagate(gs, seq);
  return real_probability(((trace_functional(gs.dim()) - gs.effect()) * v).value());
}

OrbitReport verify_orbit_invariance(const GateSet& gs, const GaugeTransform& x, int max_len) {
  if (max_len < 1) throw Error(ErrorKind::Domain, "max_len must be >= 1");
  const GateSet moved = transform_gateset(gs, x);
  OrbitReport rep;
  rep.condition = x.condition_estimate();

  const Eigen::RowVectorXcd tr = trace_functional(gs.dim());
  const auto deviation = [&](const CVector& a, const CVector& b) {
    const double pe = real_probability(gs.effect() * a);
    const double qe = real_probability(moved.effect() * b);
    const double pc = real_probability(tr * a) - pe;
    const double qc = real_probability(tr * b) - qe;
    return std::max(std::abs(pe - qe), std::abs(pc - qc));
  };

  // Gates are prepended, so the vectors of a prefix-free walk are reused.
  std::function<void(const CVector&, const CVector&, int)> walk =
      [&](const CVector& a, const CVector& b, int depth) {
        rep.max_prob_deviation = std::max(rep.max_prob_deviation, deviation(a, b));
        ++rep.sequences;
        if (depth == max_len) return;
        for (std::size_t k = 0; k < gs.gates().size(); ++k) {
          walk(gs.gates()[k].matrix() * a, moved.gates()[k].matrix() * b, depth + 1);
        }
      };
  walk(gs.state(), moved.state(), 0);

  for (std::size_t k = 0; k < gs.gates().size(); ++k) {
    const auto before = spectrum(gs.gates()[k]).values();
    const auto after = spectrum(moved.gates()[k]).values();
    rep.max_spectral_deviation =
        std::max(rep.max_spectral_deviation, spectral_distance(before, after));
  }
  return rep;
}

}  // namespace qgauge
