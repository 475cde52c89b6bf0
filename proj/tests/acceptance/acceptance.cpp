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

// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qgauge/channel.hpp"
#include "qgauge/cli.hpp"
#include "qgauge/cp_criteria.hpp"
#include "qgauge/gauge.hpp"
#include "qgauge/metrics.hpp"
#include "qgauge/sampling.hpp"
#include "qgauge/spectrum.hpp"
#include "qgauge/synthesis.hpp"
#include "qgauge/testing.hpp"

using namespace qgauge;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  failures += !pass;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

constexpr double kTol1 = 1e-9;

struct Refutations {
  long long theorem1 = 0, det_range = 0, k_norm = 0, z = 0, not_cp = 0;
  long long total() const { return theorem1 + det_range + k_norm + z; }
};

void tally(Refutations& r, const Superoperator& phi, std::uint64_t seed) {
  if (!is_completely_positive(phi).completely_positive) ++r.not_cp;
  const Spectrum sp = spectrum(phi);
  const TransferMatrix tm = superoperator_to_transfer(phi);
  r.theorem1 += theorem1(sp).margin < -kTol1;
  r.det_range += det_range_check(sp).margin < -kTol1;
  r.k_norm += k_norm_check(sp, tm.translation().squaredNorm()).margin < -kTol1;
  r.z += z_feasibility(sp, 16, seed).best_margin < -kTol1;
}

void criterion1() {
  const auto t0 = Clock::now();
  Refutations cptp, unital;
  for (std::uint64_t s = 0; s < 10000; ++s) tally(cptp, kraus_to_superoperator(sample_cptp(2, 4, s)), s);
  for (std::uint64_t s = 0; s < 10000; ++s) tally(unital, transfer_to_superoperator(sample_unital_qubit(s)), s);
  const double dt = seconds_since(t0);
  const bool pass = cptp.total() == 0 && unital.total() == 0 && cptp.not_cp == 0 && unital.not_cp == 0 && dt <= 60.0;
  report(1, pass,
         fmt("soundness: cptp refutations t1=%lld det=%lld k=%lld z=%lld, unital t1=%lld det=%lld k=%lld z=%lld, "
             "oracle rejects cptp=%lld unital=%lld, tol 1e-9, %.1fs (limit 60s)",
             cptp.theorem1, cptp.det_range, cptp.k_norm, cptp.z, unital.theorem1, unital.det_range, unital.k_norm,
             unital.z, cptp.not_cp, unital.not_cp, dt));
}

void criterion2() {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  long long disagree = 0;
  for (int t = 0; t < 100000; ++t) {
    const EtaTriple e{u(rng), u(rng), u(rng)};
    const SingularTriple s(std::abs(e.e1), std::abs(e.e2), std::abs(e.e3));
    disagree += fa_conditions(e).satisfied != fa_singular(s, det_sign_of(e.product())).satisfied;
  }
  report(2, disagree == 0, fmt("branch equivalence: %lld disagreements over 1e5 eta (exact boolean)", disagree));
}

void criterion3() {
  double det_min = 1.0;
  long long not_cp = 0;
  for (std::uint64_t s = 0; s < 10000; ++s) {
    const Superoperator phi = kraus_to_superoperator(sample_cptp(2, 1 + static_cast<int>(s % 4), s));
    not_cp += !is_completely_positive(phi).completely_positive;
    det_min = std::min(det_min, superoperator_to_transfer(phi).bloch_map().determinant());
  }
  const Superoperator sat = det_saturating_channel();
  const double det_sat = superoperator_to_transfer(sat).bloch_map().determinant();
  const double choi_min = is_completely_positive(sat).min_eigenvalue;
  const bool pass = not_cp == 0 && det_min >= -1.0 / 27 - 1e-9 && std::abs(det_sat + 1.0 / 27) <= 1e-15 &&
                    std::abs(choi_min) <= 1e-10;
  report(3, pass,
         fmt("det extremes: min det T = %.12f (bound -1/27 - 1e-9), saturating det T + 1/27 = %.1e, "
             "Choi min eig = %.1e (tol 1e-10)",
             det_min, det_sat + 1.0 / 27, choi_min));
}

struct RegionStats {
  double r_disc_in = 0.0, r_disc_out = 2.0, r_oracle_in = 0.0, r_oracle_out = 2.0;
  long long disagree = 0, disagree_far = 0;
};

RegionStats region_stats(double x, int grid) {
  RegionStats st;
  const double radius = (1.0 + x) / 2.0;
  const double h = 2.0 / (grid - 1);
  for (const auto& p : cli::region_points(x, grid)) {
    const double r = std::hypot(p.re, p.im);
    (p.disc ? st.r_disc_in : st.r_disc_out) = p.disc ? std::max(st.r_disc_in, r) : std::min(st.r_disc_out, r);
    if (!p.oracle) continue;
    (*p.oracle ? st.r_oracle_in : st.r_oracle_out) =
        *p.oracle ? std::max(st.r_oracle_in, r) : std::min(st.r_oracle_out, r);
    if (*p.oracle != p.disc) {
      ++st.disagree;
      // A cell touches the circle when one of its corners lies on the other side.
      st.disagree_far += std::abs(r - radius) > h * std::numbers::sqrt2;
    }
  }
  return st;
}

void criterion4() {
  const auto t0 = Clock::now();
  const int grid = 201;
  const double h = 2.0 / (grid - 1);
  bool pass = true;
  std::string detail = "complex-eigenvalue region:";
  for (double x : {0.4, -0.4}) {
    const RegionStats st = region_stats(x, grid);
    const double radius = (1.0 + x) / 2.0;
    const bool ok = st.r_disc_in <= radius + 1e-12 && st.r_disc_out > radius && st.r_disc_in >= radius - h &&
                    st.r_oracle_in <= radius + h && st.r_oracle_out >= radius - h && st.disagree_far == 0;
    pass = pass && ok;
    detail += fmt(" x=%+.1f radius %.1f (disc in<=%.4f, oracle in<=%.4f out>=%.4f, disagreements %lld, away from "
                  "boundary %lld);",
                  x, radius, st.r_disc_in, st.r_oracle_in, st.r_oracle_out, st.disagree, st.disagree_far);
  }
  const double dt = seconds_since(t0);
  pass = pass && dt <= 30.0;
  report(4, pass, detail + fmt(" %.1fs (limit 30s)", dt));
}

void criterion5() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1), u01(0, 1), ang(-std::numbers::pi, std::numbers::pi);
  double worst_eig = 0.0, worst_spec = 0.0;
  int made = 0;
  while (made < 10000) {
    const double x = u(rng);
    const double r = u01(rng) * (1.0 + x) / 2.0;
    const double th = ang(rng);
    if (std::abs(std::sin(th)) < 1e-9 || r <= 0.0) continue;
    ++made;
    const cplx z = std::polar(r, th);
    const Superoperator m = synthesize_from_complex_pair(x, z);
    worst_eig = std::min(worst_eig, is_completely_positive(m).min_eigenvalue);
    const std::vector<cplx> want{1.0, x, z, std::conj(z)};
    worst_spec = std::max(worst_spec, spectral_distance(spectrum(m).values(), want));
  }
  double xi_eig = 0.0, xi_spec = 0.0, xi_normal = 0.0;
  made = 0;
  while (made < 10000) {
    const double a = u(rng), b = u(rng), c = u(rng);
    if (!real_tetrahedron(a, b, c).satisfied) continue;
    ++made;
    const Superoperator xi = xi_from_real_spectrum(a, b, c);
    const CMatrix& m = xi.matrix();
    xi_normal = std::max(xi_normal, max_abs(CMatrix(m * m.adjoint() - m.adjoint() * m)));
    xi_eig = std::min(xi_eig, is_completely_positive(xi).min_eigenvalue);
    const std::vector<cplx> want{1.0, a, b, c};
    xi_spec = std::max(xi_spec, spectral_distance(spectrum(xi).values(), want));
  }
  const bool pass = worst_eig >= -1e-10 && worst_spec <= 1e-9 && xi_eig >= -1e-10 && xi_spec <= 1e-9 &&
                    xi_normal <= 1e-12;
  report(5, pass,
         fmt("synthesis: mixture min Choi eig %.1e, spectrum err %.1e; Xi min Choi eig %.1e, spectrum err %.1e, "
             "normality %.1e (tols 1e-10, 1e-9, 1e-12)",
             worst_eig, worst_spec, xi_eig, xi_spec, xi_normal));
}

void criterion6() {
  double worst_prob_ratio = 0.0, worst_spec = 0.0;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> strength(0, 0.5);
  CMatrix ket0 = CMatrix::Zero(2, 2);
  ket0(0, 0) = 1.0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    std::vector<Superoperator> gates;
    for (int g = 0; g < 2; ++g) gates.push_back(kraus_to_superoperator(sample_cptp(2, 1 + g, 4 * s + g)));
    const GateSet gs = GateSet::physical(std::move(gates), ket0, ket0);
    const GaugeTransform x = random_gauge(2, strength(rng), s);
    const OrbitReport r = verify_orbit_invariance(gs, x, 3);
    worst_prob_ratio = std::max(worst_prob_ratio, r.max_prob_deviation / (1e-9 * r.condition));
    worst_spec = std::max(worst_spec, r.max_spectral_deviation);
  }
  const GateSet gs = GateSet::physical({kraus_to_superoperator(sample_cptp(2, 2, 1))}, ket0, ket0);
  const double broken = verify_orbit_invariance(gs, broken_gauge(2, 0.1), 3).max_prob_deviation;
  const bool pass = worst_prob_ratio <= 1.0 && worst_spec <= 1e-8 && broken > 1e-9;
  report(6, pass,
         fmt("gauge invariance: worst prob deviation %.2e x (1e-9 cond), spectral %.1e (tol 1e-8); broken gauge "
             "deviation %.3e",
             worst_prob_ratio, worst_spec, broken));
}

std::vector<CMatrix> pauli_kraus(double p0, double p1, double p2, double p3) {
  const cplx i(0, 1);
  CMatrix id = CMatrix::Identity(2, 2), x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, -i, i, 0;
  z << 1, 0, 0, -1;
  std::vector<CMatrix> out;
  for (auto [p, m] : {std::pair{p0, id}, std::pair{p1, x}, std::pair{p2, y}, std::pair{p3, z}})
    if (p > 0) out.push_back(std::sqrt(p) * m);
  return out;
}

void criterion7() {
  const KrausSet bf(pauli_kraus(0.75, 0.25, 0, 0));
  const double f_bf = avg_gate_fidelity(kraus_to_superoperator(bf));
  const KrausSet dep(pauli_kraus(1 - 3 * 0.125, 0.125, 0.125, 0.125));
  const Superoperator dphi = kraus_to_superoperator(dep);
  const double f_dep = avg_gate_fidelity(dphi);
  const double u_dep = unitarity_exact(superoperator_to_transfer(dphi));
  const double sat = std::abs(u_dep - unitarity_lower_from_r(1.0 - f_dep, 2));

  CMatrix k0 = CMatrix::Zero(2, 2), k1 = CMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(0.5);
  k1(0, 1) = std::sqrt(0.5);
  const KrausSet ad({k0, k1});
  const double u_ad = unitarity_exact(superoperator_to_transfer(kraus_to_superoperator(ad)));

  // Within 3σ, with a roundoff floor for integrands that are constant.
  const auto within = [](const MonteCarloEstimate& e, double exact) {
    return std::abs(e.estimate - exact) <= 3.0 * e.std_error + 1e-12;
  };
  int ok_f_bf = 0, ok_u_ad = 0, ok_f_dep = 0, ok_u_dep = 0;
  const int seeds = 200, n = 100000;
  for (int s = 0; s < seeds; ++s) {
    ok_f_bf += within(mc_avg_gate_fidelity(bf, n, 1000 + s), 5.0 / 6.0);
    ok_u_ad += within(mc_unitarity(ad, n, 2000 + s), u_ad);
    ok_f_dep += within(mc_avg_gate_fidelity(dep, n / 100, 3000 + s), 0.75);
    ok_u_dep += within(mc_unitarity(dep, n / 100, 4000 + s), 0.25);
  }
  const double need = 0.99 * seeds;
  const bool pass = std::abs(f_bf - 5.0 / 6.0) <= 1e-15 && std::abs(f_dep - 0.75) <= 1e-15 &&
                    std::abs(u_dep - 0.25) <= 1e-15 && sat <= 1e-12 && ok_f_bf >= need && ok_u_ad >= need &&
                    ok_f_dep >= need && ok_u_dep >= need;
  report(7, pass,
         fmt("metrics: bit-flip F - 5/6 = %.1e; depolarizing F - 0.75 = %.1e, u - 0.25 = %.1e, saturation gap %.1e "
             "(tol 1e-12); MC within 3 sigma: F(bit-flip) %d/200, u(amp-damp) %d/200, F(dep) %d/200, u(dep) %d/200 "
             "(need >= 99%%)",
             f_bf - 5.0 / 6.0, f_dep - 0.75, u_dep - 0.25, sat, ok_f_bf, ok_u_ad, ok_f_dep, ok_u_dep));
}

void criterion8() {
  long long violations = 0;
  for (std::uint64_t s = 0; s < 10000; ++s) {
    const int d = 2 + static_cast<int>(s % 3);
    const int rank = 1 + static_cast<int>((s / 3) % (d * d));
    const Superoperator phi = kraus_to_superoperator(sample_cptp(d, rank, s));
    const MetricsReport m = metrics_report(spectrum(phi), superoperator_to_transfer(phi));
    const double u = *m.unitarity;
    violations += u < m.u_lower_r - 1e-10;
    violations += u < m.u_lower_spectrum - 1e-10;
    violations += m.diamond_lower_r > m.diamond_upper_r + 1e-10;
    violations += !std::isfinite(m.diamond_lower_wallman);
    violations += !std::isfinite(*m.diamond_lower_wallman_exact_u);
  }
  report(8, violations == 0, fmt("bound ordering: %lld violations over 1e4 channels (d = 2, 3, 4; tol 1e-10)", violations));
}

void criterion9() {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const Superoperator phi = kraus_to_superoperator(sample_cptp(2, 2, s));
    const Spectrum sp = spectrum(phi);
    const auto cls = classify_qubit_spectrum(sp);
    if (!std::holds_alternative<ConjugatePair>(cls)) continue;
    const auto& pair = std::get<ConjugatePair>(cls);
    const Superoperator m = synthesize_from_complex_pair(pair.x, pair.z);
    const double dist = spectral_distance(spectrum(m).values(), sp.values());
    const double diff = max_abs(m.matrix() - phi.matrix());
    if (dist <= 1e-9 && diff >= 1e-3 && is_completely_positive(m).completely_positive) {
      report(9, true,
             fmt("information loss: sample seed %llu and its mixture share spectra (distance %.1e <= 1e-9) but "
                 "differ by %.3f in superoperator max-entry norm (>= 1e-3)",
                 static_cast<unsigned long long>(s), dist, diff));
      return;
    }
  }
  report(9, false, "information loss: no witness pair found");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
