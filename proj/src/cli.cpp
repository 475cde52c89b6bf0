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

#include "qgauge/cli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "qgauge/gauge.hpp"
#include "qgauge/sampling.hpp"
#include "qgauge/synthesis.hpp"
#include "qgauge/testing.hpp"

namespace qgauge::cli {

using io::json;

CommandResult error_result(const std::exception& e) {
  CommandResult r;
  r.exit_code = kExitError;
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    r.diagnostic = std::string(to_string(err->kind())) + ": " + err->what();
    if (err->kind() == ErrorKind::NotRealizable) r.exit_code = kExitRefuted;
  } else {
    r.diagnostic = e.what();
  }
  return r;
}

// ---------------------------------------------------------------------------
// analyze

namespace {

json qubit_class_json(const QubitSpectralClass& cls) {
  if (const auto* real = std::get_if<AllReal>(&cls)) {
    return json{{"kind", "all_real"}, {"values", real->values}};
  }
  const auto& pair = std::get<ConjugatePair>(cls);
  return json{{"kind", "conjugate_pair"}, {"x", pair.x}, {"z", io::complex_to_json(pair.z)}};
}

}  // namespace

json analyze_report(const json& input, const AnalyzeOptions& options, bool& refuted) {
  refuted = false;
  json report;
  std::optional<Spectrum> sp;
  std::optional<io::ChannelData> channel;

  if (input.is_object() && input.contains("spectrum")) {
    sp = io::spectrum_from_json(input);
    report["input"] = json{{"format", "spectrum"}, {"dim", sp->dim()}};
  } else {
    channel = io::channel_from_json(input);
    sp = spectrum(channel->superoperator);
    report["input"] = json{{"format", std::string(io::to_string(channel->format))},
                           {"dim", channel->dim}};
  }
  report["spectrum"] = io::spectrum_to_json(*sp);

  if (sp->dim() == 2) {
    report["qubit_class"] = qubit_class_json(classify_qubit_spectrum(*sp));
    json criteria = json::array();
    std::vector<CriterionVerdict> verdicts{theorem1(*sp), det_range_check(*sp)};
    const auto kb = k_norm_bound(*sp);
    report["k_norm_bound"] = json{{"bound", kb.bound}, {"feasible", kb.feasible}, {"gauge_invariant", true}};
    if (channel && channel->transfer) {
      // Uses the actual translation, so this verdict is gauge dependent.
      verdicts.push_back(k_norm_check(*sp, channel->transfer->translation().squaredNorm()));
    } else {
      verdicts.push_back(make_verdict("k_norm_bound", kb.bound));
    }
    verdicts.push_back(to_verdict(z_feasibility(*sp, options.z_samples, options.seed)));
    for (const auto& v : verdicts) {
      json vj = io::verdict_to_json(v);
      vj["gauge_invariant"] = !(v.criterion == "k_norm_bound" && channel && channel->transfer);
      criteria.push_back(std::move(vj));
      refuted = refuted || !v.satisfied;
    }
    report["criteria"] = std::move(criteria);
  }

  std::optional<TransferMatrix> tm;
  if (channel) tm = channel->transfer;
  report["metrics"] = io::metrics_to_json(metrics_report(*sp, tm));

  if (channel) {
    const double tol = options.tol.value_or(default_cp_tolerance(channel->dim));
    const auto cp = is_completely_positive(channel->superoperator, tol);
    report["cp_oracle"] = json{{"completely_positive", cp.completely_positive},
                               {"min_choi_eigenvalue", cp.min_eigenvalue},
                               {"tolerance", tol},
                               {"gauge_invariant", false}};
  }
  report["refuted"] = refuted;
  return report;
}

CommandResult cmd_analyze(const json& input, const AnalyzeOptions& options) {
  try {
    bool refuted = false;
    const json report = analyze_report(input, options, refuted);
    CommandResult r;
    r.output = io::dump(report);
    r.exit_code = refuted ? kExitRefuted : kExitOk;
    if (refuted) r.diagnostic = "a necessary complete-positivity criterion is violated";
    return r;
  } catch (const std::exception& e) {
    return error_result(e);
  }
}

// ---------------------------------------------------------------------------
// synthesize

CommandResult cmd_synthesize(const json& input) {
  try {
    if (!input.is_object()) throw Error(ErrorKind::Structural, "synthesis input must be an object");
    std::optional<Superoperator> phi;
    std::string route;
    if (input.contains("real")) {
      const auto& r = input["real"];
      if (!r.is_array() || r.size() != 3) throw Error(ErrorKind::Structural, "\"real\" needs 3 values");
      phi = xi_from_real_spectrum(r[0].get<double>(), r[1].get<double>(), r[2].get<double>());
      route = "normal";
    } else if (input.contains("x") && input.contains("z")) {
      if (!input["x"].is_number()) throw Error(ErrorKind::Structural, "\"x\" must be a number");
      const double x = input["x"].get<double>();
      const cplx z = io::complex_from_json(input["z"]);
      if (z.imag() == 0.0) {
        phi = xi_from_real_spectrum(x, z.real(), z.real());
        route = "normal";
      } else {
        phi = synthesize_from_complex_pair(x, z);
        route = "mixture";
      }
    } else {
      throw Error(ErrorKind::Structural, "synthesis input needs {\"x\", \"z\"} or {\"real\"}");
    }
    json out = io::channel_to_json(*phi);
    out["construction"] = route;
    CommandResult r;
    r.output = io::dump(out);
    return r;
  } catch (const std::exception& e) {
    return error_result(e);
  }
}

// ---------------------------------------------------------------------------
// region

std::vector<RegionPoint> region_points(double x, int grid) {
  if (grid < 2) throw Error(ErrorKind::Domain, "grid must be >= 2");
  std::vector<RegionPoint> pts;
  pts.reserve(static_cast<std::size_t>(grid) * grid);
  const double step = 2.0 / (grid - 1);
  for (int iy = 0; iy < grid; ++iy) {
    for (int ix = 0; ix < grid; ++ix) {
      RegionPoint pt;
      pt.re = -1.0 + ix * step;
      pt.im = -1.0 + iy * step;
      const cplx z(pt.re, pt.im);
      pt.disc = complex_pair_disc(x, z).satisfied;
      const double r = std::abs(z);
      if (r < 1.0) {
        // Unclamped mixture parameters; outside the disc the candidate is not CP.
        const double p = 1.0 - r;
        const double a = (x - 2.0 * r + 1.0) / (2.0 - 2.0 * r);
        const Superoperator phi(2, detail::mixture_matrix(p, a, std::arg(z)));
        pt.oracle = is_completely_positive(phi).completely_positive;
      }
      pts.push_back(pt);
    }
  }
  return pts;
}

std::string region_csv(const std::vector<RegionPoint>& points) {
  std::string out = "re_z,im_z,disc,oracle\n";
  for (const auto& p : points) {
    out += io::format_double(p.re);
    out += ',';
    out += io::format_double(p.im);
    out += p.disc ? ",1," : ",0,";
    if (p.oracle) out += *p.oracle ? "1" : "0";
    out += '\n';
  }
  return out;
}

CommandResult cmd_region(double x, int grid) {
  try {
    CommandResult r;
    r.output = region_csv(region_points(x, grid));
    return r;
  } catch (const std::exception& e) {
    return error_result(e);
  }
}

// ---------------------------------------------------------------------------
// sample

CommandResult cmd_sample(const SampleOptions& o) {
  try {
    if (o.n < 1) throw Error(ErrorKind::Domain, "n must be >= 1");
    const int rank = o.rank > 0 ? o.rank : o.dim * o.dim;
    constexpr int kBins = 10;
    std::vector<long long> hist(kBins, 0);
    double sum_lead = 0.0, sum_gap = 0.0;
    long long cp_failures = 0;
    const bool qubit = o.dim == 2;
    struct Count { long long pass = 0; };
    Count t1, det, kn, zf;
    long long refutations = 0, below_bound = 0;
    double det_min = std::numeric_limits<double>::infinity();
    double det_max = -std::numeric_limits<double>::infinity();
    double det_sum = 0.0;

    for (int i = 0; i < o.n; ++i) {
      const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
      const KrausSet ks = sample_cptp(o.dim, rank, seed);
      const Superoperator phi = kraus_to_superoperator(ks);
      if (!is_completely_positive(phi).completely_positive) ++cp_failures;
      const Spectrum sp = spectrum(phi);
      const double lead = 1.0 - sp.gap();
      sum_lead += lead;
      sum_gap += sp.gap();
      hist[static_cast<std::size_t>(std::clamp(static_cast<int>(sp.gap() * kBins), 0, kBins - 1))]++;
      if (!qubit) continue;

      const TransferMatrix tm = superoperator_to_transfer(phi);
      const double det_t = tm.bloch_map().determinant();
      det_min = std::min(det_min, det_t);
      det_max = std::max(det_max, det_t);
      det_sum += det_t;
      if (det_t < -1.0 / 27.0 - 1e-9) ++below_bound;

      const bool a = theorem1(sp).margin >= -kFeasibilityTol;
      const bool b = det_range_check(sp).margin >= -kFeasibilityTol;
      const bool c = k_norm_check(sp, tm.translation().squaredNorm()).margin >= -kFeasibilityTol;
      const bool d = z_feasibility(sp, o.z_samples, seed).feasible;
      t1.pass += a;
      det.pass += b;
      kn.pass += c;
      zf.pass += d;
      if (!(a && b && c && d)) ++refutations;
    }

    json edges = json::array();
    for (int b = 0; b <= kBins; ++b) edges.push_back(static_cast<double>(b) / kBins);
    json out{{"n", o.n},
             {"dim", o.dim},
             {"rank", rank},
             {"seed", o.seed},
             {"cp_oracle_failures", cp_failures},
             {"mean_subleading_modulus", sum_lead / o.n},
             {"mean_gap", sum_gap / o.n},
             {"gap_histogram", json{{"edges", edges}, {"counts", hist}}}};
    if (qubit) {
      const auto rate = [&](const Count& c) {
        return json{{"pass", c.pass}, {"rate", static_cast<double>(c.pass) / o.n}};
      };
      out["criteria"] = json{{"theorem1", rate(t1)},
                             {"det_range", rate(det)},
                             {"k_norm_bound", rate(kn)},
                             {"z_feasibility", rate(zf)}};
      out["refutations"] = refutations;
      out["det_T"] = json{{"min", det_min},
                          {"max", det_max},
                          {"mean", det_sum / o.n},
                          {"lower_bound", -1.0 / 27.0},
                          {"below_lower_bound", below_bound}};
    }
    CommandResult r;
    r.output = io::dump(out);
    return r;
  } catch (const std::exception& e) {
    return error_result(e);
  }
}

// ---------------------------------------------------------------------------
// gauge

CommandResult cmd_gauge(const GaugeOptions& o) {
  try {
    if (o.gates.empty()) throw Error(ErrorKind::Structural, "at least one gate file is required");
    std::vector<Superoperator> gates;
    for (const auto& g : o.gates) gates.push_back(io::channel_from_json(g).superoperator);
    const int d = gates.front().dim();
    CMatrix ket0 = CMatrix::Zero(d, d);
    ket0(0, 0) = 1.0;
    const GateSet gs = GateSet::physical(std::move(gates), ket0, ket0);
    const GaugeTransform x = o.break_gauge
                                 ? broken_gauge(d, o.strength > 0.0 ? o.strength : 0.1)
                                 : random_gauge(d, o.strength, o.seed);
    const OrbitReport rep = verify_orbit_invariance(gs, x, o.max_len);
    const double prob_tol = 1e-9 * rep.condition;
    const double spec_tol = 1e-8;
    const bool invariant = rep.max_prob_deviation <= prob_tol && rep.max_spectral_deviation <= spec_tol;
    json out{{"dim", d},
             {"gates", o.gates.size()},
             {"seed", o.seed},
             {"strength", o.strength},
             {"max_len", o.max_len},
             {"broken_gauge", o.break_gauge},
             {"condition", rep.condition},
             {"sequences", rep.sequences},
             {"max_prob_deviation", rep.max_prob_deviation},
             {"max_spectral_deviation", rep.max_spectral_deviation},
             {"prob_tolerance", prob_tol},
             {"spectral_tolerance", spec_tol},
             {"invariant", invariant}};
    CommandResult r;
    r.output = io::dump(out);
    if (!invariant) {
      r.exit_code = kExitRefuted;
      r.diagnostic = "gauge-orbit invariance violated";
    }
    return r;
  } catch (const std::exception& e) {
    return error_result(e);
  }
}

}  // namespace qgauge::cli
