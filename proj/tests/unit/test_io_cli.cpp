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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qgauge/cli.hpp"
#include "qgauge/io.hpp"
#include "qgauge/sampling.hpp"
#include "qgauge/synthesis.hpp"
#include "support.hpp"

using namespace qgauge;
using namespace qgauge::test;
using io::json;

namespace {

json transfer_file(const std::array<double, 3>& diag, const std::array<double, 3>& k = {0, 0, 0}) {
  json t = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(i == j ? diag[i] : 0.0);
    t.push_back(row);
  }
  return json{{"dim", 2}, {"format", "transfer"}, {"data", {{"k", k}, {"T", t}}}};
}

}  // namespace

TEST_CASE("channel JSON round trips in every format") {
  const KrausSet ks = sample_cptp(2, 3, 4);
  const Superoperator phi = kraus_to_superoperator(ks);
  for (const json& j : {io::channel_to_json(ks), io::channel_to_json(phi),
                        io::channel_to_json(superoperator_to_transfer(phi))}) {
    const json reparsed = io::parse(io::dump(j));
    const io::ChannelData cd = io::channel_from_json(reparsed);
    CHECK(cd.dim == 2);
    CHECK(max_abs(cd.superoperator.matrix() - phi.matrix()) < 1e-14);
    CHECK(cd.transfer.has_value());
  }
  CHECK(io::channel_to_json(phi)["format"] == "superoperator");
  CHECK(io::channel_to_json(ks)["format"] == "kraus");
}

TEST_CASE("doubles survive formatting exactly") {
  for (double v : {0.1, 1.0 / 3.0, -1e-300, 5.0 / 6.0, 123456.789e10}) {
    CHECK(std::stod(io::format_double(v)) == v);
  }
  const KrausSet ks = sample_cptp(2, 2, 8);
  const Superoperator phi = kraus_to_superoperator(ks);
  const io::ChannelData back = io::channel_from_json(io::parse(io::dump(io::channel_to_json(phi))));
  CHECK((back.superoperator.matrix().array() == phi.matrix().array()).all());
}

TEST_CASE("malformed channel files") {
  const auto kind_of = [](const json& j) {
    try {
      io::channel_from_json(j);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Numeric;
  };
  CHECK(kind_of(json{{"dim", 2}}) == ErrorKind::Structural);
  CHECK(kind_of(json{{"dim", 2}, {"format", "bogus"}, {"data", 1}}) == ErrorKind::Structural);
  CHECK(kind_of(json{{"dim", 3}, {"format", "transfer"}, {"data", transfer_file({1, 1, 1})["data"]}}) ==
        ErrorKind::Structural);
  // Non-trace-preserving superoperator.
  json half = io::channel_to_json(Superoperator(2, 0.5 * CMatrix::Identity(4, 4)));
  CHECK(kind_of(half) == ErrorKind::NotTracePreserving);
  CHECK_THROWS_AS(io::parse("{not json"), Error);
}

TEST_CASE("spectrum JSON") {
  const Spectrum sp = Spectrum::from_values(2, {1, 0.5, cplx(0.1, 0.2), cplx(0.1, -0.2)});
  const json j = io::spectrum_to_json(sp);
  CHECK(j["gauge_invariant"] == true);
  const Spectrum back = io::spectrum_from_json(json{{"spectrum", j["values"]}});
  CHECK(back.dim() == 2);
  CHECK(spectral_distance(back.values(), sp.values()) == 0.0);
  CHECK_THROWS_AS(io::spectrum_from_json(json{{"spectrum", {{1, 0}, {0.5, 0}, {0.2, 0}}}}), Error);
}

TEST_CASE("analyze: identity channel") {
  const auto r = cli::cmd_analyze(transfer_file({1, 1, 1}), {});
  CHECK(r.exit_code == cli::kExitOk);
  const json j = io::parse(r.output);
  CHECK(j["metrics"]["f_avg"]["value"].get<double>() == doctest::Approx(1.0));
  for (const auto& c : j["criteria"]) CHECK(c["satisfied"] == true);
  CHECK(j["cp_oracle"]["completely_positive"] == true);
  CHECK(j["cp_oracle"]["gauge_invariant"] == false);
  CHECK(j["metrics"]["unitarity"]["gauge_invariant"] == false);
}

TEST_CASE("analyze: refuted spectrum exits 2") {
  const auto r = cli::cmd_analyze(transfer_file({1, 1, -1}), {});
  CHECK(r.exit_code == cli::kExitRefuted);
  const json j = io::parse(r.output);
  bool theorem1_violated = false;
  for (const auto& c : j["criteria"])
    if (c["criterion"] == "theorem1") theorem1_violated = c["satisfied"] == false;
  CHECK(theorem1_violated);
  CHECK(j["cp_oracle"]["completely_positive"] == false);
}

TEST_CASE("analyze: spectrum-only input has no gauge-dependent fields") {
  const auto r = cli::cmd_analyze(json{{"spectrum", {{1, 0}, {0.5, 0}, {0.5, 0}, {0.5, 0}}}}, {});
  CHECK(r.exit_code == cli::kExitOk);
  const json j = io::parse(r.output);
  CHECK_FALSE(j.contains("cp_oracle"));
  CHECK_FALSE(j["metrics"].contains("unitarity"));
  for (const auto& [key, field] : j["metrics"].items()) CHECK(field["gauge_invariant"] == true);
  for (const auto& c : j["criteria"]) CHECK(c["gauge_invariant"] == true);
}

TEST_CASE("analyze: structural errors exit 1") {
  CHECK(cli::cmd_analyze(json{{"dim", 2}}, {}).exit_code == cli::kExitError);
  const auto r = cli::cmd_analyze(io::channel_to_json(Superoperator(2, 0.5 * CMatrix::Identity(4, 4))), {});
  CHECK(r.exit_code == cli::kExitError);
  CHECK_FALSE(r.diagnostic.empty());
}

TEST_CASE("analyze: non-unital channel flags the actual translation check") {
  const auto r = cli::cmd_analyze(io::channel_to_json(KrausSet(amplitude_damping_kraus(0.5))), {});
  CHECK(r.exit_code == cli::kExitOk);
  const json j = io::parse(r.output);
  for (const auto& c : j["criteria"])
    if (c["criterion"] == "k_norm_bound") CHECK(c["gauge_invariant"] == false);
}

TEST_CASE("synthesize") {
  auto r = cli::cmd_synthesize(json{{"x", 0.4}, {"z", {0.25, 0.4330127}}});
  REQUIRE(r.exit_code == cli::kExitOk);
  json ch = io::parse(r.output);
  CHECK(ch["format"] == "superoperator");
  CHECK(ch["construction"] == "mixture");
  // Round trip through analyze confirms the spectrum.
  const auto a = cli::cmd_analyze(ch, {});
  CHECK(a.exit_code == cli::kExitOk);
  std::vector<cplx> vals;
  const json report = io::parse(a.output);
  for (const auto& v : report["spectrum"]["values"]) vals.push_back(io::complex_from_json(v));
  CHECK(spectral_distance(vals, std::vector<cplx>{1, 0.4, cplx(0.25, 0.4330127), cplx(0.25, -0.4330127)}) < 1e-9);

  r = cli::cmd_synthesize(json{{"real", {0.5, -0.3, 0.2}}});
  REQUIRE(r.exit_code == cli::kExitOk);
  CHECK(io::parse(r.output)["construction"] == "normal");

  r = cli::cmd_synthesize(json{{"x", -0.4}, {"z", {0, 0.5}}});
  CHECK(r.exit_code == cli::kExitRefuted);
  CHECK(r.diagnostic.find("(1+x)/2") != std::string::npos);

  r = cli::cmd_synthesize(json{{"real", {-1, -1, -1}}});
  CHECK(r.exit_code == cli::kExitRefuted);
  CHECK(cli::cmd_synthesize(json{{"nope", 1}}).exit_code == cli::kExitError);
}

TEST_CASE("region") {
  const auto pts = cli::region_points(0.4, 21);
  CHECK(pts.size() == 441);
  CHECK(pts.front().re == -1.0);
  CHECK(pts.back().im == 1.0);
  for (const auto& p : pts) {
    const double r = std::hypot(p.re, p.im);
    CHECK(p.disc == (r <= 0.7 + 1e-12));
    if (r < 1.0) {
      REQUIRE(p.oracle.has_value());
      if (std::abs(r - 0.7) > 0.1) CHECK(*p.oracle == p.disc);
    } else {
      CHECK_FALSE(p.oracle.has_value());
    }
  }
  const std::string csv = cli::region_csv(pts);
  CHECK(csv.rfind("re_z,im_z,disc,oracle\n", 0) == 0);
  CHECK(csv.find("-1,-1,0,\n") != std::string::npos);
  CHECK(cli::cmd_region(0.4, 1).exit_code == cli::kExitError);
  // Unit disc for x = 1.
  for (const auto& p : cli::region_points(1.0, 11)) CHECK(p.disc == (std::hypot(p.re, p.im) <= 1.0 + 1e-12));
  CHECK(cli::cmd_region(0.4, 21).output == cli::cmd_region(0.4, 21).output);
}

TEST_CASE("sample") {
  cli::SampleOptions o;
  o.n = 200;
  o.seed = 3;
  const auto r = cli::cmd_sample(o);
  REQUIRE(r.exit_code == cli::kExitOk);
  const json j = io::parse(r.output);
  CHECK(j["refutations"] == 0);
  CHECK(j["det_T"]["min"].get<double>() >= -1.0 / 27 - 1e-9);
  CHECK(j["cp_oracle_failures"] == 0);
  long long total = 0;
  for (const auto& c : j["gap_histogram"]["counts"]) total += c.get<long long>();
  CHECK(total == 200);
  CHECK(cli::cmd_sample(o).output == r.output);

  o.dim = 3;
  o.n = 50;
  const json j3 = io::parse(cli::cmd_sample(o).output);
  CHECK_FALSE(j3.contains("criteria"));
  o.n = 0;
  CHECK(cli::cmd_sample(o).exit_code == cli::kExitError);
}

TEST_CASE("sample: subleading modulus shrinks with dimension at full Kraus rank") {
  double prev = 2.0;
  for (int d : {2, 3, 4}) {
    cli::SampleOptions o;
    o.n = 300;
    o.dim = d;
    o.seed = 11;
    const json j = io::parse(cli::cmd_sample(o).output);
    CHECK(j["rank"] == d * d);
    const double lead = j["mean_subleading_modulus"].get<double>();
    CHECK(lead < prev);
    prev = lead;
  }
}

TEST_CASE("gauge command") {
  cli::GaugeOptions o;
  o.gates = {io::channel_to_json(sample_cptp(2, 2, 1)), io::channel_to_json(sample_cptp(2, 2, 2))};
  o.strength = 0.0;
  auto r = cli::cmd_gauge(o);
  CHECK(r.exit_code == cli::kExitOk);
  CHECK(io::parse(r.output)["max_prob_deviation"].get<double>() < 1e-13);

  o.strength = 0.3;
  o.seed = 5;
  r = cli::cmd_gauge(o);
  CHECK(r.exit_code == cli::kExitOk);
  CHECK(io::parse(r.output)["max_prob_deviation"].get<double>() <= 1e-9);

  o.break_gauge = true;
  r = cli::cmd_gauge(o);
  CHECK(r.exit_code == cli::kExitRefuted);
  CHECK(io::parse(r.output)["max_prob_deviation"].get<double>() > 0.0);

  CHECK(cli::cmd_gauge(cli::GaugeOptions{}).exit_code == cli::kExitError);
}
