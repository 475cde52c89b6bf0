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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgauge/cli.hpp"
#include "qgauge/io.hpp"

namespace {

using qgauge::cli::CommandResult;

int emit(const CommandResult& r, const std::string& out_path) {
  if (!r.output.empty()) {
    if (out_path.empty()) {
      std::cout << r.output;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return qgauge::cli::kExitError;
      }
      f << r.output;
    }
  }
  if (!r.diagnostic.empty()) std::cerr << r.diagnostic << "\n";
  return r.exit_code;
}

template <class F>
int guarded(const std::string& out_path, F&& f) {
  try {
    return emit(f(), out_path);
  } catch (const std::exception& e) {
    return emit(qgauge::cli::error_result(e), out_path);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qgauge: gauge-invariant analysis of quantum channels"};
  app.require_subcommand(1);

  std::string out_path;
  std::uint64_t seed = 0;
  double tol = -1.0;
  app.add_option("--out", out_path, "Write output to this file instead of stdout");
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--tol", tol, "CP oracle tolerance (default 1e-10*d)");

  auto* analyze = app.add_subcommand("analyze", "Spectral report for a channel or spectrum file");
  std::string analyze_input;
  int z_samples = 64;
  analyze->add_option("input", analyze_input, "Channel JSON or {\"spectrum\": [...]}")->required();
  analyze->add_option("--z-samples", z_samples, "Random probes for the Z-condition search");

  auto* synth = app.add_subcommand("synthesize", "Build a qubit channel with a prescribed spectrum");
  std::string synth_input;
  synth->add_option("input", synth_input, "{\"x\", \"z\"} or {\"real\"} JSON file")->required();

  auto* region = app.add_subcommand("region", "Complex-eigenvalue feasibility grid as CSV");
  double region_x = 0.0;
  int region_grid = 201;
  region->add_option("--x", region_x, "Real eigenvalue x")->required();
  region->add_option("--grid", region_grid, "Lattice points per axis")->check(CLI::Range(2, 100000));

  auto* sample = app.add_subcommand("sample", "Statistics over random CPTP channels");
  qgauge::cli::SampleOptions sopt;
  sample->add_option("-n,--n", sopt.n, "Number of channels")->check(CLI::PositiveNumber);
  sample->add_option("-d,--dim", sopt.dim, "Hilbert-space dimension")->check(CLI::Range(2, 64));
  sample->add_option("--rank", sopt.rank, "Kraus rank (default d^2)")->check(CLI::PositiveNumber);
  sample->add_option("--z-samples", sopt.z_samples, "Random probes for the Z-condition search");

  auto* gauge = app.add_subcommand("gauge", "Check gauge-orbit invariance of a gate set");
  std::vector<std::string> gate_files;
  qgauge::cli::GaugeOptions gopt;
  gauge->add_option("--gates", gate_files, "Gate channel JSON files")->required()->expected(1, -1);
  gauge->add_option("--strength", gopt.strength, "Random gauge strength");
  gauge->add_option("--max-len", gopt.max_len, "Maximum sequence length")->check(CLI::NonNegativeNumber);
  gauge->add_flag("--break-gauge", gopt.break_gauge, "Use a gauge that violates the first-row constraint");

  // Global flags are also accepted after the subcommand name.
  for (auto* sub : {analyze, synth, region, sample, gauge}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    return guarded(out_path, [&] {
      qgauge::cli::AnalyzeOptions o;
      if (tol >= 0.0) o.tol = tol;
      o.seed = seed;
      o.z_samples = z_samples;
      return qgauge::cli::cmd_analyze(qgauge::io::read_file(analyze_input), o);
    });
  }
  if (synth->parsed()) {
    return guarded(out_path, [&] { return qgauge::cli::cmd_synthesize(qgauge::io::read_file(synth_input)); });
  }
  if (region->parsed()) {
    return guarded(out_path, [&] { return qgauge::cli::cmd_region(region_x, region_grid); });
  }
  if (sample->parsed()) {
    sopt.seed = seed;
    return guarded(out_path, [&] { return qgauge::cli::cmd_sample(sopt); });
  }
  if (gauge->parsed()) {
    gopt.seed = seed;
    return guarded(out_path, [&] {
      for (const auto& f : gate_files) gopt.gates.push_back(qgauge::io::read_file(f));
      return qgauge::cli::cmd_gauge(gopt);
    });
  }
  return qgauge::cli::kExitError;
}
