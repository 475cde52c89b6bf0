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
#include <optional>
#include <string>
#include <vector>

#include "qgauge/io.hpp"

namespace qgauge::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitRefuted = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;      // JSON or CSV payload
  std::string diagnostic;  // human-readable message for stderr
};

struct AnalyzeOptions {
  std::optional<double> tol;  // CP oracle tolerance; default 1e-10·d
  int z_samples = 64;
  std::uint64_t seed = 0;
};

/// Input is a channel JSON or {"spectrum": [...]}.
CommandResult cmd_analyze(const io::json& input, const AnalyzeOptions& options);
io::json analyze_report(const io::json& input, const AnalyzeOptions& options, bool& refuted);

/// Input {"x": x, "z": [re, im]} or {"real": [l1, l2, l3]}.
CommandResult cmd_synthesize(const io::json& input);

struct RegionPoint {
  double re = 0.0;
  double im = 0.0;
  bool disc = false;
  std::optional<bool> oracle;  // empty where the mixture is undefined (|z| >= 1)
};

/// grid × grid lattice over [-1, 1]²; row-major in Im z then Re z.
std::vector<RegionPoint> region_points(double x, int grid);
std::string region_csv(const std::vector<RegionPoint>& points);
CommandResult cmd_region(double x, int grid);

struct SampleOptions {
  int n = 1000;
  int dim = 2;
  int rank = 0;  // Kraus rank; 0 selects full rank d²
  std::uint64_t seed = 0;
  int z_samples = 16;
};

CommandResult cmd_sample(const SampleOptions& options);

struct GaugeOptions {
  std::vector<io::json> gates;
  std::uint64_t seed = 0;
  double strength = 0.3;
  int max_len = 3;
  bool break_gauge = false;
};

CommandResult cmd_gauge(const GaugeOptions& options);

/// Maps library errors onto the exit-code contract.
CommandResult error_result(const std::exception& e);

}  // namespace qgauge::cli
