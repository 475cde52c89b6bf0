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

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qgauge/channel.hpp"
#include "qgauge/cp_criteria.hpp"
#include "qgauge/metrics.hpp"
#include "qgauge/spectrum.hpp"

namespace qgauge::io {

using nlohmann::json;

enum class ChannelFormat { Kraus, Superoperator, Transfer };

std::string_view to_string(ChannelFormat f);

/// A parsed channel file. `superoperator` is always populated; the other
/// representations are present when they were supplied (or, for the
/// transfer matrix, derivable because the map is trace preserving).
struct ChannelData {
  int dim = 0;
  ChannelFormat format = ChannelFormat::Superoperator;
  std::optional<KrausSet> kraus;
  Superoperator superoperator{1, CMatrix::Identity(1, 1)};
  std::optional<TransferMatrix> transfer;
};

// Channel JSON: {"dim": d, "format": "kraus"|"superoperator"|"transfer",
// "data": ...}. Complex numbers are [re, im]; matrices are row-major lists of
// rows. Kraus data is a list of matrices; transfer data is {"k": [...],
// "T": [[...]]}. All parse failures surface as Error(Structural).
ChannelData channel_from_json(const json& j);
json channel_to_json(const KrausSet& ks);
json channel_to_json(const Superoperator& phi);
json channel_to_json(const TransferMatrix& tm);

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);
json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

json spectrum_to_json(const Spectrum& sp);
/// {"spectrum": [[re, im], ...], "dim"?: d}; dim defaults to √len.
Spectrum spectrum_from_json(const json& j);

/// {criterion, satisfied, margin, branch, witness?}.
json verdict_to_json(const CriterionVerdict& v);

/// Every field carries an explicit "gauge_invariant" flag.
json metrics_to_json(const MetricsReport& m);

json parse(const std::string& text);
json read_file(const std::string& path);
std::string dump(const json& j);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

}  // namespace qgauge::io
