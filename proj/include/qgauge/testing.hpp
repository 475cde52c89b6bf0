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

// Negative-test helpers. Not part of the supported API.

#include "qgauge/gauge.hpp"

namespace qgauge {

/// Gauge matrix without the first-row or conditioning checks, used to show
/// that a broken trace-preservation row is detected.
GaugeTransform make_unchecked_gauge(int dim, RMatrix x);

/// Identity with every off-diagonal first-row entry set to offset.
GaugeTransform broken_gauge(int dim, double offset);

}  // namespace qgauge
