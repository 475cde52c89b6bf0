# Copyright 2026 The qgauge Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Gauge-invariant analysis of quantum channels."""

import json as _json

from ._qgauge import *  # noqa: F401,F403
from ._qgauge import Error, __version__
from ._qgauge import analyze as _analyze


def analyze(channel, z_samples=64, seed=0):  # noqa: F811
    """Analysis report for a channel (or {"spectrum": ...}) given as a dict or JSON text."""
    text = channel if isinstance(channel, str) else _json.dumps(channel)
    return _json.loads(_analyze(text, z_samples, seed))
