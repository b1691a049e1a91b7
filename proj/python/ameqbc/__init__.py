# Copyright 2026 The ameqbc Authors
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

"""AME(3,d) quantum bit commitment simulator and verifier."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import QbcError, run_suite_json


def run_suite(d, seed=0, suites=("hiding", "structure", "bounds", "nogo", "lemma"), **optimizer):
    """Runs the named suites and returns the parsed JSON report."""
    return _json.loads(run_suite_json(d, seed, list(suites), **optimizer))


__all__ = [name for name in dir() if not name.startswith("_")]
