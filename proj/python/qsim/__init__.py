# Copyright 2026 The qsim Authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""State-vector quantum circuit simulator.

The heavy lifting happens in the compiled ``_qsim`` extension; this package
re-exports it and adds a few conveniences.
"""

from ._qsim import *  # noqa: F401,F403
from ._qsim import QsimError, ParseError, Circuit, execute, parse_qasm

__all__ = [name for name in dir() if not name.startswith("_")]


def run_qasm(text, nshots=0, seed=0, backend=""):
    """Parses OpenQASM text and executes it; returns the ExecutionResult."""
    return execute(parse_qasm(text), nshots=nshots, seed=seed, backend=backend)
