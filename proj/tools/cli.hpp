// Copyright 2026 The qsim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * The qsim command line: run, bench and demo subcommands.
 *
 * Exit codes: 0 success, 1 usage error (bad flags, unknown backend or
 * family, config schema violations), 2 parse error (QASM, Hamiltonian text
 * or JSON syntax), 3 execution error. Diagnostics go to the error stream;
 * results are JSON on the output stream.
 */
#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace qsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitExecution = 3;

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

struct BenchOptions {
    std::string family = "qft";
    std::vector<int> qubits;
    std::vector<std::string> backends;
    int repeats = 3;
    int layers = 10;
    unsigned long long seed = 1234;
};

/// Runs the benchmark and returns the report document.
nlohmann::ordered_json bench(const BenchOptions &options);

/// Runs a named demo with a parsed config and returns the result document.
nlohmann::ordered_json demo(const std::string &name, const nlohmann::ordered_json &config);

} // namespace qsim::cli
