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
 * Reader and writer for a subset of OpenQASM 2.0.
 *
 * Supported: the version header, `include` (ignored), one `qreg`, any number
 * of `creg`, catalog gate applications with angle expressions built from
 * literals, `pi`, parentheses and + - * /, `measure`, and `barrier`
 * (accepted, no effect). See docs/qasm_grammar.md for the grammar.
 *
 * Every failure is reported as a ParseError carrying line and column.
 */
#pragma once

#include "qsim/circuit.hpp"

#include <string>
#include <string_view>

namespace qsim::qasm {

Circuit parse(std::string_view text);
Circuit parse_file(const std::string &path);

/// Throws Error(Serialization) for gates without a textual form (custom
/// unitaries, unusual control combinations) or non-finite angles.
std::string serialize(const Circuit &c);

} // namespace qsim::qasm
