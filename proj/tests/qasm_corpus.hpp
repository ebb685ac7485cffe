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
// Malformed programs shared by the parser tests and the acceptance binary.
// Each entry names the expected reason and the 1-based position of the
// offending token.
#pragma once

#include "qsim/error.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace qsim::testing {

struct MalformedProgram {
    std::string_view source;
    ParseError::Reason reason;
    std::size_t line;
    std::size_t column;
};

inline std::vector<MalformedProgram> malformed_corpus() {
    using R = ParseError::Reason;
    return {
        {"OPENQASM 2.0;\nqreg q[2];\nh q[0] $;\n", R::Lexical, 3, 8},
        {"qreg q[2];\nh q[0];\n\"open", R::Lexical, 3, 1},
        {"qreg q[1];\nrz(1.5e) q[0];\n", R::Lexical, 2, 4},
        {"qreg q[1];\nx q[0]\n", R::Syntax, 3, 1},
        {"qreg q[1];\nx q[0];;\n", R::Syntax, 2, 8},
        {"qreg q[2];\ncx q[0] q[1];\n", R::Syntax, 2, 9},
        {"OPENQASM 3.0;\nqreg q[1];\n", R::Syntax, 1, 10},
        {"qreg q[1];\nOPENQASM 2.0;\n", R::Syntax, 2, 1},
        {"qreg q[1];\ngate foo a { x a; }\n", R::Lexical, 2, 12},
        {"qreg q[1];\ncreg c[1];\nif (c==1) x q[0];\n", R::Lexical, 3, 6},
        {"qreg q[1];\nreset q[0];\n", R::Syntax, 2, 1},
        {"qreg q[1];\nfoo q[0];\n", R::UnknownGate, 2, 1},
        {"qreg q[1];\nX q[0];\n", R::UnknownGate, 2, 1},
        {"qreg q[2];\nqreg r[2];\n", R::Register, 2, 1},
        {"qreg q[0];\n", R::Register, 1, 8},
        {"x q[0];\n", R::Register, 1, 5},
        {"qreg q[2];\nx r[0];\n", R::Register, 2, 5},
        {"qreg q[99];\n", R::Register, 1, 8},
        {"qreg q[2];\nqreg q[3];\n", R::Register, 2, 1},
        {"qreg q[3];\ncx q[0], q[5];\n", R::OutOfRange, 2, 12},
        {"qreg q[2];\ncreg c[1];\nmeasure q[0] -> c[1];\n", R::OutOfRange, 3, 19},
        {"qreg q[1];\nrz(pi/0) q[0];\n", R::Expression, 2, 6},
        {"qreg q[1];\nrz(tau) q[0];\n", R::Expression, 2, 4},
        {"qreg q[1];\nrz() q[0];\n", R::Arity, 2, 1},
        {"qreg q[1];\nrz(1+) q[0];\n", R::Expression, 2, 6},
        {"qreg q[1];\nrz(1e999) q[0];\n", R::Expression, 2, 4},
        {"qreg q[1];\nrx(0.1, 0.2) q[0];\n", R::Arity, 2, 1},
        {"qreg q[1];\nu3(0.1) q[0];\n", R::Arity, 2, 1},
        {"qreg q[2];\ncx q[0];\n", R::Arity, 2, 1},
        {"qreg q[2];\ncx q[1], q[1];\n", R::Arity, 2, 1},
        {"qreg q[2];\ncreg c[2];\nmeasure q -> c[0];\n", R::Arity, 3, 1},
        {"qreg q[1];\ncreg c[1];\nmeasure q[0] -> c[0];\nx q[0];\n", R::Syntax, 4, 1},
    };
}

} // namespace qsim::testing
