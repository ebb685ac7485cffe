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
#include "qsim/error.hpp"

namespace qsim {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidSize:
        return "invalid-size";
    case ErrorKind::Dimension:
        return "dimension";
    case ErrorKind::Index:
        return "index";
    case ErrorKind::UnknownGate:
        return "unknown-gate";
    case ErrorKind::Arity:
        return "arity";
    case ErrorKind::Shape:
        return "shape";
    case ErrorKind::UnsupportedSize:
        return "unsupported-size";
    case ErrorKind::Conflict:
        return "conflict";
    case ErrorKind::NotFound:
        return "not-found";
    case ErrorKind::Capacity:
        return "capacity";
    case ErrorKind::InvalidDistribution:
        return "invalid-distribution";
    case ErrorKind::Parse:
        return "parse";
    case ErrorKind::Serialization:
        return "serialization";
    case ErrorKind::Hermiticity:
        return "hermiticity";
    case ErrorKind::Numerical:
        return "numerical";
    case ErrorKind::Decomposition:
        return "decomposition";
    case ErrorKind::StepSize:
        return "step-size";
    case ErrorKind::Schedule:
        return "schedule";
    case ErrorKind::InvalidOracle:
        return "invalid-oracle";
    case ErrorKind::InvalidArgument:
        return "invalid-argument";
    case ErrorKind::Io:
        return "io";
    }
    return "unknown";
}

std::string_view to_string(ParseError::Reason reason) noexcept {
    switch (reason) {
    case ParseError::Reason::Lexical:
        return "lexical";
    case ParseError::Reason::Syntax:
        return "syntax";
    case ParseError::Reason::UnknownGate:
        return "unknown-gate";
    case ParseError::Reason::Register:
        return "register";
    case ParseError::Reason::OutOfRange:
        return "out-of-range";
    case ParseError::Reason::Expression:
        return "expression";
    case ParseError::Reason::Arity:
        return "arity";
    }
    return "unknown";
}

ParseError::ParseError(Reason reason, std::size_t line, std::size_t column,
                       const std::string &message)
    : Error(ErrorKind::Parse, std::to_string(line) + ":" +
                                  std::to_string(column) + ": " +
                                  std::string(to_string(reason)) +
                                  " error: " + message),
      reason_(reason), line_(line), column_(column) {}

} // namespace qsim
