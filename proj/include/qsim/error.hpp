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
 * Exception types shared by every qsim module.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qsim {

/// Classifies failures so callers (the CLI, the Python layer) can map them
/// to exit codes or exception types without string matching.
enum class ErrorKind {
    InvalidSize,
    Dimension,
    Index,
    UnknownGate,
    Arity,
    Shape,
    UnsupportedSize,
    Conflict,
    NotFound,
    Capacity,
    InvalidDistribution,
    Parse,
    Serialization,
    Hermiticity,
    Numerical,
    Decomposition,
    StepSize,
    Schedule,
    InvalidOracle,
    InvalidArgument,
    Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/// Position-annotated failure raised by the QASM front end and the
/// Hamiltonian text reader.
class ParseError : public Error {
  public:
    enum class Reason {
        Lexical,
        Syntax,
        UnknownGate,
        Register,
        OutOfRange,
        Expression,
        Arity,
    };

    ParseError(Reason reason, std::size_t line, std::size_t column,
               const std::string &message);

    [[nodiscard]] Reason reason() const noexcept { return reason_; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

  private:
    Reason reason_;
    std::size_t line_;
    std::size_t column_;
};

std::string_view to_string(ParseError::Reason reason) noexcept;

} // namespace qsim
