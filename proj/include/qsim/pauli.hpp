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
#pragma once

#include "qsim/types.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qsim {

/// coefficient * P, where pauli[k] in {I, X, Y, Z} acts on qubit k.
struct PauliTerm {
    double coefficient = 0.0;
    std::string pauli;

    /// Qubits carrying a non-identity factor, ascending.
    [[nodiscard]] std::vector<Qubit> support() const;
};

/// Throws InvalidArgument for symbols outside {I, X, Y, Z}.
void check_pauli_string(std::string_view pauli);

/// Dense Kronecker expansion; pauli[0] is the most significant factor.
Matrix pauli_matrix(std::string_view pauli);

/// 2x2 matrix of one Pauli symbol.
Matrix pauli_symbol_matrix(char symbol);

} // namespace qsim
