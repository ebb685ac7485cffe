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
#include "qsim/pauli.hpp"

#include "qsim/error.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace qsim {

std::vector<Qubit> PauliTerm::support() const {
    std::vector<Qubit> qubits;
    for (std::size_t k = 0; k < pauli.size(); ++k) {
        if (pauli[k] != 'I') {
            qubits.push_back(static_cast<Qubit>(k));
        }
    }
    return qubits;
}

void check_pauli_string(std::string_view pauli) {
    for (const char c : pauli) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw Error(ErrorKind::InvalidArgument,
                        "invalid Pauli symbol '" + std::string(1, c) + "' in '" +
                            std::string(pauli) + "'");
        }
    }
}

Matrix pauli_symbol_matrix(char symbol) {
    Matrix m(2, 2);
    switch (symbol) {
    case 'I':
        m << 1, 0, 0, 1;
        break;
    case 'X':
        m << 0, 1, 1, 0;
        break;
    case 'Y':
        m << 0, -kI, kI, 0;
        break;
    case 'Z':
        m << 1, 0, 0, -1;
        break;
    default:
        throw Error(ErrorKind::InvalidArgument,
                    "invalid Pauli symbol '" + std::string(1, symbol) + "'");
    }
    return m;
}

Matrix pauli_matrix(std::string_view pauli) {
    Matrix result = Matrix::Identity(1, 1);
    for (const char c : pauli) {
        const Matrix next = Eigen::kroneckerProduct(result, pauli_symbol_matrix(c)).eval();
        result = next;
    }
    return result;
}

} // namespace qsim
