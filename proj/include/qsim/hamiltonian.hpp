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
 * Hamiltonians in two forms: a list of weighted Pauli strings
 * (LocalHamiltonian) and an explicit Hermitian matrix (DenseHamiltonian).
 *
 * Model conventions:
 *   tfim(n, h)    = -sum_i Z_i Z_{i+1} - h sum_i X_i
 *   xxz(n, delta) =  sum_i (X_i X_{i+1} + Y_i Y_{i+1} + delta Z_i Z_{i+1})
 *   maxcut(G)     = -sum_{(i,j) in G} (1 - Z_i Z_j) / 2
 * Chains are periodic (bond n-1 -> 0) when n > 2. With Z|1> = -|1>, the
 * ground energy of maxcut is minus the size of the maximum cut.
 */
#pragma once

#include "qsim/pauli.hpp"
#include "qsim/state.hpp"

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsim {

class LocalHamiltonian {
  public:
    explicit LocalHamiltonian(int n_qubits, std::vector<PauliTerm> terms = {});

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<PauliTerm> &terms() const noexcept { return terms_; }

    /// Appends c * pauli. The string length must equal n_qubits.
    LocalHamiltonian &add(double coefficient, std::string pauli);

    [[nodiscard]] LocalHamiltonian scaled(double factor) const;

  private:
    int n_qubits_;
    std::vector<PauliTerm> terms_;
};

/// Concatenation of the term lists (no merging of equal strings).
LocalHamiltonian operator+(const LocalHamiltonian &a, const LocalHamiltonian &b);
LocalHamiltonian operator*(double factor, const LocalHamiltonian &h);

/// (1 - s) h0 + s h1.
LocalHamiltonian interpolate(const LocalHamiltonian &h0, const LocalHamiltonian &h1, double s);

using Edge = std::pair<int, int>;

/// coefficient * sum_i sigma_i with sigma in {X, Y, Z}.
LocalHamiltonian pauli_field(char axis, int n, double coefficient = 1.0);
LocalHamiltonian tfim(int n, double h);
LocalHamiltonian xxz(int n, double delta);
/// Includes the constant -|E|/2 as an identity term.
LocalHamiltonian maxcut(int n, std::span<const Edge> edges);

/// Lookup by name: "pauli-field-x|y|z" (params: [coefficient]), "tfim"
/// (params: [h]), "xxz" (params: [delta]), "maxcut" (edges). Missing
/// params take the defaults 1.0 / 1.0 / 1.0.
LocalHamiltonian precoded(std::string_view name, int n, std::span<const double> params = {},
                          std::span<const Edge> edges = {});

struct Spectrum {
    Eigen::VectorXd values; ///< ascending
    Matrix vectors;         ///< column k belongs to values[k]
};

class DenseHamiltonian {
  public:
    /// Throws Shape for a non-square or non power-of-two matrix and
    /// Hermiticity when max|H - H^dagger| >= 1e-12.
    explicit DenseHamiltonian(Matrix matrix);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const Matrix &matrix() const noexcept { return matrix_; }

    /// Eigendecomposition, computed on first use and shared by copies.
    [[nodiscard]] const Spectrum &spectrum() const;
    [[nodiscard]] double ground_energy() const;
    [[nodiscard]] StateVector ground_state() const;

  private:
    struct Cache;
    int n_qubits_;
    Matrix matrix_;
    std::shared_ptr<Cache> cache_;
};

/// Throws Capacity above kMaxDenseQubits.
DenseHamiltonian dense_from_local(const LocalHamiltonian &h);

/// <s|H|s>. Throws Hermiticity if the imaginary residue exceeds 1e-10.
double expectation(const StateVector &s, const DenseHamiltonian &h);
/// Term by term with the Pauli kernels; never builds a matrix.
double expectation(const StateVector &s, const LocalHamiltonian &h);

/// out = H * in, term by term.
void apply_hamiltonian(const LocalHamiltonian &h, const StateVector &in, StateVector &out);

/// exp(-i H t) s via H = V diag(lambda) V^dagger.
StateVector exact_evolve(const DenseHamiltonian &h, double t, const StateVector &s);

/// Text form: one "coefficient pauli" pair per line, '#' starts a comment.
/// The Unicode minus sign is accepted in coefficients. Errors are
/// ParseError with the offending line and column.
LocalHamiltonian parse_hamiltonian(std::string_view text);
LocalHamiltonian load_hamiltonian(const std::string &path);
std::string format_hamiltonian(const LocalHamiltonian &h);

} // namespace qsim
