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
 * Precoded circuits and algorithms: QFT, Grover search, a hardware
 * efficient variational ansatz, VQE, QAOA, FALQON and AAVQE.
 */
#pragma once

#include "qsim/circuit.hpp"
#include "qsim/hamiltonian.hpp"
#include "qsim/optimizers.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qsim {

/// H and CU1(pi / 2^k) cascade; with_swaps appends the bit-reversal
/// network so that <j|QFT|k> = exp(2 pi i j k / 2^n) / sqrt(2^n).
Circuit qft_circuit(int n, bool with_swaps = true);

/// Z on the last qubit controlled by all others (plain Z for one qubit).
Gate multi_controlled_z(std::span<const Qubit> qubits);

struct GroverCircuit {
    Circuit circuit;
    int iterations = 0;
    /// sin^2((2r + 1) theta), theta = asin(sqrt(|marked| / 2^n)).
    double predicted_success = 0.0;
};

/// Default iterations: floor(pi/4 sqrt(2^n / |marked|)). Throws
/// InvalidOracle for an empty, full, repeated or out-of-range marked set.
GroverCircuit grover(int n, std::span<const Index> marked, std::optional<int> iterations = {});

/// Total probability of the marked basis states.
double marked_probability(const StateVector &s, std::span<const Index> marked);

/// Per layer: RY on every qubit, then CZ on (i, i+1) and, for n > 2, on
/// (n-1, 0). A final RY layer closes the circuit.
struct AnsatzSpec {
    int n_qubits = 1;
    int depth = 1;

    [[nodiscard]] std::size_t n_params() const;
    /// Throws Arity when theta.size() != n_params().
    [[nodiscard]] Circuit build(std::span<const double> theta) const;
};

/// <psi(theta)|H|psi(theta)> on the active backend.
double ansatz_energy(const LocalHamiltonian &h, const AnsatzSpec &ansatz,
                     std::span<const double> theta);

struct VqeResult {
    double energy = 0.0;
    std::vector<double> theta;
    std::size_t evaluations = 0;
    bool converged = false;
    std::vector<double> history;
};

/// Without theta0 the start is uniform in [-0.1, 0.1] drawn from spec.seed.
VqeResult vqe(const LocalHamiltonian &h, const AnsatzSpec &ansatz, const OptimizerSpec &spec,
              std::optional<std::vector<double>> theta0 = {});

/// |+...+> followed by p rounds of exp(-i gamma_k H_p) exp(-i beta_k H_m).
/// params are interleaved (gamma_1, beta_1, gamma_2, beta_2, ...). The
/// default mixer sum_i X_i is applied as RX(2 beta); any other mixer, and
/// H_p, are applied term by term (exact when the terms commute).
Circuit qaoa_circuit(const LocalHamiltonian &h_problem, std::span<const double> params,
                     const LocalHamiltonian *mixer = nullptr);

double qaoa_energy(const LocalHamiltonian &h_problem, std::span<const double> params,
                   const LocalHamiltonian *mixer = nullptr);

struct QaoaResult {
    double energy = 0.0;
    std::vector<double> params;
    std::size_t evaluations = 0;
    bool converged = false;
};

/// Without params0 the start is the linear ramp gamma_k = 0.8 (k - 1/2) / p,
/// beta_k = 0.8 (1 - (k - 1/2) / p).
QaoaResult qaoa_optimize(const LocalHamiltonian &h_problem, int p, const OptimizerSpec &spec,
                         std::optional<std::vector<double>> params0 = {},
                         const LocalHamiltonian *mixer = nullptr);

struct FalqonResult {
    std::vector<double> betas;    ///< beta_1 .. beta_steps (beta_1 = 0)
    std::vector<double> energies; ///< <H_p> before the first and after every step
    StateVector state;
    bool monotone = true;
    std::vector<std::string> warnings;
};

/// Feedback-based optimization from |+...+>. Each step applies
/// exp(-i beta_k H_m dt) exp(-i H_p dt), then sets
/// beta_{k+1} = -<i [H_m, H_p]>, which makes d<H_p>/dt = -beta^2 <= 0 in
/// the small dt limit. A rise of <H_p> above 1e-6 in any step is reported
/// as a warning, not an error. Throws Numerical when the commutator
/// expectation has an imaginary residue above 1e-8.
FalqonResult falqon(const LocalHamiltonian &h_problem, const LocalHamiltonian &h_mixer, double dt,
                    int steps);

struct AavqeResult {
    std::vector<double> energies; ///< optimized energy at each s_j
    std::vector<double> theta;
    std::size_t evaluations = 0;
};

/// VQE along H_j = (1 - s_j) h0 + s_j h1, s_j = j / (steps - 1), each
/// stage warm-started from the previous optimum. spec.budget applies to
/// every stage.
AavqeResult aavqe(const LocalHamiltonian &h0, const LocalHamiltonian &h1, int steps,
                  const AnsatzSpec &ansatz, const OptimizerSpec &spec,
                  std::optional<std::vector<double>> theta0 = {});

} // namespace qsim
