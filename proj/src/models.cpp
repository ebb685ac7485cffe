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
#include "qsim/models.hpp"

#include "qsim/error.hpp"
#include "qsim/evolution.hpp"
#include "qsim/random.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qsim {

Circuit qft_circuit(int n, bool with_swaps) {
    Circuit c(n);
    for (Qubit i = 0; i < n; ++i) {
        c.add(gates::h(i));
        for (Qubit j = i + 1; j < n; ++j) {
            c.add(gates::cu1(j, i, kPi / std::ldexp(1.0, j - i)));
        }
    }
    if (with_swaps) {
        for (Qubit i = 0; i < n / 2; ++i) {
            c.add(gates::swap(i, n - 1 - i));
        }
    }
    return c;
}

Gate multi_controlled_z(std::span<const Qubit> qubits) {
    if (qubits.empty()) {
        throw Error(ErrorKind::InvalidArgument, "multi-controlled Z needs at least one qubit");
    }
    const Gate z = gates::z(qubits.back());
    return gates::controlled(z, std::vector<Qubit>(qubits.begin(), qubits.end() - 1));
}

GroverCircuit grover(int n, std::span<const Index> marked, std::optional<int> iterations) {
    check_qubit_count(n);
    const Index dim = Index{1} << n;
    const std::set<Index> unique(marked.begin(), marked.end());
    if (marked.empty() || unique.size() != marked.size() || marked.size() >= dim ||
        *unique.rbegin() >= dim) {
        throw Error(ErrorKind::InvalidOracle,
                    "marked set must hold 1 to 2^n - 1 distinct indices below 2^n");
    }
    const double fraction = static_cast<double>(marked.size()) / static_cast<double>(dim);
    const double theta = std::asin(std::sqrt(fraction));
    const int r = iterations.value_or(
        static_cast<int>(std::floor(kPi / 4 * std::sqrt(1.0 / fraction))));
    if (r < 0) {
        throw Error(ErrorKind::InvalidArgument, "iteration count must be non-negative");
    }

    std::vector<Qubit> all(static_cast<std::size_t>(n));
    for (Qubit q = 0; q < n; ++q) all[static_cast<std::size_t>(q)] = q;
    const Gate mcz = multi_controlled_z(all);

    Circuit c(n);
    for (const Qubit q : all) c.add(gates::h(q));
    for (int k = 0; k < r; ++k) {
        // Oracle: X-conjugation maps |m> to |1...1>, where MCZ flips the sign.
        for (const Index m : marked) {
            for (const Qubit q : all) {
                if (((m >> bit_position(n, q)) & 1U) == 0) c.add(gates::x(q));
            }
            c.add(mcz);
            for (const Qubit q : all) {
                if (((m >> bit_position(n, q)) & 1U) == 0) c.add(gates::x(q));
            }
        }
        // Diffusion up to a global sign: H X MCZ X H = 1 - 2|s><s|.
        for (const Qubit q : all) c.add(gates::h(q));
        for (const Qubit q : all) c.add(gates::x(q));
        c.add(mcz);
        for (const Qubit q : all) c.add(gates::x(q));
        for (const Qubit q : all) c.add(gates::h(q));
    }
    const double amplitude = std::sin((2 * r + 1) * theta);
    return {std::move(c), r, amplitude * amplitude};
}

double marked_probability(const StateVector &s, std::span<const Index> marked) {
    double p = 0.0;
    for (const Index m : marked) {
        if (m >= s.size()) {
            throw Error(ErrorKind::Index, "marked index " + std::to_string(m) + " out of range");
        }
        p += std::norm(s[m]);
    }
    return p;
}

std::size_t AnsatzSpec::n_params() const {
    return static_cast<std::size_t>(n_qubits) * static_cast<std::size_t>(depth + 1);
}

Circuit AnsatzSpec::build(std::span<const double> theta) const {
    if (depth < 0) {
        throw Error(ErrorKind::InvalidArgument, "ansatz depth must be non-negative");
    }
    if (theta.size() != n_params()) {
        throw Error(ErrorKind::Arity, "ansatz takes " + std::to_string(n_params()) +
                                          " parameters, got " + std::to_string(theta.size()));
    }
    Circuit c(n_qubits);
    std::size_t next = 0;
    const auto rotations = [&] {
        for (Qubit q = 0; q < n_qubits; ++q) c.add(gates::ry(q, theta[next++]));
    };
    for (int layer = 0; layer < depth; ++layer) {
        rotations();
        for (Qubit q = 0; q + 1 < n_qubits; ++q) c.add(gates::cz(q, q + 1));
        if (n_qubits > 2) c.add(gates::cz(n_qubits - 1, 0));
    }
    rotations();
    return c;
}

double ansatz_energy(const LocalHamiltonian &h, const AnsatzSpec &ansatz,
                     std::span<const double> theta) {
    if (h.n_qubits() != ansatz.n_qubits) {
        throw Error(ErrorKind::Dimension, "ansatz and Hamiltonian sizes differ");
    }
    return expectation(final_state(ansatz.build(theta)), h);
}

VqeResult vqe(const LocalHamiltonian &h, const AnsatzSpec &ansatz, const OptimizerSpec &spec,
              std::optional<std::vector<double>> theta0) {
    if (h.n_qubits() != ansatz.n_qubits) {
        throw Error(ErrorKind::Dimension, "ansatz and Hamiltonian sizes differ");
    }
    std::vector<double> start;
    if (theta0) {
        start = std::move(*theta0);
    } else {
        Rng rng(spec.seed);
        start.resize(ansatz.n_params());
        for (double &x : start) x = rng.uniform(-0.1, 0.1);
    }
    const OptimizeResult r = minimize(
        [&](std::span<const double> theta) { return ansatz_energy(h, ansatz, theta); },
        std::move(start), spec);
    return {r.f, r.x, r.evaluations, r.converged, r.history};
}

Circuit qaoa_circuit(const LocalHamiltonian &h_problem, std::span<const double> params,
                     const LocalHamiltonian *mixer) {
    if (params.empty() || params.size() % 2 != 0) {
        throw Error(ErrorKind::Arity, "QAOA takes 2p parameters, got " +
                                          std::to_string(params.size()));
    }
    const int n = h_problem.n_qubits();
    if (mixer && mixer->n_qubits() != n) {
        throw Error(ErrorKind::Dimension, "mixer and problem sizes differ");
    }
    const auto apply_terms = [](Circuit &c, const LocalHamiltonian &h, double t) {
        for (const PauliTerm &term : h.terms()) {
            if (term.pauli.find_first_not_of('I') != std::string::npos) {
                c.add(term_exponential(term, t));
            }
        }
    };
    Circuit c(n);
    for (Qubit q = 0; q < n; ++q) c.add(gates::h(q));
    for (std::size_t k = 0; k < params.size(); k += 2) {
        const double gamma = params[k];
        const double beta = params[k + 1];
        apply_terms(c, h_problem, gamma);
        if (mixer) {
            apply_terms(c, *mixer, beta);
        } else {
            for (Qubit q = 0; q < n; ++q) c.add(gates::rx(q, 2.0 * beta));
        }
    }
    return c;
}

double qaoa_energy(const LocalHamiltonian &h_problem, std::span<const double> params,
                   const LocalHamiltonian *mixer) {
    return expectation(final_state(qaoa_circuit(h_problem, params, mixer)), h_problem);
}

QaoaResult qaoa_optimize(const LocalHamiltonian &h_problem, int p, const OptimizerSpec &spec,
                         std::optional<std::vector<double>> params0,
                         const LocalHamiltonian *mixer) {
    if (p < 1) {
        throw Error(ErrorKind::InvalidArgument, "QAOA needs p >= 1");
    }
    std::vector<double> start;
    if (params0) {
        start = std::move(*params0);
    } else {
        for (int k = 1; k <= p; ++k) {
            const double f = (k - 0.5) / p;
            start.push_back(0.8 * f);
            start.push_back(0.8 * (1.0 - f));
        }
    }
    if (start.size() != 2 * static_cast<std::size_t>(p)) {
        throw Error(ErrorKind::Arity, "QAOA with p = " + std::to_string(p) + " takes " +
                                          std::to_string(2 * p) + " parameters");
    }
    const OptimizeResult r = minimize(
        [&](std::span<const double> params) { return qaoa_energy(h_problem, params, mixer); },
        std::move(start), spec);
    return {r.f, r.x, r.evaluations, r.converged};
}

FalqonResult falqon(const LocalHamiltonian &h_problem, const LocalHamiltonian &h_mixer, double dt,
                    int steps) {
    if (!(dt > 0.0) || steps < 1) {
        throw Error(ErrorKind::InvalidArgument, "FALQON needs dt > 0 and steps >= 1");
    }
    if (h_problem.n_qubits() != h_mixer.n_qubits()) {
        throw Error(ErrorKind::Dimension, "mixer and problem sizes differ");
    }
    const DenseHamiltonian hp = dense_from_local(h_problem);
    const DenseHamiltonian hm = dense_from_local(h_mixer);
    // Hermitian observable i [H_m, H_p].
    const Matrix feedback = kI * (hm.matrix() * hp.matrix() - hp.matrix() * hm.matrix());

    FalqonResult out{{}, {}, plus_state(h_problem.n_qubits()), true, {}};
    StateVector &psi = out.state;
    out.energies.push_back(expectation(psi, hp));
    double beta = 0.0;
    for (int k = 0; k < steps; ++k) {
        out.betas.push_back(beta);
        psi = exact_evolve(hp, dt, psi);
        psi = exact_evolve(hm, beta * dt, psi);
        const double energy = expectation(psi, hp);
        if (energy > out.energies.back() + 1e-6) {
            if (out.monotone) {
                out.warnings.push_back("<H_p> rose at step " + std::to_string(k + 1) +
                                       " (from " + std::to_string(out.energies.back()) + " to " +
                                       std::to_string(energy) + "); dt may be too large");
            }
            out.monotone = false;
        }
        out.energies.push_back(energy);

        const Eigen::Map<const Vector> v(psi.data(), static_cast<Eigen::Index>(psi.size()));
        const Complex a = v.dot(feedback * v);
        if (std::abs(a.imag()) > 1e-8) {
            throw Error(ErrorKind::Numerical, "commutator expectation has imaginary residue " +
                                                  std::to_string(a.imag()));
        }
        beta = -a.real();
    }
    return out;
}

AavqeResult aavqe(const LocalHamiltonian &h0, const LocalHamiltonian &h1, int steps,
                  const AnsatzSpec &ansatz, const OptimizerSpec &spec,
                  std::optional<std::vector<double>> theta0) {
    if (steps < 2) {
        throw Error(ErrorKind::InvalidArgument, "AAVQE needs at least 2 steps");
    }
    AavqeResult out;
    std::optional<std::vector<double>> warm = std::move(theta0);
    for (int j = 0; j < steps; ++j) {
        const double s = static_cast<double>(j) / (steps - 1);
        const VqeResult r = vqe(interpolate(h0, h1, s), ansatz, spec, warm);
        out.energies.push_back(r.energy);
        out.evaluations += r.evaluations;
        warm = r.theta;
    }
    out.theta = std::move(*warm);
    return out;
}

} // namespace qsim
