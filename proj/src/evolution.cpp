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
#include "qsim/evolution.hpp"

#include "qsim/backends.hpp"
#include "qsim/error.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace qsim {

std::string_view to_string(Solver solver) noexcept {
    switch (solver) {
    case Solver::Exact: return "exact";
    case Solver::Rk4: return "rk4";
    case Solver::Trotter: return "trotter";
    }
    return "unknown";
}

Solver parse_solver(std::string_view name) {
    for (const auto s : {Solver::Exact, Solver::Rk4, Solver::Trotter}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw Error(ErrorKind::NotFound, "unknown solver '" + std::string(name) + "'");
}

Gate term_exponential(const PauliTerm &term, double t) {
    const std::vector<Qubit> support = term.support();
    if (support.empty()) {
        throw Error(ErrorKind::InvalidArgument, "identity term has no gate form");
    }
    if (support.size() > 2) {
        throw Error(ErrorKind::Decomposition,
                    "term '" + term.pauli + "' acts on " + std::to_string(support.size()) +
                        " qubits; Trotter gates support at most 2");
    }
    std::string local;
    for (const Qubit q : support) {
        local += term.pauli[static_cast<std::size_t>(q)];
    }
    // P^2 = I, so exp(-i a P) = cos(a) I - i sin(a) P.
    const double a = term.coefficient * t;
    const Matrix p = pauli_matrix(local);
    const Matrix m = std::cos(a) * Matrix::Identity(p.rows(), p.cols()) - kI * std::sin(a) * p;
    std::string label = "exp_";
    for (const char c : local) {
        label += static_cast<char>(c - 'A' + 'a');
    }
    return Gate::unitary(m, support, {}, label);
}

Circuit trotter_circuit(const LocalHamiltonian &h, double dt, int order) {
    if (order != 1 && order != 2) {
        throw Error(ErrorKind::InvalidArgument,
                    "Trotter order must be 1 or 2, got " + std::to_string(order));
    }
    if (!std::isfinite(dt)) {
        throw Error(ErrorKind::StepSize, "time step must be finite");
    }
    std::vector<const PauliTerm *> active;
    for (const PauliTerm &t : h.terms()) {
        if (t.pauli.find_first_not_of('I') != std::string::npos) {
            active.push_back(&t);
        }
    }
    Circuit c(h.n_qubits());
    if (order == 1) {
        for (const PauliTerm *t : active) {
            c.add(term_exponential(*t, dt));
        }
        return c;
    }
    for (const PauliTerm *t : active) {
        c.add(term_exponential(*t, dt / 2));
    }
    for (auto it = active.rbegin(); it != active.rend(); ++it) {
        c.add(term_exponential(**it, dt / 2));
    }
    return c;
}

namespace {

// y = a + scale * b
void axpy(const StateVector &a, Complex scale, const StateVector &b, StateVector &y) {
    for (Index i = 0; i < a.size(); ++i) {
        y[i] = a[i] + scale * b[i];
    }
}

void rk4_step(const HamiltonianProvider &h, double t, double dt, StateVector &psi,
              StateVector &k1, StateVector &k2, StateVector &k3, StateVector &k4,
              StateVector &tmp) {
    const Complex minus_i{0.0, -1.0};
    const LocalHamiltonian h0 = h(t);
    const LocalHamiltonian hm = h(t + dt / 2);
    const LocalHamiltonian h1 = h(t + dt);
    // k = -i H psi, folded into the axpy scale factors below.
    apply_hamiltonian(h0, psi, k1);
    axpy(psi, minus_i * (dt / 2), k1, tmp);
    apply_hamiltonian(hm, tmp, k2);
    axpy(psi, minus_i * (dt / 2), k2, tmp);
    apply_hamiltonian(hm, tmp, k3);
    axpy(psi, minus_i * dt, k3, tmp);
    apply_hamiltonian(h1, tmp, k4);
    const Complex w = minus_i * (dt / 6);
    for (Index i = 0; i < psi.size(); ++i) {
        psi[i] += w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    const double drift = std::abs(psi.norm_squared() - 1.0);
    if (drift > 1e-6) {
        throw Error(ErrorKind::StepSize, "RK4 norm drift " + std::to_string(drift) +
                                             " at t = " + std::to_string(t) +
                                             " exceeds 1e-6; use a smaller dt");
    }
    psi.normalize();
}

} // namespace

EvolutionResult time_evolve(const HamiltonianProvider &h, double total_time, double dt,
                            const StateVector &initial, const EvolutionOptions &options) {
    if (!(dt > 0.0) || !(total_time > 0.0) || dt > total_time * (1.0 + 1e-12)) {
        throw Error(ErrorKind::StepSize, "need 0 < dt <= T, got dt = " + std::to_string(dt) +
                                             ", T = " + std::to_string(total_time));
    }
    const auto steps = static_cast<std::size_t>(std::ceil(total_time / dt - 1e-9));
    const int n = initial.n_qubits();

    EvolutionResult result{initial, {}, {}};
    StateVector &psi = result.state;
    const auto record = [&](double t) {
        if (options.record_energy) {
            result.times.push_back(t);
            result.energies.push_back(expectation(psi, h(t)));
        }
    };
    record(0.0);

    std::optional<StateVector> k1, k2, k3, k4, tmp;
    if (options.solver == Solver::Rk4) {
        k1.emplace(n);
        k2.emplace(n);
        k3.emplace(n);
        k4.emplace(n);
        tmp.emplace(n);
    }
    const auto backend = active_backend();
    for (std::size_t k = 0; k < steps; ++k) {
        const double t0 = static_cast<double>(k) * dt;
        const double t1 = k + 1 == steps ? total_time : t0 + dt;
        const double step = t1 - t0;
        switch (options.solver) {
        case Solver::Exact:
            psi = exact_evolve(dense_from_local(h(t0 + step / 2)), step, psi);
            break;
        case Solver::Rk4:
            rk4_step(h, t0, step, psi, *k1, *k2, *k3, *k4, *tmp);
            break;
        case Solver::Trotter:
            run(trotter_circuit(h(t0 + step / 2), step, options.trotter_order), psi, *backend);
            break;
        }
        record(t1);
    }
    return result;
}

Schedule::Schedule(Shape shape, std::vector<double> lambda)
    : shape_(std::move(shape)), lambda_(std::move(lambda)) {
    const double start = shape_(0.0, lambda_);
    const double end = shape_(1.0, lambda_);
    if (!(std::abs(start) <= 1e-12) || !(std::abs(end - 1.0) <= 1e-12)) {
        throw Error(ErrorKind::Schedule, "schedule must satisfy s(0) = 0 and s(1) = 1, got s(0) = " +
                                             std::to_string(start) +
                                             ", s(1) = " + std::to_string(end));
    }
}

Schedule Schedule::linear() {
    return Schedule([](double x, std::span<const double>) { return x; });
}

Schedule Schedule::polynomial(std::vector<double> lambda) {
    return Schedule(
        [](double x, std::span<const double> l) {
            double poly = 0.0;
            for (auto it = l.rbegin(); it != l.rend(); ++it) {
                poly = poly * x + *it;
            }
            return x + x * (1.0 - x) * poly;
        },
        std::move(lambda));
}

double Schedule::operator()(double x) const { return shape_(std::clamp(x, 0.0, 1.0), lambda_); }

ScheduleFamily polynomial_family() {
    return [](std::span<const double> lambda) {
        return Schedule::polynomial(std::vector<double>(lambda.begin(), lambda.end()));
    };
}

EvolutionResult adiabatic_evolve(const LocalHamiltonian &h0, const LocalHamiltonian &h1,
                                 const Schedule &schedule, double total_time, double dt,
                                 const StateVector &initial, const EvolutionOptions &options) {
    if (h0.n_qubits() != h1.n_qubits() || initial.n_qubits() != h0.n_qubits()) {
        throw Error(ErrorKind::Dimension, "h0, h1 and the initial state must share a size");
    }
    const HamiltonianProvider path = [&](double t) {
        return interpolate(h0, h1, schedule(t / total_time));
    };
    return time_evolve(path, total_time, dt, initial, options);
}

EvolutionResult adiabatic_evolve(const LocalHamiltonian &h0, const LocalHamiltonian &h1,
                                 const Schedule &schedule, double total_time, double dt,
                                 const EvolutionOptions &options) {
    return adiabatic_evolve(h0, h1, schedule, total_time, dt,
                            dense_from_local(h0).ground_state(), options);
}

ScheduleOptimum optimize_schedule(const LocalHamiltonian &h0, const LocalHamiltonian &h1,
                                  const ScheduleFamily &family, std::vector<double> lambda0,
                                  double total_time, double dt, const OptimizerSpec &spec,
                                  const EvolutionOptions &options) {
    if (lambda0.empty()) {
        throw Error(ErrorKind::InvalidArgument, "schedule family needs at least one parameter");
    }
    const StateVector start = dense_from_local(h0).ground_state();
    EvolutionOptions quiet = options;
    quiet.record_energy = false;
    const auto final_energy = [&](const Schedule &s) {
        return expectation(adiabatic_evolve(h0, h1, s, total_time, dt, start, quiet).state, h1);
    };

    ScheduleOptimum out;
    out.linear_energy = final_energy(Schedule::linear());
    const OptimizeResult best = minimize(
        [&](std::span<const double> lambda) { return final_energy(family(lambda)); },
        lambda0, spec);
    out.lambda = best.x;
    out.energy = best.f;
    out.converged = best.converged;
    out.evaluations = best.evaluations;

    const std::vector<double> zero(lambda0.size(), 0.0);
    const double at_zero = final_energy(family(zero));
    if (at_zero < out.energy) {
        out.lambda = zero;
        out.energy = at_zero;
    }
    return out;
}

} // namespace qsim
