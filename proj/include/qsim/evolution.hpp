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
 * Time evolution under H(t): exact stepwise propagation, classic RK4 and
 * Trotter product formulas; adiabatic interpolation between two
 * Hamiltonians with parametric schedules.
 *
 * Time-dependent steps evaluate H at the step midpoint (exact, Trotter);
 * RK4 samples H at t, t + dt/2 and t + dt.
 */
#pragma once

#include "qsim/circuit.hpp"
#include "qsim/hamiltonian.hpp"
#include "qsim/optimizers.hpp"

#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace qsim {

enum class Solver { Exact, Rk4, Trotter };

std::string_view to_string(Solver solver) noexcept;
/// "exact", "rk4", "trotter"; throws NotFound.
Solver parse_solver(std::string_view name);

/// exp(-i c t P) restricted to the support of P, as a custom gate on those
/// qubits (ascending). Throws Decomposition when the support exceeds two
/// qubits and InvalidArgument for the identity string.
Gate term_exponential(const PauliTerm &term, double t);

/// Order 1: prod_k exp(-i c_k P_k dt) in term order. Order 2: the same
/// sweep with dt/2 forward then backward. Identity terms contribute a
/// global phase only and are dropped.
Circuit trotter_circuit(const LocalHamiltonian &h, double dt, int order = 2);

struct EvolutionOptions {
    Solver solver = Solver::Exact;
    int trotter_order = 2;
    /// Records <H(t)> at t = 0 and after every step.
    bool record_energy = true;
};

struct EvolutionResult {
    StateVector state;
    std::vector<double> times;
    std::vector<double> energies;
};

using HamiltonianProvider = std::function<LocalHamiltonian(double t)>;

/// Integrates i d/dt psi = H(t) psi from 0 to T. When dt does not divide T
/// the last step is shortened. Throws StepSize when dt <= 0 or dt > T, and
/// when an RK4 step drifts the norm by more than 1e-6 (use a smaller dt).
EvolutionResult time_evolve(const HamiltonianProvider &h, double total_time, double dt,
                            const StateVector &initial, const EvolutionOptions &options = {});

/// s(x; lambda) on x = t/T in [0, 1] with s(0) = 0 and s(1) = 1.
class Schedule {
  public:
    using Shape = std::function<double(double x, std::span<const double> lambda)>;

    /// Throws Schedule unless |s(0)| and |s(1) - 1| are within 1e-12.
    explicit Schedule(Shape shape, std::vector<double> lambda = {});

    static Schedule linear();
    /// s = x + x (1 - x) sum_k lambda_k x^k.
    static Schedule polynomial(std::vector<double> lambda);

    /// x is clamped to [0, 1].
    double operator()(double x) const;
    [[nodiscard]] const std::vector<double> &parameters() const noexcept { return lambda_; }

  private:
    Shape shape_;
    std::vector<double> lambda_;
};

using ScheduleFamily = std::function<Schedule(std::span<const double> lambda)>;

/// Schedule::polynomial as a family; lambda = 0 is the linear schedule.
ScheduleFamily polynomial_family();

/// H(t) = (1 - s(t/T)) h0 + s(t/T) h1, started from `initial`.
EvolutionResult adiabatic_evolve(const LocalHamiltonian &h0, const LocalHamiltonian &h1,
                                 const Schedule &schedule, double total_time, double dt,
                                 const StateVector &initial,
                                 const EvolutionOptions &options = {});
/// Same, started from the ground state of h0 (dense eigensolver, so n is
/// limited to kMaxDenseQubits).
EvolutionResult adiabatic_evolve(const LocalHamiltonian &h0, const LocalHamiltonian &h1,
                                 const Schedule &schedule, double total_time, double dt,
                                 const EvolutionOptions &options = {});

struct ScheduleOptimum {
    std::vector<double> lambda;
    double energy = 0.0;        ///< final <h1> at lambda
    double linear_energy = 0.0; ///< final <h1> under the linear schedule
    bool converged = false;
    std::size_t evaluations = 0;
};

/// Minimizes the final <h1> over the family's parameters starting from
/// lambda0. The family's zero point is also evaluated and returned when it
/// beats the optimizer, so for families containing the linear schedule at
/// lambda = 0 the result never loses to linear.
ScheduleOptimum optimize_schedule(const LocalHamiltonian &h0, const LocalHamiltonian &h1,
                                  const ScheduleFamily &family, std::vector<double> lambda0,
                                  double total_time, double dt, const OptimizerSpec &spec,
                                  const EvolutionOptions &options = {});

} // namespace qsim
