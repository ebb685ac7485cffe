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
 * Classical minimizers used by the variational models.
 *
 *   simplex                  Nelder-Mead (reflection 1, expansion 2,
 *                            contraction 1/2, shrink 1/2), restarted from
 *                            the best vertex while restarts keep improving.
 *   evolution-strategy       (mu=4 + lambda=12) Gaussian strategy with a
 *                            global step size adapted by the one-fifth rule.
 *   parameter-shift-descent  Gradient descent where each partial derivative
 *                            is [f(x + pi/2 e_k) - f(x - pi/2 e_k)] / 2. Exact
 *                            for objectives built from exp(-i theta P / 2)
 *                            rotations, meaningless otherwise.
 *
 * Every method is deterministic for a given seed and never exceeds the
 * evaluation budget.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace qsim {

enum class OptimizerMethod { Simplex, EvolutionStrategy, ParameterShiftDescent };

std::string_view to_string(OptimizerMethod method) noexcept;
/// "simplex", "evolution-strategy", "parameter-shift-descent"; throws NotFound.
OptimizerMethod parse_optimizer_method(std::string_view name);

struct OptimizerSpec {
    OptimizerMethod method = OptimizerMethod::Simplex;
    std::size_t budget = 1000;  ///< maximum objective evaluations
    double tolerance = 1e-10;   ///< objective stagnation threshold
    double xtol = 1e-8;         ///< simplex diameter / ES step floor
    double initial_step = 0.5;  ///< simplex edge or ES sigma
    double learning_rate = 0.1; ///< parameter-shift descent
    std::uint64_t seed = 0;
};

struct OptimizeResult {
    std::vector<double> x;
    double f = 0.0;
    std::size_t evaluations = 0;
    /// False when the budget ran out before the stopping rule fired.
    bool converged = false;
    /// Best objective value after each iteration (generation, step).
    std::vector<double> history;
};

using Objective = std::function<double(std::span<const double>)>;

/// Throws InvalidArgument for an empty x0 or zero budget, and Numerical
/// (naming the offending point) if the objective returns a non-finite value.
OptimizeResult minimize(const Objective &f, std::vector<double> x0, const OptimizerSpec &spec);

/// Shift-rule gradient of f at x (2 * x.size() evaluations).
std::vector<double> parameter_shift_gradient(const Objective &f, std::span<const double> x);

} // namespace qsim
