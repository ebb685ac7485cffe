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

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>

namespace qsim {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major semantics via operator()(row, col).
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Qubit label. Qubit 0 is the most significant bit of a basis index.
using Qubit = int;

/// Basis-state index in [0, 2^n).
using Index = std::uint64_t;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

} // namespace qsim
