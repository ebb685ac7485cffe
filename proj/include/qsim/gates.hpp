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
 * Gate catalog.
 *
 * A Gate stores the 2^m x 2^m matrix acting on its m targets only; control
 * qubits are kept separately and never enter the matrix. Within the matrix,
 * targets[0] is the most significant bit of the row/column index.
 *
 * Conventions:
 *   RX(t) = exp(-i t X / 2) = [[cos(t/2), -i sin(t/2)], [-i sin(t/2), cos(t/2)]]
 *   RY(t) = exp(-i t Y / 2) = [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]
 *   RZ(t) = exp(-i t Z / 2) = diag(e^{-it/2}, e^{it/2})
 *   U1(l) = diag(1, e^{il})
 *   U2(p, l) = U3(pi/2, p, l)
 *   U3(t, p, l) = [[cos(t/2), -e^{il} sin(t/2)],
 *                  [e^{ip} sin(t/2), e^{i(p+l)} cos(t/2)]]
 *   CNOT = X controlled by one qubit, CZ = Z controlled, CU1 = U1 controlled,
 *   TOFFOLI = X controlled by two qubits.
 */
#pragma once

#include "qsim/types.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsim {

enum class GateKind {
    I,
    X,
    Y,
    Z,
    H,
    S,
    Sdg,
    T,
    Tdg,
    RX,
    RY,
    RZ,
    U1,
    U2,
    U3,
    Swap,
    Unitary,
};

struct GateInfo {
    GateKind kind;
    std::string_view name; // lowercase base identifier
    int n_targets;         // 0 for Unitary (variable)
    int n_params;
};

const GateInfo &gate_info(GateKind kind);

/// Largest target count accepted for custom unitaries.
inline constexpr int kMaxCustomTargets = 6;

class Gate {
  public:
    Gate(GateKind kind, std::vector<Qubit> targets,
         std::vector<Qubit> controls = {}, std::vector<double> params = {});

    /// User-supplied unitary on `targets`; throws if the matrix is not a
    /// unitary of matching dimension.
    static Gate unitary(Matrix matrix, std::vector<Qubit> targets,
                        std::vector<Qubit> controls = {},
                        std::string label = "unitary");

    [[nodiscard]] GateKind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::vector<Qubit> &targets() const noexcept {
        return targets_;
    }
    [[nodiscard]] const std::vector<Qubit> &controls() const noexcept {
        return controls_;
    }
    [[nodiscard]] const std::vector<double> &params() const noexcept {
        return params_;
    }
    /// Matrix acting on targets only.
    [[nodiscard]] const Matrix &matrix() const noexcept { return matrix_; }
    [[nodiscard]] const std::string &label() const noexcept { return label_; }

    /// Controls followed by targets.
    [[nodiscard]] std::vector<Qubit> qubits() const;
    [[nodiscard]] int n_params() const noexcept {
        return static_cast<int>(params_.size());
    }
    [[nodiscard]] bool is_parameterized() const noexcept { return !params_.empty(); }

    /// QASM-style identifier including control prefixes ("cx", "ccx", "cu1");
    /// empty when the combination has no textual name.
    [[nodiscard]] std::string name() const;

    /// Copy with new angles and a regenerated matrix.
    [[nodiscard]] Gate with_params(std::vector<double> params) const;

  private:
    Gate() = default;

    GateKind kind_ = GateKind::I;
    std::vector<Qubit> targets_;
    std::vector<Qubit> controls_;
    std::vector<double> params_;
    Matrix matrix_;
    std::string label_;
};

/// Target-only matrix of a catalog gate.
Matrix base_matrix(GateKind kind, std::span<const double> params);

/// Standard matrix of a named catalog gate. Controlled names ("cx", "cnot",
/// "cz", "cu1", "ccx", "toffoli", ...) return the full matrix over
/// controls followed by targets.
Matrix matrix_of(std::string_view name, std::span<const double> params);

/// Resolves a lowercase identifier into base kind plus control count.
struct ResolvedName {
    GateKind kind;
    int n_controls;
};
std::optional<ResolvedName> resolve_gate_name(std::string_view name);

/// Conjugate-transposed gate acting on the same qubits. Named gates map to
/// named gates (S -> SDG, RX(t) -> RX(-t), U3(t,p,l) -> U3(-t,-l,-p)).
Gate dagger(const Gate &g);

/// True iff ||m m^dagger - I||_max < tol. Throws Shape for non-square or
/// non-power-of-two input.
bool validate_unitary(const Matrix &m, double tol = 1e-10);

/// Lifts a target matrix to the full matrix over (controls..., targets...)
/// with the controlled block in the bottom-right corner.
Matrix controlled_matrix(const Matrix &target_matrix, int n_controls);

namespace gates {

Gate id(Qubit q);
Gate x(Qubit q);
Gate y(Qubit q);
Gate z(Qubit q);
Gate h(Qubit q);
Gate s(Qubit q);
Gate sdg(Qubit q);
Gate t(Qubit q);
Gate tdg(Qubit q);
Gate rx(Qubit q, double theta);
Gate ry(Qubit q, double theta);
Gate rz(Qubit q, double theta);
Gate u1(Qubit q, double lambda);
Gate u2(Qubit q, double phi, double lambda);
Gate u3(Qubit q, double theta, double phi, double lambda);
Gate cnot(Qubit control, Qubit target);
Gate cz(Qubit control, Qubit target);
Gate cu1(Qubit control, Qubit target, double lambda);
Gate swap(Qubit a, Qubit b);
Gate toffoli(Qubit c0, Qubit c1, Qubit target);

/// Adds control qubits to any gate.
Gate controlled(const Gate &g, std::vector<Qubit> extra_controls);

} // namespace gates

} // namespace qsim
