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
#include "qsim/gates.hpp"

#include "qsim/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

namespace qsim {

namespace {

constexpr std::array<GateInfo, 17> kCatalog{{
    {GateKind::I, "id", 1, 0},
    {GateKind::X, "x", 1, 0},
    {GateKind::Y, "y", 1, 0},
    {GateKind::Z, "z", 1, 0},
    {GateKind::H, "h", 1, 0},
    {GateKind::S, "s", 1, 0},
    {GateKind::Sdg, "sdg", 1, 0},
    {GateKind::T, "t", 1, 0},
    {GateKind::Tdg, "tdg", 1, 0},
    {GateKind::RX, "rx", 1, 1},
    {GateKind::RY, "ry", 1, 1},
    {GateKind::RZ, "rz", 1, 1},
    {GateKind::U1, "u1", 1, 1},
    {GateKind::U2, "u2", 1, 2},
    {GateKind::U3, "u3", 1, 3},
    {GateKind::Swap, "swap", 2, 0},
    {GateKind::Unitary, "unitary", 0, 0},
}};

// Base gates with a single-control textual form ("c" + name).
bool has_controlled_name(GateKind kind) {
    switch (kind) {
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::U1:
    case GateKind::U3:
    case GateKind::Swap:
        return true;
    default:
        return false;
    }
}

std::optional<GateKind> base_kind(std::string_view name) {
    for (const GateInfo &info : kCatalog) {
        if (info.kind != GateKind::Unitary && info.name == name) {
            return info.kind;
        }
    }
    return std::nullopt;
}

void check_qubit_lists(const std::vector<Qubit> &targets,
                       const std::vector<Qubit> &controls) {
    std::vector<Qubit> all = controls;
    all.insert(all.end(), targets.begin(), targets.end());
    for (const Qubit q : all) {
        if (q < 0) {
            throw Error(ErrorKind::Index, "negative qubit index " + std::to_string(q));
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw Error(ErrorKind::Index,
                    "gate targets and controls must be pairwise distinct");
    }
}

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

Matrix u3_matrix(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return mat2(c, -std::polar(1.0, lambda) * s, std::polar(1.0, phi) * s,
                std::polar(1.0, phi + lambda) * c);
}

} // namespace

const GateInfo &gate_info(GateKind kind) {
    for (const GateInfo &info : kCatalog) {
        if (info.kind == kind) {
            return info;
        }
    }
    throw Error(ErrorKind::UnknownGate, "unknown gate kind");
}

Matrix base_matrix(GateKind kind, std::span<const double> params) {
    const GateInfo &info = gate_info(kind);
    if (kind == GateKind::Unitary) {
        throw Error(ErrorKind::UnknownGate,
                    "custom unitaries have no catalog matrix");
    }
    if (static_cast<int>(params.size()) != info.n_params) {
        throw Error(ErrorKind::Arity, "gate '" + std::string(info.name) +
                                          "' takes " +
                                          std::to_string(info.n_params) +
                                          " angle(s), got " +
                                          std::to_string(params.size()));
    }
    const double r = 1.0 / std::sqrt(2.0);
    switch (kind) {
    case GateKind::I:
        return Matrix::Identity(2, 2);
    case GateKind::X:
        return mat2(0, 1, 1, 0);
    case GateKind::Y:
        return mat2(0, -kI, kI, 0);
    case GateKind::Z:
        return mat2(1, 0, 0, -1);
    case GateKind::H:
        return mat2(r, r, r, -r);
    case GateKind::S:
        return mat2(1, 0, 0, kI);
    case GateKind::Sdg:
        return mat2(1, 0, 0, -kI);
    case GateKind::T:
        return mat2(1, 0, 0, std::polar(1.0, kPi / 4.0));
    case GateKind::Tdg:
        return mat2(1, 0, 0, std::polar(1.0, -kPi / 4.0));
    case GateKind::RX: {
        const double c = std::cos(params[0] / 2.0);
        const double s = std::sin(params[0] / 2.0);
        return mat2(c, -kI * s, -kI * s, c);
    }
    case GateKind::RY: {
        const double c = std::cos(params[0] / 2.0);
        const double s = std::sin(params[0] / 2.0);
        return mat2(c, -s, s, c);
    }
    case GateKind::RZ:
        return mat2(std::polar(1.0, -params[0] / 2.0), 0, 0,
                    std::polar(1.0, params[0] / 2.0));
    case GateKind::U1:
        return mat2(1, 0, 0, std::polar(1.0, params[0]));
    case GateKind::U2:
        return u3_matrix(kPi / 2.0, params[0], params[1]);
    case GateKind::U3:
        return u3_matrix(params[0], params[1], params[2]);
    case GateKind::Swap: {
        Matrix m = Matrix::Zero(4, 4);
        m(0, 0) = 1;
        m(1, 2) = 1;
        m(2, 1) = 1;
        m(3, 3) = 1;
        return m;
    }
    case GateKind::Unitary:
        break;
    }
    throw Error(ErrorKind::UnknownGate, "unknown gate kind");
}

std::optional<ResolvedName> resolve_gate_name(std::string_view name) {
    if (auto kind = base_kind(name)) {
        return ResolvedName{*kind, 0};
    }
    if (name == "i") {
        return ResolvedName{GateKind::I, 0};
    }
    if (name == "cnot") {
        return ResolvedName{GateKind::X, 1};
    }
    if (name == "ccx" || name == "toffoli") {
        return ResolvedName{GateKind::X, 2};
    }
    if (name.size() > 1 && name.front() == 'c') {
        if (auto kind = base_kind(name.substr(1));
            kind && has_controlled_name(*kind)) {
            return ResolvedName{*kind, 1};
        }
    }
    return std::nullopt;
}

Matrix controlled_matrix(const Matrix &target_matrix, int n_controls) {
    const Eigen::Index block = target_matrix.rows();
    const Eigen::Index dim = block << n_controls;
    Matrix m = Matrix::Identity(dim, dim);
    m.bottomRightCorner(block, block) = target_matrix;
    return m;
}

Matrix matrix_of(std::string_view name, std::span<const double> params) {
    const auto resolved = resolve_gate_name(name);
    if (!resolved) {
        throw Error(ErrorKind::UnknownGate, "unknown gate '" + std::string(name) + "'");
    }
    const Matrix base = base_matrix(resolved->kind, params);
    return resolved->n_controls == 0 ? base
                                     : controlled_matrix(base, resolved->n_controls);
}

bool validate_unitary(const Matrix &m, double tol) {
    const auto dim = static_cast<std::uint64_t>(m.rows());
    if (m.rows() != m.cols() || dim == 0 || !std::has_single_bit(dim)) {
        throw Error(ErrorKind::Shape,
                    "expected a square matrix with power-of-two dimension, got " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    const Matrix residual = m * m.adjoint() - Matrix::Identity(m.rows(), m.cols());
    return residual.cwiseAbs().maxCoeff() < tol;
}

Gate::Gate(GateKind kind, std::vector<Qubit> targets, std::vector<Qubit> controls,
           std::vector<double> params)
    : kind_(kind), targets_(std::move(targets)), controls_(std::move(controls)),
      params_(std::move(params)) {
    const GateInfo &info = gate_info(kind_);
    if (kind_ == GateKind::Unitary) {
        throw Error(ErrorKind::InvalidArgument, "use Gate::unitary for custom matrices");
    }
    if (static_cast<int>(targets_.size()) != info.n_targets) {
        throw Error(ErrorKind::Arity, "gate '" + std::string(info.name) +
                                          "' acts on " +
                                          std::to_string(info.n_targets) +
                                          " target(s), got " +
                                          std::to_string(targets_.size()));
    }
    check_qubit_lists(targets_, controls_);
    matrix_ = base_matrix(kind_, params_);
    label_ = std::string(info.name);
}

Gate Gate::unitary(Matrix matrix, std::vector<Qubit> targets,
                   std::vector<Qubit> controls, std::string label) {
    const auto m = static_cast<int>(targets.size());
    if (m < 1 || m > kMaxCustomTargets) {
        throw Error(ErrorKind::UnsupportedSize,
                    "custom unitary must act on 1.." +
                        std::to_string(kMaxCustomTargets) + " targets, got " +
                        std::to_string(m));
    }
    if (matrix.rows() != (Eigen::Index{1} << m) || matrix.cols() != matrix.rows()) {
        throw Error(ErrorKind::Shape, "custom unitary on " + std::to_string(m) +
                                          " target(s) must be " +
                                          std::to_string(1 << m) + "x" +
                                          std::to_string(1 << m));
    }
    if (!validate_unitary(matrix)) {
        throw Error(ErrorKind::InvalidArgument, "matrix for '" + label + "' is not unitary");
    }
    check_qubit_lists(targets, controls);
    Gate g;
    g.kind_ = GateKind::Unitary;
    g.targets_ = std::move(targets);
    g.controls_ = std::move(controls);
    g.matrix_ = std::move(matrix);
    g.label_ = std::move(label);
    return g;
}

std::vector<Qubit> Gate::qubits() const {
    std::vector<Qubit> all = controls_;
    all.insert(all.end(), targets_.begin(), targets_.end());
    return all;
}

std::string Gate::name() const {
    if (kind_ == GateKind::Unitary) {
        return {};
    }
    const std::string base(gate_info(kind_).name);
    switch (controls_.size()) {
    case 0:
        return base;
    case 1:
        return has_controlled_name(kind_) ? "c" + base : std::string{};
    case 2:
        return kind_ == GateKind::X ? "ccx" : std::string{};
    default:
        return {};
    }
}

Gate Gate::with_params(std::vector<double> params) const {
    if (kind_ == GateKind::Unitary) {
        if (!params.empty()) {
            throw Error(ErrorKind::Arity, "custom unitaries take no angles");
        }
        return *this;
    }
    return Gate(kind_, targets_, controls_, std::move(params));
}

Gate dagger(const Gate &g) {
    const auto &p = g.params();
    switch (g.kind()) {
    case GateKind::I:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::Swap:
        return g;
    case GateKind::S:
        return Gate(GateKind::Sdg, g.targets(), g.controls());
    case GateKind::Sdg:
        return Gate(GateKind::S, g.targets(), g.controls());
    case GateKind::T:
        return Gate(GateKind::Tdg, g.targets(), g.controls());
    case GateKind::Tdg:
        return Gate(GateKind::T, g.targets(), g.controls());
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::U1:
        return Gate(g.kind(), g.targets(), g.controls(), {-p[0]});
    case GateKind::U2:
        return Gate(GateKind::U3, g.targets(), g.controls(), {-kPi / 2.0, -p[1], -p[0]});
    case GateKind::U3:
        return Gate(GateKind::U3, g.targets(), g.controls(), {-p[0], -p[2], -p[1]});
    case GateKind::Unitary:
        return Gate::unitary(g.matrix().adjoint(), g.targets(), g.controls(),
                             g.label() + "_dg");
    }
    throw Error(ErrorKind::UnknownGate, "unknown gate kind");
}

namespace gates {

Gate id(Qubit q) { return Gate(GateKind::I, {q}); }
Gate x(Qubit q) { return Gate(GateKind::X, {q}); }
Gate y(Qubit q) { return Gate(GateKind::Y, {q}); }
Gate z(Qubit q) { return Gate(GateKind::Z, {q}); }
Gate h(Qubit q) { return Gate(GateKind::H, {q}); }
Gate s(Qubit q) { return Gate(GateKind::S, {q}); }
Gate sdg(Qubit q) { return Gate(GateKind::Sdg, {q}); }
Gate t(Qubit q) { return Gate(GateKind::T, {q}); }
Gate tdg(Qubit q) { return Gate(GateKind::Tdg, {q}); }
Gate rx(Qubit q, double theta) { return Gate(GateKind::RX, {q}, {}, {theta}); }
Gate ry(Qubit q, double theta) { return Gate(GateKind::RY, {q}, {}, {theta}); }
Gate rz(Qubit q, double theta) { return Gate(GateKind::RZ, {q}, {}, {theta}); }
Gate u1(Qubit q, double lambda) { return Gate(GateKind::U1, {q}, {}, {lambda}); }
Gate u2(Qubit q, double phi, double lambda) {
    return Gate(GateKind::U2, {q}, {}, {phi, lambda});
}
Gate u3(Qubit q, double theta, double phi, double lambda) {
    return Gate(GateKind::U3, {q}, {}, {theta, phi, lambda});
}
Gate cnot(Qubit control, Qubit target) {
    return Gate(GateKind::X, {target}, {control});
}
Gate cz(Qubit control, Qubit target) { return Gate(GateKind::Z, {target}, {control}); }
Gate cu1(Qubit control, Qubit target, double lambda) {
    return Gate(GateKind::U1, {target}, {control}, {lambda});
}
Gate swap(Qubit a, Qubit b) { return Gate(GateKind::Swap, {a, b}); }
Gate toffoli(Qubit c0, Qubit c1, Qubit target) {
    return Gate(GateKind::X, {target}, {c0, c1});
}

Gate controlled(const Gate &g, std::vector<Qubit> extra_controls) {
    std::vector<Qubit> controls = g.controls();
    controls.insert(controls.end(), extra_controls.begin(), extra_controls.end());
    if (g.kind() == GateKind::Unitary) {
        return Gate::unitary(g.matrix(), g.targets(), std::move(controls), g.label());
    }
    return Gate(g.kind(), g.targets(), std::move(controls), g.params());
}

} // namespace gates

} // namespace qsim
