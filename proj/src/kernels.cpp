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
#include "qsim/kernels.hpp"

#include "qsim/error.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <utility>

namespace qsim::kernels {

namespace {

std::atomic<int> g_threads{0};

int resolved_threads() {
    const int requested = g_threads.load();
    return requested > 0 ? requested : omp_get_max_threads();
}

// Runs body(g) for every g in [0, n_groups). Chunks are contiguous and at
// least kMinChunkGroups long; each g touches a disjoint amplitude set.
template <class Body>
void for_each_group(Index n_groups, Index n_amplitudes, Body &&body) {
    const int threads = n_amplitudes < kMinParallelAmplitudes ? 1 : resolved_threads();
    if (threads <= 1 || n_groups <= kMinChunkGroups) {
        for (Index g = 0; g < n_groups; ++g) {
            body(g);
        }
        return;
    }
    const auto workers = static_cast<Index>(threads);
    const Index chunk = std::max(kMinChunkGroups, (n_groups + workers - 1) / workers);
    const auto n_chunks = static_cast<std::int64_t>((n_groups + chunk - 1) / chunk);
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::int64_t c = 0; c < n_chunks; ++c) {
        const Index begin = static_cast<Index>(c) * chunk;
        const Index end = std::min(n_groups, begin + chunk);
        for (Index g = begin; g < end; ++g) {
            body(g);
        }
    }
}

void check_qubits(int n, std::span<const Qubit> targets,
                  std::span<const Qubit> controls) {
    std::vector<Qubit> all(controls.begin(), controls.end());
    all.insert(all.end(), targets.begin(), targets.end());
    for (const Qubit q : all) {
        if (q < 0 || q >= n) {
            throw Error(ErrorKind::Index, "qubit " + std::to_string(q) +
                                              " out of range for " +
                                              std::to_string(n) + " qubits");
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw Error(ErrorKind::Index, "targets and controls must be distinct");
    }
}

void check_matrix(const Matrix &g, std::size_t m) {
    if (m == 0) {
        throw Error(ErrorKind::Index, "gate needs at least one target");
    }
    if (m > static_cast<std::size_t>(kMaxCustomTargets)) {
        throw Error(ErrorKind::UnsupportedSize,
                    "kernels support at most " + std::to_string(kMaxCustomTargets) +
                        " targets, got " + std::to_string(m));
    }
    const Eigen::Index dim = Eigen::Index{1} << m;
    if (g.rows() != dim || g.cols() != dim) {
        throw Error(ErrorKind::Shape, "matrix is " + std::to_string(g.rows()) + "x" +
                                          std::to_string(g.cols()) + ", expected " +
                                          std::to_string(dim) + "x" +
                                          std::to_string(dim));
    }
}

void one_qubit_kernel(StateVector &s, const Matrix &g, Qubit target,
                      std::span<const Qubit> controls) {
    const Qubit targets[] = {target};
    const IndexPlan plan(s.n_qubits(), targets, controls);
    const Index stride = plan.offsets()[1];
    const Complex g00 = g(0, 0);
    const Complex g01 = g(0, 1);
    const Complex g10 = g(1, 0);
    const Complex g11 = g(1, 1);
    Complex *psi = s.data();
    for_each_group(plan.n_groups(), s.size(), [&](Index grp) {
        const Index i0 = plan.base(grp);
        const Index i1 = i0 + stride;
        const Complex a0 = psi[i0];
        const Complex a1 = psi[i1];
        psi[i0] = g00 * a0 + g01 * a1;
        psi[i1] = g10 * a0 + g11 * a1;
    });
}

void general_kernel(StateVector &s, const Matrix &g, std::span<const Qubit> targets,
                    std::span<const Qubit> controls) {
    const IndexPlan plan(s.n_qubits(), targets, controls);
    const std::size_t dim = plan.offsets().size();
    // Row-major copy of the gate so the inner loop walks contiguous memory.
    std::vector<Complex> flat(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            flat[r * dim + c] =
                g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    const std::span<const Index> offsets = plan.offsets();
    Complex *psi = s.data();
    for_each_group(plan.n_groups(), s.size(), [&](Index grp) {
        std::array<Complex, std::size_t{1} << kMaxCustomTargets> in{};
        const Index base = plan.base(grp);
        for (std::size_t c = 0; c < dim; ++c) {
            in[c] = psi[base + offsets[c]];
        }
        for (std::size_t r = 0; r < dim; ++r) {
            const Complex *row = flat.data() + r * dim;
            Complex acc{0.0, 0.0};
            for (std::size_t c = 0; c < dim; ++c) {
                acc += row[c] * in[c];
            }
            psi[base + offsets[r]] = acc;
        }
    });
}

void special_kernel(StateVector &s, SpecialKind kind, std::span<const Qubit> qubits,
                    Complex phase, std::span<const Qubit> controls) {
    const std::size_t expected = kind == SpecialKind::Swap ? 2 : 1;
    if (qubits.size() != expected) {
        throw Error(ErrorKind::Arity, "special kernel expects " +
                                          std::to_string(expected) + " qubit(s), got " +
                                          std::to_string(qubits.size()));
    }
    check_qubits(s.n_qubits(), qubits, controls);
    const IndexPlan plan(s.n_qubits(), qubits, controls);
    const std::span<const Index> offsets = plan.offsets();
    Complex *psi = s.data();
    switch (kind) {
    case SpecialKind::PauliX:
        for_each_group(plan.n_groups(), s.size(), [&](Index grp) {
            const Index i0 = plan.base(grp);
            std::swap(psi[i0], psi[i0 + offsets[1]]);
        });
        break;
    case SpecialKind::PauliZ:
        for_each_group(plan.n_groups(), s.size(), [&](Index grp) {
            Complex &a = psi[plan.base(grp) + offsets[1]];
            a = -a;
        });
        break;
    case SpecialKind::Phase:
        for_each_group(plan.n_groups(), s.size(), [&](Index grp) {
            psi[plan.base(grp) + offsets[1]] *= phase;
        });
        break;
    case SpecialKind::Swap:
        for_each_group(plan.n_groups(), s.size(), [&](Index grp) {
            const Index i0 = plan.base(grp);
            std::swap(psi[i0 + offsets[1]], psi[i0 + offsets[2]]);
        });
        break;
    }
}

} // namespace

PauliMasks pauli_masks(int n, std::string_view pauli) {
    if (static_cast<int>(pauli.size()) != n) {
        throw Error(ErrorKind::Dimension, "Pauli string of length " +
                                              std::to_string(pauli.size()) +
                                              " on " + std::to_string(n) + " qubits");
    }
    PauliMasks masks;
    for (int q = 0; q < n; ++q) {
        const Index bit = Index{1} << bit_position(n, q);
        switch (pauli[static_cast<std::size_t>(q)]) {
        case 'I':
            break;
        case 'X':
            masks.flip |= bit;
            break;
        case 'Y':
            masks.flip |= bit;
            masks.sign |= bit;
            ++masks.n_y;
            break;
        case 'Z':
            masks.sign |= bit;
            break;
        default:
            throw Error(ErrorKind::InvalidArgument,
                        std::string("invalid Pauli symbol '") +
                            pauli[static_cast<std::size_t>(q)] + "'");
        }
    }
    return masks;
}

Complex i_power(int k) {
    switch (((k % 4) + 4) % 4) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

void set_num_threads(int threads) {
    if (threads < 0) {
        throw Error(ErrorKind::InvalidArgument, "thread count must be >= 0");
    }
    g_threads.store(threads);
}

int num_threads() { return g_threads.load(); }

IndexPlan::IndexPlan(int n_qubits, std::span<const Qubit> targets,
                     std::span<const Qubit> controls) {
    check_qubits(n_qubits, targets, controls);
    for (const Qubit q : targets) {
        sorted_positions_.push_back(bit_position(n_qubits, q));
    }
    for (const Qubit q : controls) {
        const int p = bit_position(n_qubits, q);
        sorted_positions_.push_back(p);
        control_mask_ |= Index{1} << p;
    }
    std::sort(sorted_positions_.begin(), sorted_positions_.end());
    n_groups_ = Index{1} << (n_qubits - static_cast<int>(sorted_positions_.size()));

    const std::size_t m = targets.size();
    offsets_.assign(std::size_t{1} << m, 0);
    for (std::size_t tau = 0; tau < offsets_.size(); ++tau) {
        Index offset = 0;
        for (std::size_t k = 0; k < m; ++k) {
            if ((tau >> (m - 1 - k)) & 1U) {
                offset |= Index{1} << bit_position(n_qubits, targets[k]);
            }
        }
        offsets_[tau] = offset;
    }
}

void apply_one_qubit(StateVector &s, const Matrix &g, Qubit target) {
    const Qubit targets[] = {target};
    check_qubits(s.n_qubits(), targets, {});
    check_matrix(g, 1);
    one_qubit_kernel(s, g, target, {});
}

void apply_multi_qubit(StateVector &s, const Matrix &g, std::span<const Qubit> targets) {
    apply_controlled(s, g, targets, {});
}

void apply_controlled(StateVector &s, const Matrix &g, std::span<const Qubit> targets,
                      std::span<const Qubit> controls) {
    check_qubits(s.n_qubits(), targets, controls);
    check_matrix(g, targets.size());
    if (targets.size() == 1) {
        one_qubit_kernel(s, g, targets[0], controls);
    } else {
        general_kernel(s, g, targets, controls);
    }
}

void apply_diagonal_or_permutation(StateVector &s, SpecialKind kind,
                                   std::span<const Qubit> qubits, double param,
                                   std::span<const Qubit> controls) {
    special_kernel(s, kind, qubits, std::polar(1.0, param), controls);
}

void apply_gate(StateVector &s, const Gate &g) {
    const auto &targets = g.targets();
    const auto &controls = g.controls();
    switch (g.kind()) {
    case GateKind::I:
        check_qubits(s.n_qubits(), targets, controls);
        return;
    case GateKind::X:
        special_kernel(s, SpecialKind::PauliX, targets, {}, controls);
        return;
    case GateKind::Z:
        special_kernel(s, SpecialKind::PauliZ, targets, {}, controls);
        return;
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::U1:
        // Reuse the exact matrix entry so the result matches the general
        // kernel bit for bit.
        special_kernel(s, SpecialKind::Phase, targets, g.matrix()(1, 1), controls);
        return;
    case GateKind::Swap:
        special_kernel(s, SpecialKind::Swap, targets, {}, controls);
        return;
    default:
        apply_controlled(s, g.matrix(), targets, controls);
        return;
    }
}

void apply_pauli_string(StateVector &s, std::string_view pauli) {
    const PauliMasks masks = pauli_masks(s.n_qubits(), pauli);
    // P|j> = i^{n_y} (-1)^{popcount(j & sign)} |j ^ flip>
    const Complex global = i_power(masks.n_y);
    Complex *psi = s.data();
    if (masks.flip == 0) {
        for (Index j = 0; j < s.size(); ++j) {
            if (std::popcount(j & masks.sign) & 1) {
                psi[j] = -psi[j];
            }
            psi[j] *= global;
        }
        return;
    }
    const int pivot = std::bit_width(masks.flip) - 1;
    for (Index g = 0; g < s.size() / 2; ++g) {
        const Index j0 = insert_zero_bit(g, pivot);
        const Index j1 = j0 ^ masks.flip;
        const double sign0 = (std::popcount(j0 & masks.sign) & 1) ? -1.0 : 1.0;
        const double sign1 = (std::popcount(j1 & masks.sign) & 1) ? -1.0 : 1.0;
        const Complex a0 = psi[j0];
        const Complex a1 = psi[j1];
        psi[j1] = global * sign0 * a0;
        psi[j0] = global * sign1 * a1;
    }
}

Complex pauli_expectation(const StateVector &s, std::string_view pauli) {
    const PauliMasks masks = pauli_masks(s.n_qubits(), pauli);
    // <s|P|s> = i^{n_y} sum_j (-1)^{popcount(j & sign)} conj(s_{j ^ flip}) s_j
    const Complex *psi = s.data();
    Complex total{0.0, 0.0};
    for (Index j = 0; j < s.size(); ++j) {
        const Complex term = std::conj(psi[j ^ masks.flip]) * psi[j];
        if (std::popcount(j & masks.sign) & 1) {
            total -= term;
        } else {
            total += term;
        }
    }
    return i_power(masks.n_y) * total;
}

} // namespace qsim::kernels
