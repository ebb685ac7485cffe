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
// Shared test helpers: generators and oracles that do not go through the
// code paths they check.
#pragma once

#include "qsim/circuit.hpp"
#include "qsim/gates.hpp"
#include "qsim/random.hpp"
#include "qsim/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace qsim::testing {

/// Random unitary: classical Gram-Schmidt over the columns of a complex
/// Gaussian matrix.
inline Matrix gram_schmidt_unitary(int dim, Rng &rng) {
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            m(r, c) = Complex{rng.normal(), rng.normal()};
        }
    }
    for (int c = 0; c < dim; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            Complex proj{0.0, 0.0};
            for (int r = 0; r < dim; ++r) {
                proj += std::conj(m(r, prev)) * m(r, c);
            }
            for (int r = 0; r < dim; ++r) {
                m(r, c) -= proj * m(r, prev);
            }
        }
        double norm = 0.0;
        for (int r = 0; r < dim; ++r) {
            norm += std::norm(m(r, c));
        }
        norm = std::sqrt(norm);
        for (int r = 0; r < dim; ++r) {
            m(r, c) /= norm;
        }
    }
    return m;
}

/// k distinct qubits from [0, n), in random order.
inline std::vector<Qubit> distinct_qubits(int n, int k, Rng &rng) {
    std::vector<Qubit> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
    }
    all.resize(static_cast<std::size_t>(k));
    return all;
}

/// A gate drawn from the full catalog: every named gate, controlled forms,
/// Toffoli and custom unitaries on up to three targets.
inline Gate random_catalog_gate(int n, Rng &rng) {
    const auto angle = [&] { return rng.uniform(-2.0 * kPi, 2.0 * kPi); };
    for (;;) {
        const auto choice = rng.below(22);
        auto qs = [&](int k) { return distinct_qubits(n, k, rng); };
        switch (choice) {
        case 0: return gates::id(qs(1)[0]);
        case 1: return gates::x(qs(1)[0]);
        case 2: return gates::y(qs(1)[0]);
        case 3: return gates::z(qs(1)[0]);
        case 4: return gates::h(qs(1)[0]);
        case 5: return gates::s(qs(1)[0]);
        case 6: return gates::sdg(qs(1)[0]);
        case 7: return gates::t(qs(1)[0]);
        case 8: return gates::tdg(qs(1)[0]);
        case 9: return gates::rx(qs(1)[0], angle());
        case 10: return gates::ry(qs(1)[0], angle());
        case 11: return gates::rz(qs(1)[0], angle());
        case 12: return gates::u1(qs(1)[0], angle());
        case 13: return gates::u2(qs(1)[0], angle(), angle());
        case 14: return gates::u3(qs(1)[0], angle(), angle(), angle());
        default: break;
        }
        if (n < 2) {
            continue;
        }
        switch (choice) {
        case 15: { auto q = qs(2); return gates::cnot(q[0], q[1]); }
        case 16: { auto q = qs(2); return gates::cz(q[0], q[1]); }
        case 17: { auto q = qs(2); return gates::cu1(q[0], q[1], angle()); }
        case 18: { auto q = qs(2); return gates::swap(q[0], q[1]); }
        case 19: {
            auto q = qs(2);
            return gates::controlled(gates::ry(q[1], angle()), {q[0]});
        }
        default: break;
        }
        if (n < 3) {
            continue;
        }
        if (choice == 20) {
            auto q = qs(3);
            return gates::toffoli(q[0], q[1], q[2]);
        }
        const int m = 1 + static_cast<int>(rng.below(3));
        const int c = n > m ? static_cast<int>(rng.below(std::min(2, n - m) + 1)) : 0;
        auto q = qs(m + c);
        std::vector<Qubit> targets(q.begin(), q.begin() + m);
        std::vector<Qubit> controls(q.begin() + m, q.end());
        return Gate::unitary(gram_schmidt_unitary(1 << m, rng), targets, controls);
    }
}

inline Circuit random_circuit(int n, int depth, Rng &rng) {
    Circuit c(n);
    for (int k = 0; k < depth; ++k) {
        c.add(random_catalog_gate(n, rng));
    }
    return c;
}

/// Circuit drawn from gates that have a textual form, with a few
/// measurements on distinct qubits at the end.
inline Circuit random_named_circuit(int n, int depth, Rng &rng) {
    Circuit c(n);
    while (static_cast<int>(c.size()) < depth) {
        Gate g = random_catalog_gate(n, rng);
        if (!g.name().empty()) {
            c.add(std::move(g));
        }
    }
    const int measured = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
    c.measure(distinct_qubits(n, measured, rng));
    return c;
}

/// Applies a gate by enumerating, for each output basis state, the sum
/// over target patterns (the group-multiplication definition), without any
/// dense lift or index plan.
inline StateVector enumerate_apply(const StateVector &in, const Gate &g) {
    const int n = in.n_qubits();
    const auto &targets = g.targets();
    const std::size_t m = targets.size();
    StateVector out(n);
    for (Index i = 0; i < in.size(); ++i) {
        bool active = true;
        for (const Qubit c : g.controls()) {
            active = active && ((i >> (n - 1 - c)) & 1U);
        }
        if (!active) {
            out[i] = in[i];
            continue;
        }
        Index row = 0;
        for (std::size_t k = 0; k < m; ++k) {
            row = (row << 1) | ((i >> (n - 1 - targets[k])) & 1U);
        }
        Complex acc{0.0, 0.0};
        for (Index col = 0; col < (Index{1} << m); ++col) {
            Index j = i;
            for (std::size_t k = 0; k < m; ++k) {
                const Index bit = Index{1} << (n - 1 - targets[k]);
                j = ((col >> (m - 1 - k)) & 1U) ? (j | bit) : (j & ~bit);
            }
            acc += g.matrix()(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) *
                   in[j];
        }
        out[i] = acc;
    }
    return out;
}

/// Global-phase-insensitive distance: min over phase of max |a - e^{i p} b|.
inline double phase_aligned_diff(const Matrix &a, const Matrix &b) {
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    const Complex phase = a(r, c) / b(r, c);
    return (a - phase * b).cwiseAbs().maxCoeff();
}

} // namespace qsim::testing
