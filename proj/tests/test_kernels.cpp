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
#include "qsim/backends.hpp"
#include "qsim/error.hpp"
#include "qsim/kernels.hpp"
#include "qsim/pauli.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

using namespace qsim;
using namespace qsim::kernels;

namespace {

ErrorKind kind_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::Io;
}

StateVector dense_apply(const StateVector &s, const Gate &g) {
    const Matrix lifted = lift_gate(g, s.n_qubits());
    const Eigen::Map<const Vector> in(s.data(), static_cast<Eigen::Index>(s.size()));
    const Vector out = lifted * in;
    return StateVector::from_amplitudes(std::span<const Complex>(out.data(), s.size()));
}

bool bitwise_equal(const StateVector &a, const StateVector &b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(Complex)) == 0;
}

} // namespace

TEST_CASE("insert_zero_bit") {
    CHECK(insert_zero_bit(0b101, 1) == 0b1001);
    CHECK(insert_zero_bit(0b111, 0) == 0b1110);
    CHECK(insert_zero_bit(0b11, 2) == 0b011);
}

TEST_CASE("IndexPlan worked example") {
    const Qubit targets[] = {1};
    const Qubit controls[] = {3};
    const IndexPlan plan(4, targets, controls);
    CHECK(plan.n_groups() == 4);
    CHECK(plan.base(0b01) == 0b0011);
    CHECK(plan.offsets()[1] == 0b0100);
}

TEST_CASE("IndexPlan partition property (exhaustive)") {
    Rng rng(99);
    for (int n = 1; n <= 12; ++n) {
        for (int trial = 0; trial < 6; ++trial) {
            const int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n, 3))));
            const int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n - m, 2) + 1)));
            const auto qs = testing::distinct_qubits(n, m + c, rng);
            const std::vector<Qubit> targets(qs.begin(), qs.begin() + m);
            const std::vector<Qubit> controls(qs.begin() + m, qs.end());
            const IndexPlan plan(n, targets, controls);
            Index control_mask = 0;
            for (const Qubit q : controls) {
                control_mask |= Index{1} << (n - 1 - q);
            }
            std::vector<int> hits(std::size_t{1} << n, 0);
            for (Index g = 0; g < plan.n_groups(); ++g) {
                for (const Index off : plan.offsets()) {
                    const Index i = plan.base(g) + off;
                    REQUIRE(i < hits.size());
                    CHECK((i & control_mask) == control_mask);
                    ++hits[i];
                }
            }
            for (Index i = 0; i < hits.size(); ++i) {
                const int expected = (i & control_mask) == control_mask ? 1 : 0;
                CHECK(hits[i] == expected);
            }
        }
    }
}

TEST_CASE("apply_one_qubit") {
    SUBCASE("H on |0>") {
        StateVector s = zero_state(1);
        apply_one_qubit(s, gates::h(0).matrix(), 0);
        CHECK(std::abs(s[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
        CHECK(std::abs(s[1] - 1.0 / std::sqrt(2.0)) < 1e-15);
    }
    SUBCASE("X on qubit 0 flips the most significant bit") {
        StateVector s = zero_state(2);
        apply_one_qubit(s, gates::x(0).matrix(), 0);
        CHECK(s[2] == Complex{1.0, 0.0});
        CHECK(std::abs(s[0]) == 0.0);
    }
    SUBCASE("RY(0.7) on qubit 2 matches the dense oracle") {
        Rng rng(1);
        StateVector s = random_state(4, rng);
        const Gate g = gates::ry(2, 0.7);
        const StateVector expected = dense_apply(s, g);
        apply_one_qubit(s, g.matrix(), 2);
        CHECK(max_abs_diff(s, expected) < 1e-12);
    }
    SUBCASE("target out of range") {
        StateVector s = zero_state(2);
        CHECK(kind_of([&] { apply_one_qubit(s, gates::x(0).matrix(), 2); }) ==
              ErrorKind::Index);
    }
}

TEST_CASE("apply_multi_qubit") {
    SUBCASE("SWAP |01> -> |10>") {
        StateVector s = basis_state(2, 0b01);
        const Qubit t[] = {0, 1};
        apply_multi_qubit(s, gates::swap(0, 1).matrix(), t);
        CHECK(s[0b10] == Complex{1.0, 0.0});
        CHECK(s[0b01] == Complex{0.0, 0.0});
    }
    SUBCASE("CU1(pi) as a two-target diagonal gate") {
        StateVector s = basis_state(2, 0b11);
        const Qubit t[] = {0, 1};
        apply_multi_qubit(s, matrix_of("cu1", std::vector<double>{kPi}), t);
        CHECK(std::abs(s[0b11] - Complex{-1.0, 0.0}) < 1e-15);
    }
    SUBCASE("random 4x4 unitary on (1, 3) of a random 5-qubit state") {
        Rng rng(2);
        StateVector s = random_state(5, rng);
        const Gate g = Gate::unitary(testing::gram_schmidt_unitary(4, rng), {1, 3});
        const StateVector expected = dense_apply(s, g);
        const StateVector by_enumeration = testing::enumerate_apply(s, g);
        const Qubit t[] = {1, 3};
        apply_multi_qubit(s, g.matrix(), t);
        CHECK(max_abs_diff(s, expected) < 1e-12);
        CHECK(max_abs_diff(s, by_enumeration) < 1e-12);
    }
    SUBCASE("target order is significant") {
        Rng rng(3);
        const Matrix u = testing::gram_schmidt_unitary(4, rng);
        StateVector a = random_state(3, rng);
        StateVector b = a;
        const Qubit t01[] = {0, 2};
        const Qubit t10[] = {2, 0};
        apply_multi_qubit(a, u, t01);
        apply_multi_qubit(b, u, t10);
        CHECK(max_abs_diff(a, b) > 1e-3);
    }
    SUBCASE("errors") {
        StateVector s = zero_state(8);
        const Qubit dup[] = {1, 1};
        CHECK(kind_of([&] { apply_multi_qubit(s, Matrix::Identity(4, 4), dup); }) ==
              ErrorKind::Index);
        const Qubit seven[] = {0, 1, 2, 3, 4, 5, 6};
        CHECK(kind_of([&] { apply_multi_qubit(s, Matrix::Identity(128, 128), seven); }) ==
              ErrorKind::UnsupportedSize);
        const Qubit two[] = {0, 1};
        CHECK(kind_of([&] { apply_multi_qubit(s, Matrix::Identity(2, 2), two); }) ==
              ErrorKind::Shape);
    }
}

TEST_CASE("apply_controlled") {
    const Matrix x = gates::x(0).matrix();
    const Qubit t1[] = {1};
    const Qubit c0[] = {0};
    SUBCASE("CNOT |10> -> |11>") {
        StateVector s = basis_state(2, 0b10);
        apply_controlled(s, x, t1, c0);
        CHECK(s[0b11] == Complex{1.0, 0.0});
    }
    SUBCASE("CNOT |00> unchanged") {
        StateVector s = basis_state(2, 0b00);
        apply_controlled(s, x, t1, c0);
        CHECK(s[0b00] == Complex{1.0, 0.0});
    }
    SUBCASE("TOFFOLI |110> -> |111>") {
        StateVector s = basis_state(3, 0b110);
        const Qubit t[] = {2};
        const Qubit c[] = {0, 1};
        apply_controlled(s, x, t, c);
        CHECK(s[0b111] == Complex{1.0, 0.0});
        CHECK(s[0b110] == Complex{0.0, 0.0});
    }
    SUBCASE("non-control amplitudes are bitwise unchanged") {
        Rng rng(8);
        StateVector s = random_state(6, rng);
        const StateVector before = s;
        const Qubit t[] = {4, 1};
        const Qubit c[] = {0, 5};
        apply_controlled(s, testing::gram_schmidt_unitary(4, rng), t, c);
        for (Index i = 0; i < s.size(); ++i) {
            const bool active = ((i >> 5) & 1U) && (i & 1U);
            if (!active) {
                CHECK(std::memcmp(&s[i], &before[i], sizeof(Complex)) == 0);
            }
        }
    }
    SUBCASE("overlapping target and control") {
        StateVector s = zero_state(3);
        const Qubit c[] = {1};
        CHECK(kind_of([&] { apply_controlled(s, x, t1, c); }) == ErrorKind::Index);
    }
}

TEST_CASE("apply_diagonal_or_permutation") {
    SUBCASE("pauli-x on qubit 1 of |00>") {
        StateVector s = zero_state(2);
        const Qubit q[] = {1};
        apply_diagonal_or_permutation(s, SpecialKind::PauliX, q);
        CHECK(s[0b01] == Complex{1.0, 0.0});
    }
    SUBCASE("pauli-z on |+>") {
        StateVector s = plus_state(1);
        const Qubit q[] = {0};
        apply_diagonal_or_permutation(s, SpecialKind::PauliZ, q);
        CHECK(std::abs(s[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
        CHECK(std::abs(s[1] + 1.0 / std::sqrt(2.0)) < 1e-15);
    }
    SUBCASE("swap (0, 2) equals the general kernel bitwise") {
        Rng rng(6);
        StateVector a = random_state(3, rng);
        StateVector b = a;
        const Qubit q[] = {0, 2};
        apply_diagonal_or_permutation(a, SpecialKind::Swap, q);
        apply_multi_qubit(b, gates::swap(0, 2).matrix(), q);
        CHECK(bitwise_equal(a, b));
    }
    SUBCASE("phase and controlled specials match the general kernel") {
        Rng rng(10);
        const StateVector s = random_state(5, rng);
        const Qubit q[] = {3};
        const Qubit c[] = {1};
        StateVector a = s;
        StateVector b = s;
        apply_diagonal_or_permutation(a, SpecialKind::Phase, q, 0.37, c);
        apply_controlled(b, gates::u1(0, 0.37).matrix(), q, c);
        CHECK(max_abs_diff(a, b) < 1e-15);

        a = s;
        b = s;
        apply_diagonal_or_permutation(a, SpecialKind::PauliX, q, 0.0, c);
        apply_controlled(b, gates::x(0).matrix(), q, c);
        CHECK(max_abs_diff(a, b) < 1e-15);
    }
}

TEST_CASE("oracle equivalence over the catalog (n <= 8)") {
    Rng rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const Gate g = testing::random_catalog_gate(n, rng);
        StateVector s = random_state(n, rng);
        const StateVector expected = dense_apply(s, g);
        const double norm_before = s.norm_squared();
        apply_gate(s, g);
        CAPTURE(g.label());
        CHECK(max_abs_diff(s, expected) < 1e-12);
        CHECK(std::abs(s.norm_squared() - norm_before) < 1e-13);
    }
}

TEST_CASE("thread-count independence") {
    Rng rng(77);
    const int n = 16;
    const StateVector initial = random_state(n, rng);
    std::vector<Gate> circuit;
    for (int k = 0; k < 40; ++k) {
        circuit.push_back(testing::random_catalog_gate(n, rng));
    }
    std::vector<StateVector> results;
    for (const int threads : {1, 2, 8}) {
        const ScopedThreads scope(threads);
        StateVector s = initial;
        for (const Gate &g : circuit) {
            apply_gate(s, g);
        }
        results.push_back(std::move(s));
    }
    CHECK(bitwise_equal(results[0], results[1]));
    CHECK(bitwise_equal(results[0], results[2]));
}

TEST_CASE("kernels never allocate a second state buffer") {
    Rng rng(5);
    const int n = 16;
    StateVector s = random_state(n, rng);
    std::vector<Gate> circuit;
    for (int k = 0; k < 30; ++k) {
        circuit.push_back(testing::random_catalog_gate(n, rng));
    }
    const ScopedThreads scope(4);
    AllocationTracker::reset();
    for (const Gate &g : circuit) {
        apply_gate(s, g);
    }
    CHECK(AllocationTracker::count_at_least(std::size_t{1} << n) == 0);
}

TEST_CASE("Pauli strings") {
    Rng rng(12);
    for (const char *pauli : {"IXYZ", "ZZII", "YYYY", "XIIY", "IIII"}) {
        CAPTURE(pauli);
        const StateVector s = random_state(4, rng);
        const Matrix p = pauli_matrix(pauli);
        const Eigen::Map<const Vector> psi(s.data(), 16);
        const Vector p_psi = p * psi;

        StateVector applied = s;
        apply_pauli_string(applied, pauli);
        for (Index i = 0; i < 16; ++i) {
            CHECK(std::abs(applied[i] - p_psi(static_cast<Eigen::Index>(i))) < 1e-14);
        }
        const Complex expected = psi.dot(p_psi);
        CHECK(std::abs(pauli_expectation(s, pauli) - expected) < 1e-13);
    }
    StateVector s = zero_state(2);
    CHECK(kind_of([&] { (void)pauli_expectation(s, "XQ"); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { (void)pauli_expectation(s, "X"); }) == ErrorKind::Dimension);
}
