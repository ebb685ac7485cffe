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
#include "qsim/error.hpp"
#include "qsim/state.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace qsim;

TEST_CASE("zero_state") {
    const StateVector one = zero_state(1);
    CHECK(one.size() == 2);
    CHECK(one[0] == Complex{1.0, 0.0});
    CHECK(one[1] == Complex{0.0, 0.0});

    const StateVector three = zero_state(3);
    CHECK(three[0] == Complex{1.0, 0.0});
    for (Index i = 1; i < 8; ++i) {
        CHECK(three[i] == Complex{0.0, 0.0});
    }
}

TEST_CASE("state factories reject invalid sizes") {
    auto kind_of = [](auto &&fn) {
        try {
            fn();
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::Io;
    };
    CHECK(kind_of([] { (void)zero_state(0); }) == ErrorKind::InvalidSize);
    CHECK(kind_of([] { (void)plus_state(-1); }) == ErrorKind::InvalidSize);
    CHECK(kind_of([] { (void)zero_state(max_qubits() + 1); }) == ErrorKind::InvalidSize);

    set_max_qubits(4);
    CHECK(kind_of([] { (void)zero_state(5); }) == ErrorKind::InvalidSize);
    set_max_qubits(30);
    CHECK(max_qubits() == 30);
}

TEST_CASE("plus_state") {
    const StateVector one = plus_state(1);
    CHECK(std::abs(one[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(one[1] - 1.0 / std::sqrt(2.0)) < 1e-15);

    const StateVector two = plus_state(2);
    for (Index i = 0; i < 4; ++i) {
        CHECK(two[i] == Complex{0.5, 0.0});
    }

    const StateVector ten = plus_state(10);
    CHECK(ten.size() == 1024);
    for (Index i = 0; i < ten.size(); ++i) {
        CHECK(ten[i] == Complex{0.03125, 0.0});
    }
}

TEST_CASE("factory outputs are normalized") {
    Rng rng(7);
    for (int n = 1; n <= 10; ++n) {
        CHECK(std::abs(zero_state(n).norm_squared() - 1.0) <= 1e-12);
        CHECK(std::abs(plus_state(n).norm_squared() - 1.0) <= 1e-12);
        CHECK(std::abs(random_state(n, rng).norm_squared() - 1.0) <= 1e-12);
        CHECK(std::abs(basis_state(n, (Index{1} << n) - 1).norm_squared() - 1.0) <= 1e-12);
    }
}

TEST_CASE("overlap") {
    CHECK(overlap(zero_state(2), zero_state(2)) == Complex{1.0, 0.0});
    CHECK(overlap(basis_state(1, 0), basis_state(1, 1)) == Complex{0.0, 0.0});
    CHECK_THROWS_AS((void)overlap(zero_state(2), zero_state(3)), Error);

    // Term-by-term summation over explicit real/imaginary parts.
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector a = random_state(4, rng);
        const StateVector b = random_state(4, rng);
        double re = 0.0;
        double im = 0.0;
        for (Index i = 0; i < 16; ++i) {
            re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
            im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
        }
        const Complex got = overlap(a, b);
        CHECK(std::abs(got.real() - re) < 1e-14);
        CHECK(std::abs(got.imag() - im) < 1e-14);
        CHECK(std::abs(got) <= 1.0 + 1e-12);

        const Complex self = overlap(a, a);
        CHECK(self.real() > 0.0);
        CHECK(std::abs(self.imag()) < 1e-14);
    }
}

TEST_CASE("probabilities") {
    StateVector bell(2);
    bell[0] = 1.0 / std::sqrt(2.0);
    bell[3] = 1.0 / std::sqrt(2.0);
    const Qubit first[] = {0};
    const auto marginal = probabilities(bell, first);
    REQUIRE(marginal.size() == 2);
    CHECK(marginal[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(marginal[1] == doctest::Approx(0.5).epsilon(1e-15));

    // |01>: qubit 0 is 0, qubit 1 is 1 -> index 1.
    const StateVector s01 = basis_state(2, 1);
    const Qubit both[] = {0, 1};
    const auto full = probabilities(s01, both);
    CHECK(full == std::vector<double>{0.0, 1.0, 0.0, 0.0});

    SUBCASE("errors") {
        const Qubit dup[] = {1, 1};
        const Qubit out[] = {2};
        CHECK_THROWS_AS((void)probabilities(s01, dup), Error);
        CHECK_THROWS_AS((void)probabilities(s01, out), Error);
    }

    SUBCASE("exhaustive marginalization oracle") {
        Rng rng(5);
        const StateVector s = random_state(5, rng);
        const Qubit subset[] = {1, 3};
        const auto got = probabilities(s, subset);
        std::vector<double> expected(4, 0.0);
        for (Index i = 0; i < 32; ++i) {
            // bitstring b0..b4 with b0 the MSB; pick b1 and b3
            const int b1 = static_cast<int>((i >> 3) & 1U);
            const int b3 = static_cast<int>((i >> 1) & 1U);
            expected[static_cast<std::size_t>(b1 * 2 + b3)] += std::norm(s[i]);
        }
        double total = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(std::abs(got[k] - expected[k]) < 1e-14);
            total += got[k];
        }
        CHECK(std::abs(total - 1.0) < 1e-10);
    }

    SUBCASE("full qubit list equals |amplitude|^2 exactly") {
        Rng rng(9);
        const StateVector s = random_state(6, rng);
        const Qubit all[] = {0, 1, 2, 3, 4, 5};
        const auto got = probabilities(s, all);
        for (Index i = 0; i < s.size(); ++i) {
            CHECK(got[i] == std::norm(s[i]));
        }
    }
}

TEST_CASE("bitstrings are MSB first") {
    CHECK(to_bitstring(2, 2) == "10");
    CHECK(to_bitstring(1, 3) == "001");
    CHECK(to_bitstring(5, 3) == "101");
}

TEST_CASE("binary state round trip") {
    Rng rng(3);
    const StateVector s = random_state(3, rng);
    std::stringstream buffer;
    write_state(buffer, s);
    const std::string bytes = buffer.str();
    REQUIRE(bytes.size() == 8 + 8 * 16);
    CHECK(bytes[0] == 3);
    for (int k = 1; k < 8; ++k) {
        CHECK(bytes[static_cast<std::size_t>(k)] == 0);
    }
    const StateVector back = read_state(buffer);
    CHECK(max_abs_diff(s, back) == 0.0);

    std::stringstream truncated(bytes.substr(0, 20));
    CHECK_THROWS_AS((void)read_state(truncated), Error);
}

TEST_CASE("allocation tracker counts state buffers") {
    AllocationTracker::reset();
    {
        const StateVector a = zero_state(10);
        const StateVector b = a;
        (void)b;
    }
    CHECK(AllocationTracker::count_at_least(1024) == 2);
    CHECK(AllocationTracker::count_at_least(1025) == 0);
}
