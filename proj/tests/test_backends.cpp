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
#include "qsim/circuit.hpp"
#include "qsim/error.hpp"
#include "qsim/pauli.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <memory>

using namespace qsim;

namespace {

ErrorKind kind_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::Io;
}

class NullBackend final : public Backend {
  public:
    explicit NullBackend(std::string name) : name_(std::move(name)) {}
    [[nodiscard]] std::string name() const override { return name_; }
    [[nodiscard]] Capabilities capabilities() const override { return {}; }
    [[nodiscard]] int max_qubits() const override { return 4; }
    void apply_gate(StateVector &, const Gate &) const override {}
    [[nodiscard]] double expectation(const StateVector &,
                                     std::span<const PauliTerm>) const override {
        return 0.0;
    }

  private:
    std::string name_;
};

} // namespace

TEST_CASE("registry") {
    CHECK(active_backend_name() == "kernel");
    CHECK(active_backend()->name() == "kernel");
    const auto names = backend_names();
    CHECK(std::find(names.begin(), names.end(), "reference") != names.end());

    CHECK(kind_of([] { set_active_backend("nonexistent"); }) == ErrorKind::NotFound);
    CHECK(kind_of([] { (void)get_backend("nonexistent"); }) == ErrorKind::NotFound);
    CHECK(kind_of([] { register_backend(std::make_shared<KernelBackend>()); }) ==
          ErrorKind::Conflict);

    register_backend(std::make_shared<NullBackend>("null-test"));
    CHECK(get_backend("null-test")->max_qubits() == 4);

    {
        const ScopedBackend scope("reference");
        CHECK(active_backend_name() == "reference");
        CHECK(active_backend()->capabilities().is_reference);
    }
    CHECK(active_backend_name() == "kernel");
}

TEST_CASE("set_active switches circuit execution") {
    Circuit c(2);
    c.add(gates::h(0));
    const StateVector with_kernel = final_state(c);
    StateVector with_reference = zero_state(1);
    {
        const ScopedBackend scope("reference");
        with_reference = final_state(c);
    }
    CHECK(max_abs_diff(with_kernel, with_reference) < 1e-15);
}

TEST_CASE("lift_gate examples") {
    SUBCASE("X on target 0 of 2 qubits") {
        const Matrix m = lift_gate(gates::x(0), 2);
        Matrix expected = Matrix::Zero(4, 4);
        expected(0, 2) = expected(2, 0) = expected(1, 3) = expected(3, 1) = 1;
        CHECK((m - expected).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("CNOT(0, 1)") {
        const Matrix m = lift_gate(gates::cnot(0, 1), 2);
        Matrix expected = Matrix::Identity(4, 4);
        expected(2, 2) = expected(3, 3) = 0;
        expected(2, 3) = expected(3, 2) = 1;
        CHECK((m - expected).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("random two-qubit unitary on (2, 0) against enumeration") {
        Rng rng(31);
        const Gate g = Gate::unitary(testing::gram_schmidt_unitary(4, rng), {2, 0});
        const Matrix m = lift_gate(g, 3);
        CHECK(validate_unitary(m, 1e-10));
        for (int k = 0; k < 20; ++k) {
            const StateVector s = random_state(3, rng);
            const StateVector dense = apply_via_dense(s, g);
            CHECK(max_abs_diff(dense, testing::enumerate_apply(s, g)) < 1e-13);
        }
    }
    SUBCASE("all-qubit gate with identity order equals its matrix") {
        Rng rng(32);
        const Matrix u = testing::gram_schmidt_unitary(8, rng);
        CHECK((lift_gate(Gate::unitary(u, {0, 1, 2}), 3) - u).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("capacity") {
        CHECK(kind_of([] { (void)lift_gate(gates::x(0), 13); }) == ErrorKind::Capacity);
    }
}

TEST_CASE("apply_via_dense") {
    const StateVector h = apply_via_dense(zero_state(1), gates::h(0));
    CHECK(std::abs(h[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(h[1] - 1.0 / std::sqrt(2.0)) < 1e-15);

    Rng rng(40);
    const StateVector s = random_state(5, rng);
    const StateVector same = apply_via_dense(s, gates::id(3));
    CHECK(std::memcmp(s.data(), same.data(), s.size() * sizeof(Complex)) == 0);

    CHECK(kind_of([] { (void)apply_via_dense(zero_state(13), gates::x(0)); }) ==
          ErrorKind::Capacity);
}

TEST_CASE("twenty-gate six-qubit circuit on both backends") {
    Rng rng(41);
    const Circuit c = testing::random_circuit(6, 20, rng);
    const auto kernel = get_backend("kernel");
    const auto reference = get_backend("reference");
    StateVector a = zero_state(6);
    StateVector b = zero_state(6);
    run(c, a, *kernel);
    run(c, b, *reference);
    CHECK(max_abs_diff(a, b) < 1e-12);
}

TEST_CASE("cross-backend equivalence over 200 random circuits") {
    Rng rng(1234);
    const auto kernel = get_backend("kernel");
    const auto reference = get_backend("reference");
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const int depth = 1 + static_cast<int>(rng.below(20));
        const Circuit c = testing::random_circuit(n, depth, rng);
        StateVector a = random_state(n, rng);
        StateVector b = a;
        run(c, a, *kernel);
        run(c, b, *reference);
        worst = std::max(worst, max_abs_diff(a, b));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("composition of dense lifts") {
    Rng rng(50);
    for (int k = 0; k < 20; ++k) {
        const int n = 2 + static_cast<int>(rng.below(4));
        const Gate g1 = testing::random_catalog_gate(n, rng);
        const Gate g2 = testing::random_catalog_gate(n, rng);
        const StateVector s = random_state(n, rng);
        const Matrix both = lift_gate(g2, n) * lift_gate(g1, n);
        const Eigen::Map<const Vector> psi(s.data(), static_cast<Eigen::Index>(s.size()));
        const Vector expected = both * psi;
        Circuit c(n);
        c.add(g1).add(g2);
        StateVector got = s;
        run(c, got, *get_backend("kernel"));
        for (Index i = 0; i < s.size(); ++i) {
            CHECK(std::abs(got[i] - expected(static_cast<Eigen::Index>(i))) < 1e-10);
        }
    }
}

TEST_CASE("expectation agrees across backends") {
    Rng rng(60);
    const std::vector<PauliTerm> terms = {{-1.0, "ZZI"}, {-1.0, "IZZ"}, {0.5, "XIX"},
                                          {0.25, "YYI"}, {2.0, "III"}};
    for (int k = 0; k < 10; ++k) {
        const StateVector s = random_state(3, rng);
        const double a = get_backend("kernel")->expectation(s, terms);
        const double b = get_backend("reference")->expectation(s, terms);
        CHECK(std::abs(a - b) < 1e-12);
    }
}
