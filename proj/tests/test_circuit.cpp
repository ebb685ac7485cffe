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
#include "qsim/circuit.hpp"
#include "qsim/error.hpp"
#include "qsim/kernels.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>

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

} // namespace

TEST_CASE("add") {
    Circuit one(1);
    one.add(gates::h(0));
    CHECK(one.depth() == 1);

    Circuit three(3);
    CHECK(kind_of([&] { three.add(gates::x(5)); }) == ErrorKind::Index);
    CHECK(three.size() == 0);

    three.add(gates::ry(0, 0.1)).add(gates::h(1)).add(gates::ry(1, 0.2)).add(gates::ry(2, 0.3));
    REQUIRE(three.param_slots().size() == 3);
    CHECK(three.param_slots()[0].gate == 0);
    CHECK(three.param_slots()[1].gate == 2);
    CHECK(three.param_slots()[2].gate == 3);
    CHECK(three.parameters() == std::vector<double>{0.1, 0.2, 0.3});

    Circuit u3(1);
    u3.add(gates::u3(0, 0.1, 0.2, 0.3));
    CHECK(u3.param_slots().size() == 3);
    CHECK(u3.param_slots()[2].position == 2);
}

TEST_CASE("depth") {
    Circuit c(3);
    c.add(gates::h(0)).add(gates::h(1)).add(gates::h(2));
    CHECK(c.depth() == 1);
    c.add(gates::cnot(0, 1));
    CHECK(c.depth() == 2);
    c.add(gates::x(2));
    CHECK(c.depth() == 2);
    c.add(gates::toffoli(0, 1, 2));
    CHECK(c.depth() == 3);
}

TEST_CASE("execute") {
    SUBCASE("H statistics") {
        Circuit c(1);
        c.add(gates::h(0));
        ExecutionOptions opts;
        opts.nshots = 10000;
        opts.seed = 17;
        const auto r = execute(c, opts);
        REQUIRE(r.counts.size() == 2);
        CHECK(std::abs(static_cast<double>(r.counts.at("0")) - 5000.0) <= 150.0);
        CHECK(std::abs(static_cast<double>(r.counts.at("1")) - 5000.0) <= 150.0);
        CHECK(r.counts.at("0") + r.counts.at("1") == 10000);
    }
    SUBCASE("X X is exact") {
        Circuit c(1);
        c.add(gates::x(0)).add(gates::x(0));
        const auto r = execute(c);
        REQUIRE(r.final_state);
        CHECK((*r.final_state)[0] == Complex{1.0, 0.0});
        CHECK((*r.final_state)[1] == Complex{0.0, 0.0});
        CHECK(r.counts.empty());
    }
    SUBCASE("fifteen-gate circuit on both backends") {
        Rng rng(3);
        const Circuit c = testing::random_circuit(6, 15, rng);
        ExecutionOptions a;
        a.backend = get_backend("kernel");
        ExecutionOptions b;
        b.backend = get_backend("reference");
        const auto ra = execute(c, a);
        const auto rb = execute(c, b);
        REQUIRE(ra.probabilities.size() == 64);
        for (std::size_t i = 0; i < 64; ++i) {
            CHECK(std::abs(ra.probabilities[i] - rb.probabilities[i]) < 1e-10);
        }
    }
    SUBCASE("probabilities equal the state marginal exactly") {
        Rng rng(4);
        Circuit c = testing::random_circuit(5, 12, rng);
        c.measure({3, 0});
        const auto r = execute(c);
        const Qubit measured[] = {3, 0};
        CHECK(r.probabilities == probabilities(*r.final_state, measured));
        CHECK(r.measured_qubits == std::vector<Qubit>{3, 0});
    }
    SUBCASE("initial state and errors") {
        Circuit c(2);
        c.add(gates::cnot(0, 1));
        ExecutionOptions opts;
        opts.initial = basis_state(2, 0b10);
        const auto r = execute(c, opts);
        CHECK((*r.final_state)[0b11] == Complex{1.0, 0.0});

        ExecutionOptions wrong;
        wrong.initial = zero_state(3);
        CHECK(kind_of([&] { (void)execute(c, wrong); }) == ErrorKind::Dimension);

        Circuit big(13);
        ExecutionOptions ref;
        ref.backend = get_backend("reference");
        CHECK(kind_of([&] { (void)execute(big, ref); }) == ErrorKind::Capacity);

        CHECK(kind_of([&] { c.measure({0, 0}); }) == ErrorKind::Index);
    }
    SUBCASE("keep_state false drops the state") {
        Circuit c(1);
        ExecutionOptions opts;
        opts.keep_state = false;
        CHECK_FALSE(execute(c, opts).final_state.has_value());
    }
}

TEST_CASE("gate followed by its dagger is the identity") {
    Rng rng(5);
    for (int k = 0; k < 200; ++k) {
        const int n = 1 + static_cast<int>(rng.below(6));
        const Gate g = testing::random_catalog_gate(n, rng);
        Circuit c(n);
        c.add(g).add(dagger(g));
        const StateVector s = random_state(n, rng);
        ExecutionOptions opts;
        opts.initial = s;
        CHECK(max_abs_diff(*execute(c, opts).final_state, s) < 1e-12);
    }
}

TEST_CASE("inverse circuit") {
    Rng rng(6);
    const Circuit c = testing::random_circuit(4, 20, rng);
    Circuit both = c;
    both.append(c.inverse());
    const StateVector s = random_state(4, rng);
    ExecutionOptions opts;
    opts.initial = s;
    CHECK(max_abs_diff(*execute(both, opts).final_state, s) < 1e-12);
}

TEST_CASE("sample") {
    const double certain[] = {1.0, 0.0};
    const auto c = sample(certain, 100, 1);
    CHECK(c.size() == 1);
    CHECK(c.at("0") == 100);

    const double fair[] = {0.5, 0.5};
    const auto f = sample(fair, 1000000, 2);
    CHECK(std::abs(static_cast<double>(f.at("0")) - 500000.0) <= 1500.0);
    CHECK(f.at("0") + f.at("1") == 1000000);

    SUBCASE("total variation against exact probabilities") {
        Rng rng(9);
        const StateVector s = random_state(3, rng);
        const auto probs = probabilities(s);
        const std::uint64_t shots = 100000;
        const auto counts = sample(probs, shots, 77);
        double tv = 0.0;
        for (Index i = 0; i < 8; ++i) {
            const auto it = counts.find(to_bitstring(i, 3));
            const double freq =
                it == counts.end() ? 0.0 : static_cast<double>(it->second) / shots;
            tv += std::abs(freq - probs[i]);
        }
        CHECK(0.5 * tv < 0.01);
    }
    SUBCASE("invalid distributions") {
        const double negative[] = {1.1, -0.1};
        CHECK(kind_of([&] { (void)sample(negative, 10, 1); }) ==
              ErrorKind::InvalidDistribution);
        const double short_total[] = {0.5, 0.4};
        CHECK(kind_of([&] { (void)sample(short_total, 10, 1); }) ==
              ErrorKind::InvalidDistribution);
        const double odd[] = {0.5, 0.25, 0.25};
        CHECK(kind_of([&] { (void)sample(odd, 10, 1); }) == ErrorKind::InvalidDistribution);
    }
    SUBCASE("tiny negative rounding is tolerated") {
        const double rounded[] = {1.0, -1e-13};
        CHECK(sample(rounded, 5, 3).at("0") == 5);
    }
}

TEST_CASE("sampling determinism across runs and worker counts") {
    Rng rng(10);
    const Circuit c = testing::random_circuit(15, 40, rng);
    std::vector<std::map<std::string, std::uint64_t>> all;
    for (const int threads : {1, 2, 8, 1}) {
        const kernels::ScopedThreads scope(threads);
        ExecutionOptions opts;
        opts.nshots = 5000;
        opts.seed = 123456789;
        all.push_back(execute(c, opts).counts);
    }
    CHECK(all[0] == all[1]);
    CHECK(all[0] == all[2]);
    CHECK(all[0] == all[3]);
    std::uint64_t total = 0;
    for (const auto &[bits, count] : all[0]) {
        CHECK(bits.size() == 15);
        total += count;
    }
    CHECK(total == 5000);
}

TEST_CASE("set_parameters") {
    Circuit c(1);
    c.add(gates::ry(0, 0.0));
    const double pi[] = {kPi};
    c.set_parameters(pi);
    const StateVector s = final_state(c);
    CHECK(std::abs(std::abs(s[1]) - 1.0) < 1e-15);

    Circuit plain(2);
    plain.add(gates::h(0)).add(gates::cnot(0, 1));
    plain.set_parameters({});
    CHECK(plain.size() == 2);

    const double two[] = {0.1, 0.2};
    CHECK(kind_of([&] { c.set_parameters(two); }) == ErrorKind::Arity);

    SUBCASE("rebinding is idempotent") {
        Rng rng(12);
        Circuit v(3);
        v.add(gates::ry(0, 0.0)).add(gates::cnot(0, 1)).add(gates::u3(2, 0.0, 0.0, 0.0));
        v.add(gates::cu1(1, 2, 0.0));
        std::vector<double> first(v.param_slots().size());
        std::vector<double> second(v.param_slots().size());
        for (auto &x : first) x = rng.uniform(-3.0, 3.0);
        for (auto &x : second) x = rng.uniform(-3.0, 3.0);
        v.set_parameters(first);
        v.set_parameters(second);
        const StateVector twice = final_state(v);
        Circuit w = v;
        w.set_parameters(second);
        CHECK(max_abs_diff(twice, final_state(w)) == 0.0);
        CHECK(v.parameters() == second);
    }
}

TEST_CASE("json") {
    Circuit c(2);
    c.add(gates::x(0));
    ExecutionOptions opts;
    opts.nshots = 10;
    const auto j = to_json(execute(c, opts));
    CHECK(j["nqubits"] == 2);
    CHECK(j["counts"]["10"] == 10);
    CHECK(j["probabilities"].size() == 4);
    CHECK(j.contains("elapsed_s"));
    CHECK_FALSE(to_json(execute(c, opts), false).contains("elapsed_s"));
}
