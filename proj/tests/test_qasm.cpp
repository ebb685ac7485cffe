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
#include "qsim/qasm.hpp"

#include "qasm_corpus.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <string>

using namespace qsim;

namespace {

void check_same_circuit(const Circuit &a, const Circuit &b) {
    REQUIRE(a.n_qubits() == b.n_qubits());
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        const Gate &ga = a.gates()[k];
        const Gate &gb = b.gates()[k];
        CHECK(ga.name() == gb.name());
        CHECK(ga.targets() == gb.targets());
        CHECK(ga.controls() == gb.controls());
        REQUIRE(ga.params().size() == gb.params().size());
        for (std::size_t p = 0; p < ga.params().size(); ++p) {
            CHECK(std::abs(ga.params()[p] - gb.params()[p]) <= 1e-12);
        }
    }
    CHECK(a.measured_qubits() == b.measured_qubits());
}

} // namespace

TEST_CASE("parse basics") {
    const Circuit c = qasm::parse("OPENQASM 2.0; qreg q[1]; x q[0];");
    CHECK(c.n_qubits() == 1);
    REQUIRE(c.size() == 1);
    CHECK(c.gates()[0].kind() == GateKind::X);
    CHECK(c.gates()[0].targets() == std::vector<Qubit>{0});

    const Circuit r = qasm::parse("OPENQASM 2.0; qreg q[1]; rz(pi/2) q[0];");
    CHECK(std::abs(r.gates()[0].params()[0] - kPi / 2) <= 1e-15);
}

TEST_CASE("angle expressions") {
    const auto angle = [](const std::string &expr) {
        return qasm::parse("qreg q[1]; rz(" + expr + ") q[0];").gates()[0].params()[0];
    };
    CHECK(angle("1+2*3") == doctest::Approx(7.0));
    CHECK(angle("(1+2)*3") == doctest::Approx(9.0));
    CHECK(angle("-pi/4") == doctest::Approx(-kPi / 4));
    CHECK(angle("2-3-4") == doctest::Approx(-5.0));
    CHECK(angle("8/2/2") == doctest::Approx(2.0));
    CHECK(angle("--1") == doctest::Approx(1.0));
    CHECK(angle("1.5e-1") == doctest::Approx(0.15));
    CHECK(angle(".5") == doctest::Approx(0.5));
}

TEST_CASE("statements") {
    const Circuit c = qasm::parse(R"(OPENQASM 2.0;
include "qelib1.inc";
qreg q[3];
creg c[2];
creg d[1];
h q;
barrier q[0], q[1];
ccx q[0], q[1], q[2];
u3(0.1, 0.2, 0.3) q[2];
measure q[2] -> c[0];
measure q[0] -> d[0];
measure q[1] -> c[1];
)");
    CHECK(c.size() == 5);
    CHECK(c.gates()[0].targets() == std::vector<Qubit>{0});
    CHECK(c.gates()[2].targets() == std::vector<Qubit>{2});
    CHECK(c.gates()[3].kind() == GateKind::X);
    CHECK(c.gates()[3].controls() == std::vector<Qubit>{0, 1});
    CHECK(c.measured_qubits() == std::vector<Qubit>{2, 1, 0});

    const Circuit whole = qasm::parse("qreg q[2]; creg c[2]; measure q -> c;");
    CHECK(whole.measured_qubits() == std::vector<Qubit>{0, 1});
}

TEST_CASE("serialize Bell circuit") {
    Circuit bell(2);
    bell.add(gates::h(0)).add(gates::cnot(0, 1));
    const std::string text = qasm::serialize(bell);
    const auto h = text.find("h q[0];\n");
    const auto cx = text.find("cx q[0], q[1];\n");
    REQUIRE(h != std::string::npos);
    REQUIRE(cx != std::string::npos);
    CHECK(h < cx);
}

TEST_CASE("serialize rejects unrepresentable gates") {
    Rng rng(1);
    Circuit c(3);
    c.add(Gate::unitary(testing::gram_schmidt_unitary(8, rng), {0, 1, 2}));
    try {
        (void)qasm::serialize(c);
        FAIL("expected a serialization error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::Serialization);
        CHECK(std::string(e.what()).find("unitary") != std::string::npos);
    }
    Circuit inf(1);
    inf.add(gates::rz(0, INFINITY));
    CHECK_THROWS_AS((void)qasm::serialize(inf), Error);
}

TEST_CASE("round trip on generated circuits") {
    Rng rng(2718);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const Circuit c = testing::random_named_circuit(n, 1 + static_cast<int>(rng.below(30)), rng);
        const Circuit back = qasm::parse(qasm::serialize(c));
        check_same_circuit(c, back);
    }
}

TEST_CASE("comments and blank lines do not change the circuit") {
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const Circuit c = testing::random_named_circuit(4, 12, rng);
        const std::string text = qasm::serialize(c);
        std::string noisy = "// leading comment\n\n";
        for (const char ch : text) {
            noisy += ch;
            if (ch == '\n') {
                noisy += rng.below(2) ? "\n   \n" : "// note; with qreg q[9]; inside\n";
            }
        }
        check_same_circuit(c, qasm::parse(noisy));
    }
}

TEST_CASE("malformed corpus") {
    for (const auto &entry : testing::malformed_corpus()) {
        CAPTURE(entry.source);
        try {
            (void)qasm::parse(entry.source);
            FAIL("parsed without error");
        } catch (const ParseError &e) {
            CHECK(e.reason() == entry.reason);
            CHECK(e.line() == entry.line);
            CHECK(e.column() == entry.column);
            const std::string prefix =
                std::to_string(entry.line) + ":" + std::to_string(entry.column) + ":";
            CHECK(std::string(e.what()).rfind(prefix, 0) == 0);
        }
    }
}

TEST_CASE("parser is total on mutated and random input") {
    Rng rng(4242);
    const std::string seed_program = qasm::serialize(testing::random_named_circuit(3, 10, rng));
    int parsed = 0;
    int rejected = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        std::string text = seed_program;
        const int edits = 1 + static_cast<int>(rng.below(4));
        for (int e = 0; e < edits; ++e) {
            const auto pos = static_cast<std::size_t>(rng.below(text.size()));
            const char byte = static_cast<char>(rng.below(256));
            switch (rng.below(3)) {
            case 0: text[pos] = byte; break;
            case 1: text.insert(text.begin() + static_cast<std::ptrdiff_t>(pos), byte); break;
            default: text.erase(pos, 1); break;
            }
        }
        if (trial % 5 == 0) {
            text.resize(static_cast<std::size_t>(rng.below(64)));
            for (char &ch : text) {
                ch = static_cast<char>(rng.below(256));
            }
        }
        try {
            (void)qasm::parse(text);
            ++parsed;
        } catch (const ParseError &e) {
            CHECK(e.line() >= 1);
            CHECK(e.column() >= 1);
            ++rejected;
        }
    }
    CHECK(parsed + rejected == 3000);
    CHECK(rejected > 0);
}
