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
#include "qsim/sampling.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

namespace qsim {

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) { check_qubit_count(n_qubits); }

std::size_t Circuit::depth() const {
    std::vector<std::size_t> level(static_cast<std::size_t>(n_qubits_), 0);
    std::size_t deepest = 0;
    for (const Gate &g : gates_) {
        std::size_t start = 0;
        for (const Qubit q : g.qubits()) {
            start = std::max(start, level[static_cast<std::size_t>(q)]);
        }
        for (const Qubit q : g.qubits()) {
            level[static_cast<std::size_t>(q)] = start + 1;
        }
        deepest = std::max(deepest, start + 1);
    }
    return deepest;
}

Circuit &Circuit::add(Gate g) {
    for (const Qubit q : g.qubits()) {
        if (q < 0 || q >= n_qubits_) {
            throw Error(ErrorKind::Index, "gate '" + g.label() + "' uses qubit " +
                                              std::to_string(q) + " in a " +
                                              std::to_string(n_qubits_) +
                                              "-qubit circuit");
        }
    }
    for (int p = 0; p < g.n_params(); ++p) {
        slots_.push_back({gates_.size(), p});
    }
    gates_.push_back(std::move(g));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n_qubits_ != n_qubits_) {
        throw Error(ErrorKind::Dimension, "cannot append a " +
                                              std::to_string(other.n_qubits_) +
                                              "-qubit circuit to a " +
                                              std::to_string(n_qubits_) + "-qubit one");
    }
    for (const Gate &g : other.gates_) {
        add(g);
    }
    return *this;
}

Circuit &Circuit::measure(std::span<const Qubit> qubits) {
    for (const Qubit q : qubits) {
        if (q < 0 || q >= n_qubits_) {
            throw Error(ErrorKind::Index, "cannot measure qubit " + std::to_string(q));
        }
        if (std::find(measured_.begin(), measured_.end(), q) != measured_.end()) {
            throw Error(ErrorKind::Index, "qubit " + std::to_string(q) +
                                              " is already measured");
        }
        measured_.push_back(q);
    }
    return *this;
}

std::vector<double> Circuit::parameters() const {
    std::vector<double> values;
    values.reserve(slots_.size());
    for (const ParamSlot &slot : slots_) {
        values.push_back(gates_[slot.gate].params()[static_cast<std::size_t>(slot.position)]);
    }
    return values;
}

void Circuit::set_parameters(std::span<const double> values) {
    if (values.size() != slots_.size()) {
        throw Error(ErrorKind::Arity, "circuit has " + std::to_string(slots_.size()) +
                                          " parameter slot(s), got " +
                                          std::to_string(values.size()) + " value(s)");
    }
    std::size_t next = 0;
    for (Gate &g : gates_) {
        if (!g.is_parameterized()) {
            continue;
        }
        const auto count = static_cast<std::size_t>(g.n_params());
        std::vector<double> params(values.begin() + static_cast<std::ptrdiff_t>(next),
                                   values.begin() +
                                       static_cast<std::ptrdiff_t>(next + count));
        g = g.with_params(std::move(params));
        next += count;
    }
}

Circuit Circuit::inverse() const {
    Circuit inv(n_qubits_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        inv.add(dagger(*it));
    }
    return inv;
}

void run(const Circuit &c, StateVector &state, const Backend &backend) {
    if (state.n_qubits() != c.n_qubits()) {
        throw Error(ErrorKind::Dimension, "initial state has " +
                                              std::to_string(state.n_qubits()) +
                                              " qubits, circuit has " +
                                              std::to_string(c.n_qubits()));
    }
    if (c.n_qubits() > backend.max_qubits()) {
        throw Error(ErrorKind::Capacity, "backend '" + backend.name() +
                                             "' supports at most " +
                                             std::to_string(backend.max_qubits()) +
                                             " qubits");
    }
    for (const Gate &g : c.gates()) {
        backend.apply_gate(state, g);
    }
}

StateVector final_state(const Circuit &c) {
    const auto backend = active_backend();
    StateVector state = backend->initial_state(c.n_qubits());
    run(c, state, *backend);
    return state;
}

ExecutionResult execute(const Circuit &c, ExecutionOptions options) {
    const auto start = std::chrono::steady_clock::now();
    const std::shared_ptr<const Backend> backend =
        options.backend ? options.backend : active_backend();

    StateVector state = options.initial ? std::move(*options.initial)
                                        : backend->initial_state(c.n_qubits());
    run(c, state, *backend);

    ExecutionResult result;
    result.n_qubits = c.n_qubits();
    result.measured_qubits = c.measured_qubits();
    if (result.measured_qubits.empty()) {
        for (Qubit q = 0; q < c.n_qubits(); ++q) {
            result.measured_qubits.push_back(q);
        }
    }
    result.probabilities = backend->probabilities(state, result.measured_qubits);
    if (options.nshots > 0) {
        const auto histogram =
            backend->sample(result.probabilities, options.nshots, options.seed);
        const auto width = static_cast<int>(result.measured_qubits.size());
        for (std::size_t i = 0; i < histogram.size(); ++i) {
            if (histogram[i] > 0) {
                result.counts.emplace(to_bitstring(i, width), histogram[i]);
            }
        }
    }
    if (options.keep_state) {
        result.final_state.emplace(std::move(state));
    }
    result.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::map<std::string, std::uint64_t> sample(std::span<const double> probs,
                                            std::uint64_t nshots, std::uint64_t seed) {
    const std::size_t size = probs.size();
    if (size < 2 || !std::has_single_bit(size)) {
        throw Error(ErrorKind::InvalidDistribution,
                    "distribution length " + std::to_string(size) +
                        " is not a power of two >= 2");
    }
    const auto histogram = sample_histogram(probs, nshots, seed);
    const int width = std::countr_zero(size);
    std::map<std::string, std::uint64_t> counts;
    for (std::size_t i = 0; i < histogram.size(); ++i) {
        if (histogram[i] > 0) {
            counts.emplace(to_bitstring(i, width), histogram[i]);
        }
    }
    return counts;
}

nlohmann::ordered_json to_json(const ExecutionResult &result, bool include_elapsed) {
    nlohmann::ordered_json out;
    out["nqubits"] = result.n_qubits;
    out["counts"] = nlohmann::ordered_json::object();
    for (const auto &[bits, count] : result.counts) {
        out["counts"][bits] = count;
    }
    out["probabilities"] = result.probabilities;
    if (include_elapsed) {
        out["elapsed_s"] = result.elapsed_s;
    }
    return out;
}

} // namespace qsim
