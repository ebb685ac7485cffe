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
 * Circuits, execution and measurement sampling.
 */
#pragma once

#include "qsim/backends.hpp"
#include "qsim/gates.hpp"
#include "qsim/state.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qsim {

/// One variational angle: params()[position] of gates()[gate].
struct ParamSlot {
    std::size_t gate;
    int position;
};

class Circuit {
  public:
    explicit Circuit(int n_qubits);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept { return gates_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    /// Number of layers when every gate occupies all of its qubits.
    [[nodiscard]] std::size_t depth() const;

    /// Appends a gate; throws Index if any qubit is outside the register.
    Circuit &add(Gate g);
    /// Appends every gate of `other` (same register size).
    Circuit &append(const Circuit &other);

    /// Marks qubits for measurement, in order. Duplicates are rejected.
    Circuit &measure(std::span<const Qubit> qubits);
    Circuit &measure(std::initializer_list<Qubit> qubits) {
        return measure(std::span<const Qubit>(qubits.begin(), qubits.size()));
    }
    [[nodiscard]] const std::vector<Qubit> &measured_qubits() const noexcept {
        return measured_;
    }

    /// Slots in queue order, one per angle of every parameterized gate.
    [[nodiscard]] const std::vector<ParamSlot> &param_slots() const noexcept {
        return slots_;
    }
    [[nodiscard]] std::vector<double> parameters() const;
    /// Rebinds every slot in order; throws Arity on a length mismatch.
    void set_parameters(std::span<const double> values);

    /// Adjoint circuit: daggered gates in reverse order, no measurements.
    [[nodiscard]] Circuit inverse() const;

  private:
    int n_qubits_;
    std::vector<Gate> gates_;
    std::vector<Qubit> measured_;
    std::vector<ParamSlot> slots_;
};

struct ExecutionOptions {
    std::optional<StateVector> initial;
    std::uint64_t nshots = 0;
    std::uint64_t seed = 0;
    bool keep_state = true;
    /// Uses the active backend when null.
    std::shared_ptr<const Backend> backend;
};

struct ExecutionResult {
    int n_qubits = 0;
    std::optional<StateVector> final_state;
    std::vector<Qubit> measured_qubits;
    std::vector<double> probabilities;
    std::map<std::string, std::uint64_t> counts;
    double elapsed_s = 0.0;
};

/// Applies the gate queue to the initial state (default |0...0>), then
/// computes the distribution of the measured qubits (all qubits when none
/// are marked) and, if nshots > 0, samples it. The state is not collapsed.
ExecutionResult execute(const Circuit &c, ExecutionOptions options = {});

/// Gate queue applied to `state` in place on the given backend.
void run(const Circuit &c, StateVector &state, const Backend &backend);
/// Final state from |0...0> on the active backend.
StateVector final_state(const Circuit &c);

/// Seeded inverse-CDF sampling; keys are MSB-first bitstrings of width
/// log2(probs.size()), only outcomes with non-zero counts appear.
std::map<std::string, std::uint64_t> sample(std::span<const double> probs,
                                            std::uint64_t nshots, std::uint64_t seed);

/// {"nqubits", "counts", "probabilities", "elapsed_s"}.
nlohmann::ordered_json to_json(const ExecutionResult &result, bool include_elapsed = true);

} // namespace qsim
