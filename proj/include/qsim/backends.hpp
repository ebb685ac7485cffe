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
 * Backend contract, the built-in backends, and the process-wide registry.
 *
 * Two backends ship with the library:
 *   - "kernel": in-place parallel kernels (default).
 *   - "reference": lifts every gate to a dense 2^n x 2^n matrix and
 *     multiplies, producing a new state. Slow and memory hungry by nature;
 *     it exists as the correctness oracle and is capped at 12 qubits.
 *
 * The active backend is chosen by set_active(), by the QSIM_BACKEND
 * environment variable, or defaults to "kernel".
 */
#pragma once

#include "qsim/gates.hpp"
#include "qsim/pauli.hpp"
#include "qsim/state.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsim {

/// Largest register the dense reference backend accepts.
inline constexpr int kMaxDenseQubits = 12;

struct Capabilities {
    bool supports_parallel = false;
    bool is_reference = false;
};

class Backend {
  public:
    virtual ~Backend() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual Capabilities capabilities() const = 0;
    /// Largest supported qubit count.
    [[nodiscard]] virtual int max_qubits() const = 0;

    [[nodiscard]] virtual StateVector initial_state(int n) const;
    virtual void apply_gate(StateVector &s, const Gate &g) const = 0;
    [[nodiscard]] virtual std::vector<double>
    probabilities(const StateVector &s, std::span<const Qubit> qubits) const;
    [[nodiscard]] virtual std::vector<std::uint64_t>
    sample(std::span<const double> probs, std::uint64_t nshots,
           std::uint64_t seed) const;
    /// <s| sum_k c_k P_k |s>.
    [[nodiscard]] virtual double expectation(const StateVector &s,
                                             std::span<const PauliTerm> terms) const = 0;
};

class KernelBackend final : public Backend {
  public:
    [[nodiscard]] std::string name() const override { return "kernel"; }
    [[nodiscard]] Capabilities capabilities() const override { return {true, false}; }
    [[nodiscard]] int max_qubits() const override;
    void apply_gate(StateVector &s, const Gate &g) const override;
    [[nodiscard]] double expectation(const StateVector &s,
                                     std::span<const PauliTerm> terms) const override;
};

class ReferenceBackend final : public Backend {
  public:
    [[nodiscard]] std::string name() const override { return "reference"; }
    [[nodiscard]] Capabilities capabilities() const override { return {false, true}; }
    [[nodiscard]] int max_qubits() const override { return kMaxDenseQubits; }
    [[nodiscard]] StateVector initial_state(int n) const override;
    void apply_gate(StateVector &s, const Gate &g) const override;
    [[nodiscard]] double expectation(const StateVector &s,
                                     std::span<const PauliTerm> terms) const override;
};

/// Full 2^n x 2^n matrix of `g`: the gate matrix on its targets inside the
/// subspace where all controls are 1, identity elsewhere. Built by explicit
/// enumeration of basis states. Throws Capacity above kMaxDenseQubits.
Matrix lift_gate(const Gate &g, int n_qubits);

/// lift_gate(g, n) * s as a new state.
StateVector apply_via_dense(const StateVector &s, const Gate &g);

/// Thread-safe registry. Reads may happen concurrently; set_active and
/// register_backend are serialized.
void register_backend(std::shared_ptr<const Backend> backend);
void set_active_backend(std::string_view name);
[[nodiscard]] std::shared_ptr<const Backend> active_backend();
[[nodiscard]] std::shared_ptr<const Backend> get_backend(std::string_view name);
[[nodiscard]] std::string active_backend_name();
[[nodiscard]] std::vector<std::string> backend_names();

/// Switches the active backend for the lifetime of the object.
class ScopedBackend {
  public:
    explicit ScopedBackend(std::string_view name);
    ~ScopedBackend();
    ScopedBackend(const ScopedBackend &) = delete;
    ScopedBackend &operator=(const ScopedBackend &) = delete;

  private:
    std::string previous_;
};

} // namespace qsim
