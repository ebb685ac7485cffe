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
 * In-place gate application kernels.
 *
 * A gate G on m targets updates the state group by group: every group holds
 * the 2^m amplitudes that agree on all non-target bits, and is replaced by G
 * times itself. Group base indices are generated on the fly from a loop
 * counter by inserting zero bits at the target positions (and one bits at
 * the control positions), so no index tables proportional to 2^n exist and
 * no second state buffer is allocated.
 *
 * Groups write disjoint amplitude sets, so the outer loop is split across
 * OpenMP threads without any reduction. Results are bitwise identical for any
 * thread count.
 */
#pragma once

#include "qsim/gates.hpp"
#include "qsim/state.hpp"
#include "qsim/types.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace qsim::kernels {

/// States smaller than this run single-threaded.
inline constexpr Index kMinParallelAmplitudes = Index{1} << 14;
/// Minimum number of groups handed to one thread.
inline constexpr Index kMinChunkGroups = 4096;

/// Worker count used by the kernels; 0 restores the OpenMP default.
void set_num_threads(int threads);
[[nodiscard]] int num_threads();

/// RAII override of the worker count.
class ScopedThreads {
  public:
    explicit ScopedThreads(int threads) : previous_(num_threads()) {
        set_num_threads(threads);
    }
    ~ScopedThreads() { set_num_threads(previous_); }
    ScopedThreads(const ScopedThreads &) = delete;
    ScopedThreads &operator=(const ScopedThreads &) = delete;

  private:
    int previous_;
};

/// Inserts a zero bit at `position`, shifting the higher bits up by one.
///   insert_zero_bit(0b101, 1) == 0b1001
constexpr Index insert_zero_bit(Index value, int position) noexcept {
    const Index low_mask = (Index{1} << position) - 1;
    return ((value >> position) << (position + 1)) | (value & low_mask);
}

/**
 * Index generation for one gate application.
 *
 * The special bits (targets and controls) are inserted into the loop counter
 * g in ascending bit-position order; control bits are then OR-ed in as ones.
 * Example, n = 4, target qubit 1 (bit 2), control qubit 3 (bit 0):
 *
 *   g = 0b01  -> insert 0 at bit 0 -> 0b010 -> insert 0 at bit 2 -> 0b0010
 *             -> OR control mask 0b0001 -> base 0b0011
 *
 * The group is {base, base | 0b0100}. Enumerating g over
 * [0, 2^(n - |targets| - |controls|)) visits every control-satisfying group
 * exactly once.
 */
class IndexPlan {
  public:
    IndexPlan(int n_qubits, std::span<const Qubit> targets,
              std::span<const Qubit> controls = {});

    [[nodiscard]] Index n_groups() const noexcept { return n_groups_; }
    [[nodiscard]] Index control_mask() const noexcept { return control_mask_; }

    [[nodiscard]] Index base(Index g) const noexcept {
        for (const int p : sorted_positions_) {
            g = insert_zero_bit(g, p);
        }
        return g | control_mask_;
    }

    /// offsets()[tau] is added to a base index to address row tau of the gate
    /// matrix; targets[0] is the most significant bit of tau.
    [[nodiscard]] std::span<const Index> offsets() const noexcept { return offsets_; }

  private:
    std::vector<int> sorted_positions_;
    Index control_mask_ = 0;
    Index n_groups_ = 0;
    std::vector<Index> offsets_;
};

void apply_one_qubit(StateVector &s, const Matrix &g, Qubit target);

void apply_multi_qubit(StateVector &s, const Matrix &g, std::span<const Qubit> targets);

void apply_controlled(StateVector &s, const Matrix &g, std::span<const Qubit> targets,
                      std::span<const Qubit> controls);

/// Specialized kernels: element exchanges or scalar multiplies only.
enum class SpecialKind { PauliX, PauliZ, Phase, Swap };

/// `param` is the phase angle for SpecialKind::Phase (diag(1, e^{i param}))
/// and ignored otherwise.
void apply_diagonal_or_permutation(StateVector &s, SpecialKind kind,
                                   std::span<const Qubit> qubits, double param = 0.0,
                                   std::span<const Qubit> controls = {});

/// Dispatches a catalog or custom gate to the cheapest kernel.
void apply_gate(StateVector &s, const Gate &g);

/// Bit masks of a Pauli string under the MSB-first qubit convention:
///   P|j> = i^{n_y} (-1)^{popcount(j & sign)} |j ^ flip>.
struct PauliMasks {
    Index flip = 0; ///< X or Y
    Index sign = 0; ///< Z or Y
    int n_y = 0;
};

/// Throws Dimension on a length mismatch, InvalidArgument on a bad symbol.
PauliMasks pauli_masks(int n, std::string_view pauli);

/// i^k for integer k.
Complex i_power(int k);

/// Applies a Pauli string in place; pauli[k] in {I, X, Y, Z} acts on qubit k.
void apply_pauli_string(StateVector &s, std::string_view pauli);

/// <s|P|s> for a Pauli string, computed without allocating.
Complex pauli_expectation(const StateVector &s, std::string_view pauli);

} // namespace qsim::kernels
