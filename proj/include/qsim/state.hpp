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
 * State-vector representation and the basis-index convention.
 *
 * An n-qubit pure state is stored as one contiguous buffer of 2^n complex
 * doubles. Qubit 0 is the most significant bit of the basis index, so the
 * bitstring b0 b1 ... b(n-1) labels index sum_k b_k * 2^(n-1-k). Qubit q
 * therefore lives at bit position (n - 1 - q) of the index.
 */
#pragma once

#include "qsim/random.hpp"
#include "qsim/types.hpp"

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qsim {

/// Process-wide record of state-buffer allocations. Every StateVector buffer
/// is obtained through TrackedAllocator, so tests and benchmarks can assert
/// how many full-size buffers a computation created.
class AllocationTracker {
  public:
    static void record(std::size_t elements);
    static void reset();
    /// Number of buffers of at least `elements` complex numbers allocated
    /// since the last reset().
    [[nodiscard]] static std::size_t count_at_least(std::size_t elements);
    [[nodiscard]] static std::size_t total();
};

template <class T> struct TrackedAllocator {
    using value_type = T;

    TrackedAllocator() noexcept = default;
    template <class U>
    TrackedAllocator(const TrackedAllocator<U> & /*other*/) noexcept {}

    T *allocate(std::size_t count) {
        AllocationTracker::record(count);
        return std::allocator<T>{}.allocate(count);
    }
    void deallocate(T *ptr, std::size_t count) noexcept {
        std::allocator<T>{}.deallocate(ptr, count);
    }

    template <class U>
    bool operator==(const TrackedAllocator<U> & /*other*/) const noexcept {
        return true;
    }
};

/// Largest qubit count accepted by the state factories (default 30).
[[nodiscard]] int max_qubits() noexcept;
void set_max_qubits(int n);

class StateVector {
  public:
    using Buffer = std::vector<Complex, TrackedAllocator<Complex>>;

    /// All-zero amplitudes; use the factories below for physical states.
    explicit StateVector(int n_qubits);

    /// Copies `amplitudes` (length must be a power of two). No normalization.
    static StateVector from_amplitudes(std::span<const Complex> amplitudes);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }

    [[nodiscard]] Complex *data() noexcept { return amps_.data(); }
    [[nodiscard]] const Complex *data() const noexcept { return amps_.data(); }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }

    Complex &operator[](Index i) noexcept { return amps_[i]; }
    const Complex &operator[](Index i) const noexcept { return amps_[i]; }

    [[nodiscard]] double norm_squared() const noexcept;
    /// Rescales to unit norm; throws Numerical on a zero vector.
    void normalize();

  private:
    int n_qubits_;
    Buffer amps_;
};

/// Validates 1 <= n <= max_qubits(); throws InvalidSize otherwise.
void check_qubit_count(int n);

StateVector zero_state(int n);
StateVector plus_state(int n);
StateVector basis_state(int n, Index index);
/// Haar-like random state: normalized complex Gaussian amplitudes.
StateVector random_state(int n, Rng &rng);

/// <a|b> = sum conj(a_i) b_i.
Complex overlap(const StateVector &a, const StateVector &b);

/// max_i |a_i - b_i|.
double max_abs_diff(const StateVector &a, const StateVector &b);

/// Marginal distribution of `qubits`; qubits[0] is the most significant bit
/// of the returned index.
std::vector<double> probabilities(const StateVector &s,
                                  std::span<const Qubit> qubits);
/// Full distribution |a_i|^2.
std::vector<double> probabilities(const StateVector &s);

/// Bit position of `qubit` inside a basis index of an n-qubit register.
constexpr int bit_position(int n_qubits, Qubit qubit) noexcept {
    return n_qubits - 1 - qubit;
}

/// MSB-first bitstring of `index` with `width` characters.
std::string to_bitstring(Index index, int width);

// Binary format: uint64 n_qubits, then 2^n (real, imag) doubles, all
// little-endian.
void write_state(std::ostream &out, const StateVector &s);
StateVector read_state(std::istream &in);
void save_state(const std::string &path, const StateVector &s);
StateVector load_state(const std::string &path);

} // namespace qsim
