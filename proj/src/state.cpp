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
#include "qsim/state.hpp"

#include "qsim/error.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>

namespace qsim {

namespace {

std::mutex g_alloc_mutex;
std::map<std::size_t, std::size_t> g_alloc_sizes; // element count -> buffers

std::atomic<int> g_max_qubits{30};

void put_u64(std::ostream &out, std::uint64_t value) {
    std::array<char, 8> bytes{};
    for (int i = 0; i < 8; ++i) {
        bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFFU);
    }
    out.write(bytes.data(), bytes.size());
}

std::uint64_t get_u64(std::istream &in) {
    std::array<unsigned char, 8> bytes{};
    in.read(reinterpret_cast<char *>(bytes.data()), bytes.size());
    if (!in) {
        throw Error(ErrorKind::Io, "state file truncated");
    }
    std::uint64_t value = 0;
    for (int i = 0; i < 8; ++i) {
        value |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    }
    return value;
}

} // namespace

void AllocationTracker::record(std::size_t elements) {
    const std::lock_guard lock(g_alloc_mutex);
    ++g_alloc_sizes[elements];
}

void AllocationTracker::reset() {
    const std::lock_guard lock(g_alloc_mutex);
    g_alloc_sizes.clear();
}

std::size_t AllocationTracker::count_at_least(std::size_t elements) {
    const std::lock_guard lock(g_alloc_mutex);
    std::size_t count = 0;
    for (auto it = g_alloc_sizes.lower_bound(elements); it != g_alloc_sizes.end();
         ++it) {
        count += it->second;
    }
    return count;
}

std::size_t AllocationTracker::total() { return count_at_least(0); }

int max_qubits() noexcept { return g_max_qubits.load(); }

void set_max_qubits(int n) {
    if (n < 1 || n > 40) {
        throw Error(ErrorKind::InvalidSize,
                    "maximum qubit count must lie in [1, 40], got " +
                        std::to_string(n));
    }
    g_max_qubits.store(n);
}

void check_qubit_count(int n) {
    if (n < 1 || n > max_qubits()) {
        throw Error(ErrorKind::InvalidSize,
                    "qubit count " + std::to_string(n) + " outside [1, " +
                        std::to_string(max_qubits()) + "]");
    }
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    check_qubit_count(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
}

StateVector StateVector::from_amplitudes(std::span<const Complex> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw Error(ErrorKind::Dimension,
                    "amplitude count " + std::to_string(dim) +
                        " is not a power of two >= 2");
    }
    StateVector s(std::countr_zero(dim));
    std::copy(amplitudes.begin(), amplitudes.end(), s.amps_.begin());
    return s;
}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (const Complex &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::normalize() {
    const double norm = std::sqrt(norm_squared());
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw Error(ErrorKind::Numerical, "cannot normalize a zero or non-finite state");
    }
    const double inv = 1.0 / norm;
    for (Complex &a : amps_) {
        a *= inv;
    }
}

StateVector zero_state(int n) {
    StateVector s(n);
    s[0] = 1.0;
    return s;
}

StateVector plus_state(int n) {
    StateVector s(n);
    const double amp = std::pow(2.0, -0.5 * n);
    std::fill(s.amplitudes().begin(), s.amplitudes().end(), Complex{amp, 0.0});
    return s;
}

StateVector basis_state(int n, Index index) {
    StateVector s(n);
    if (index >= s.size()) {
        throw Error(ErrorKind::Index, "basis index " + std::to_string(index) +
                                          " out of range for " +
                                          std::to_string(n) + " qubits");
    }
    s[index] = 1.0;
    return s;
}

StateVector random_state(int n, Rng &rng) {
    StateVector s(n);
    for (Complex &a : s.amplitudes()) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = Complex{re, im};
    }
    s.normalize();
    return s;
}

Complex overlap(const StateVector &a, const StateVector &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw Error(ErrorKind::Dimension,
                    "overlap of states with " + std::to_string(a.n_qubits()) +
                        " and " + std::to_string(b.n_qubits()) + " qubits");
    }
    Complex total{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::Dimension, "max_abs_diff of states of different size");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

std::vector<double> probabilities(const StateVector &s) {
    std::vector<double> probs(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        probs[i] = std::norm(s[i]);
    }
    return probs;
}

std::vector<double> probabilities(const StateVector &s,
                                  std::span<const Qubit> qubits) {
    const int n = s.n_qubits();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const Qubit q : qubits) {
        if (q < 0 || q >= n) {
            throw Error(ErrorKind::Index, "qubit " + std::to_string(q) +
                                              " out of range for " +
                                              std::to_string(n) + " qubits");
        }
        if (seen[static_cast<std::size_t>(q)]) {
            throw Error(ErrorKind::Index, "duplicate qubit " + std::to_string(q));
        }
        seen[static_cast<std::size_t>(q)] = true;
    }

    const auto k = static_cast<int>(qubits.size());
    bool identity = k == n;
    for (int j = 0; identity && j < k; ++j) {
        identity = qubits[static_cast<std::size_t>(j)] == j;
    }
    if (identity) {
        return probabilities(s);
    }

    std::vector<int> positions(qubits.size());
    for (int j = 0; j < k; ++j) {
        positions[static_cast<std::size_t>(j)] =
            bit_position(n, qubits[static_cast<std::size_t>(j)]);
    }
    std::vector<double> probs(std::size_t{1} << k, 0.0);
    for (Index i = 0; i < s.size(); ++i) {
        Index out = 0;
        for (int j = 0; j < k; ++j) {
            out = (out << 1) | ((i >> positions[static_cast<std::size_t>(j)]) & 1U);
        }
        probs[out] += std::norm(s[i]);
    }
    return probs;
}

std::string to_bitstring(Index index, int width) {
    std::string bits(static_cast<std::size_t>(width), '0');
    for (int j = 0; j < width; ++j) {
        if ((index >> (width - 1 - j)) & 1U) {
            bits[static_cast<std::size_t>(j)] = '1';
        }
    }
    return bits;
}

void write_state(std::ostream &out, const StateVector &s) {
    put_u64(out, static_cast<std::uint64_t>(s.n_qubits()));
    for (const Complex &a : s.amplitudes()) {
        put_u64(out, std::bit_cast<std::uint64_t>(a.real()));
        put_u64(out, std::bit_cast<std::uint64_t>(a.imag()));
    }
    if (!out) {
        throw Error(ErrorKind::Io, "failed to write state");
    }
}

StateVector read_state(std::istream &in) {
    const std::uint64_t n = get_u64(in);
    if (n < 1 || n > static_cast<std::uint64_t>(max_qubits())) {
        throw Error(ErrorKind::InvalidSize,
                    "state file declares " + std::to_string(n) + " qubits");
    }
    StateVector s(static_cast<int>(n));
    for (Complex &a : s.amplitudes()) {
        const double re = std::bit_cast<double>(get_u64(in));
        const double im = std::bit_cast<double>(get_u64(in));
        a = Complex{re, im};
    }
    return s;
}

void save_state(const std::string &path, const StateVector &s) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorKind::Io, "cannot open " + path + " for writing");
    }
    write_state(out, s);
}

StateVector load_state(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot open " + path);
    }
    return read_state(in);
}

} // namespace qsim
