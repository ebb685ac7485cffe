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

#include "qsim/error.hpp"
#include "qsim/kernels.hpp"
#include "qsim/sampling.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace qsim {

namespace {

void check_dense_capacity(int n) {
    if (n > kMaxDenseQubits) {
        throw Error(ErrorKind::Capacity,
                    "dense reference supports at most " +
                        std::to_string(kMaxDenseQubits) + " qubits, got " +
                        std::to_string(n));
    }
}

class Registry {
  public:
    Registry() {
        backends_.emplace("kernel", std::make_shared<KernelBackend>());
        backends_.emplace("reference", std::make_shared<ReferenceBackend>());
        const char *env = std::getenv("QSIM_BACKEND");
        active_ = (env != nullptr && *env != '\0') ? std::string(env) : "kernel";
    }

    void add(std::shared_ptr<const Backend> backend) {
        if (!backend) {
            throw Error(ErrorKind::InvalidArgument, "null backend");
        }
        const std::unique_lock lock(mutex_);
        const std::string name = backend->name();
        if (backends_.contains(name)) {
            throw Error(ErrorKind::Conflict, "backend '" + name + "' already registered");
        }
        backends_.emplace(name, std::move(backend));
    }

    void set_active(std::string_view name) {
        const std::unique_lock lock(mutex_);
        if (!backends_.contains(std::string(name))) {
            throw not_found(name);
        }
        active_ = std::string(name);
    }

    std::shared_ptr<const Backend> get(std::string_view name) const {
        const std::shared_lock lock(mutex_);
        auto it = backends_.find(std::string(name));
        if (it == backends_.end()) {
            throw not_found(name);
        }
        return it->second;
    }

    std::shared_ptr<const Backend> active() const {
        const std::shared_lock lock(mutex_);
        auto it = backends_.find(active_);
        if (it == backends_.end()) {
            throw not_found(active_);
        }
        return it->second;
    }

    std::string active_name() const {
        const std::shared_lock lock(mutex_);
        return active_;
    }

    std::vector<std::string> names() const {
        const std::shared_lock lock(mutex_);
        std::vector<std::string> out;
        for (const auto &entry : backends_) {
            out.push_back(entry.first);
        }
        return out;
    }

  private:
    static Error not_found(std::string_view name) {
        return Error(ErrorKind::NotFound, "unknown backend '" + std::string(name) + "'");
    }

    mutable std::shared_mutex mutex_;
    std::map<std::string, std::shared_ptr<const Backend>> backends_;
    std::string active_;
};

Registry &registry() {
    static Registry instance;
    return instance;
}

} // namespace

StateVector Backend::initial_state(int n) const {
    if (n > max_qubits()) {
        throw Error(ErrorKind::Capacity, "backend '" + name() + "' supports at most " +
                                             std::to_string(max_qubits()) + " qubits");
    }
    return zero_state(n);
}

std::vector<double> Backend::probabilities(const StateVector &s,
                                           std::span<const Qubit> qubits) const {
    return qsim::probabilities(s, qubits);
}

std::vector<std::uint64_t> Backend::sample(std::span<const double> probs,
                                           std::uint64_t nshots,
                                           std::uint64_t seed) const {
    return sample_histogram(probs, nshots, seed);
}

int KernelBackend::max_qubits() const { return qsim::max_qubits(); }

void KernelBackend::apply_gate(StateVector &s, const Gate &g) const {
    kernels::apply_gate(s, g);
}

double KernelBackend::expectation(const StateVector &s,
                                  std::span<const PauliTerm> terms) const {
    Complex total{0.0, 0.0};
    for (const PauliTerm &term : terms) {
        total += term.coefficient * kernels::pauli_expectation(s, term.pauli);
    }
    if (std::abs(total.imag()) > 1e-10) {
        throw Error(ErrorKind::Hermiticity,
                    "expectation has imaginary residue " + std::to_string(total.imag()));
    }
    return total.real();
}

StateVector ReferenceBackend::initial_state(int n) const {
    check_dense_capacity(n);
    return zero_state(n);
}

void ReferenceBackend::apply_gate(StateVector &s, const Gate &g) const {
    s = apply_via_dense(s, g);
}

double ReferenceBackend::expectation(const StateVector &s,
                                     std::span<const PauliTerm> terms) const {
    const int n = s.n_qubits();
    check_dense_capacity(n);
    const auto dim = static_cast<Eigen::Index>(s.size());
    Matrix h = Matrix::Zero(dim, dim);
    for (const PauliTerm &term : terms) {
        if (static_cast<int>(term.pauli.size()) != n) {
            throw Error(ErrorKind::Dimension, "Pauli term '" + term.pauli +
                                                  "' does not match " +
                                                  std::to_string(n) + " qubits");
        }
        h += term.coefficient * pauli_matrix(term.pauli);
    }
    const Eigen::Map<const Vector> psi(s.data(), dim);
    const Complex value = psi.dot(h * psi); // dot conjugates the left operand
    if (std::abs(value.imag()) > 1e-10) {
        throw Error(ErrorKind::Hermiticity,
                    "expectation has imaginary residue " + std::to_string(value.imag()));
    }
    return value.real();
}

Matrix lift_gate(const Gate &g, int n_qubits) {
    check_dense_capacity(n_qubits);
    for (const Qubit q : g.qubits()) {
        if (q < 0 || q >= n_qubits) {
            throw Error(ErrorKind::Index, "gate qubit " + std::to_string(q) +
                                              " out of range for " +
                                              std::to_string(n_qubits) + " qubits");
        }
    }
    const Index dim = Index{1} << n_qubits;
    const auto &targets = g.targets();
    const std::size_t m = targets.size();
    Index target_mask = 0;
    for (const Qubit q : targets) {
        target_mask |= Index{1} << bit_position(n_qubits, q);
    }
    Index control_mask = 0;
    for (const Qubit q : g.controls()) {
        control_mask |= Index{1} << bit_position(n_qubits, q);
    }
    // Writes the m-bit pattern tau into the target bits of `base`.
    auto with_targets = [&](Index base, Index tau) {
        Index out = base & ~target_mask;
        for (std::size_t k = 0; k < m; ++k) {
            if ((tau >> (m - 1 - k)) & 1U) {
                out |= Index{1} << bit_position(n_qubits, targets[k]);
            }
        }
        return out;
    };
    auto target_bits = [&](Index index) {
        Index tau = 0;
        for (std::size_t k = 0; k < m; ++k) {
            tau = (tau << 1) | ((index >> bit_position(n_qubits, targets[k])) & 1U);
        }
        return tau;
    };

    const Matrix &gm = g.matrix();
    Matrix lifted = Matrix::Zero(static_cast<Eigen::Index>(dim),
                                 static_cast<Eigen::Index>(dim));
    for (Index col = 0; col < dim; ++col) {
        if ((col & control_mask) != control_mask) {
            lifted(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) = 1.0;
            continue;
        }
        const Index tau_in = target_bits(col);
        for (Index tau = 0; tau < (Index{1} << m); ++tau) {
            const Index row = with_targets(col, tau);
            lifted(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                gm(static_cast<Eigen::Index>(tau), static_cast<Eigen::Index>(tau_in));
        }
    }
    return lifted;
}

StateVector apply_via_dense(const StateVector &s, const Gate &g) {
    const Matrix lifted = lift_gate(g, s.n_qubits());
    const auto dim = static_cast<Eigen::Index>(s.size());
    const Eigen::Map<const Vector> in(s.data(), dim);
    StateVector out(s.n_qubits());
    Eigen::Map<Vector>(out.data(), dim).noalias() = lifted * in;
    return out;
}

void register_backend(std::shared_ptr<const Backend> backend) {
    registry().add(std::move(backend));
}

void set_active_backend(std::string_view name) { registry().set_active(name); }

std::shared_ptr<const Backend> active_backend() { return registry().active(); }

std::shared_ptr<const Backend> get_backend(std::string_view name) {
    return registry().get(name);
}

std::string active_backend_name() { return registry().active_name(); }

std::vector<std::string> backend_names() { return registry().names(); }

ScopedBackend::ScopedBackend(std::string_view name) : previous_(active_backend_name()) {
    set_active_backend(name);
}

ScopedBackend::~ScopedBackend() {
    try {
        set_active_backend(previous_);
    } catch (const Error &) {
        // previous name came from an unregistered QSIM_BACKEND value
    }
}

} // namespace qsim
