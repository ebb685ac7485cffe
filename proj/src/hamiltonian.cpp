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
#include "qsim/hamiltonian.hpp"

#include "qsim/backends.hpp"
#include "qsim/error.hpp"
#include "qsim/kernels.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>

namespace qsim {

namespace {

void check_term(int n, const PauliTerm &term) {
    if (static_cast<int>(term.pauli.size()) != n) {
        throw Error(ErrorKind::Dimension, "term '" + term.pauli + "' does not act on " +
                                              std::to_string(n) + " qubits");
    }
    check_pauli_string(term.pauli);
    if (!std::isfinite(term.coefficient)) {
        throw Error(ErrorKind::InvalidArgument, "non-finite coefficient on '" + term.pauli + "'");
    }
}

std::string two_site(int n, int i, int j, char a, char b) {
    std::string p(static_cast<std::size_t>(n), 'I');
    p[static_cast<std::size_t>(i)] = a;
    p[static_cast<std::size_t>(j)] = b;
    return p;
}

std::string one_site(int n, int i, char a) {
    std::string p(static_cast<std::size_t>(n), 'I');
    p[static_cast<std::size_t>(i)] = a;
    return p;
}

// Nearest-neighbour bonds, periodic when n > 2.
std::vector<Edge> chain_bonds(int n) {
    std::vector<Edge> bonds;
    for (int i = 0; i + 1 < n; ++i) {
        bonds.emplace_back(i, i + 1);
    }
    if (n > 2) {
        bonds.emplace_back(n - 1, 0);
    }
    return bonds;
}

void require_coupled(int n, std::string_view model) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidSize,
                    std::string(model) + " needs at least 2 qubits, got " + std::to_string(n));
    }
}

double param_or(std::span<const double> params, double fallback) {
    if (params.size() > 1) {
        throw Error(ErrorKind::Arity, "expected at most one model parameter");
    }
    return params.empty() ? fallback : params[0];
}

} // namespace

LocalHamiltonian::LocalHamiltonian(int n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
    check_qubit_count(n_qubits);
    for (const PauliTerm &t : terms_) {
        check_term(n_qubits_, t);
    }
}

LocalHamiltonian &LocalHamiltonian::add(double coefficient, std::string pauli) {
    PauliTerm term{coefficient, std::move(pauli)};
    check_term(n_qubits_, term);
    terms_.push_back(std::move(term));
    return *this;
}

LocalHamiltonian LocalHamiltonian::scaled(double factor) const {
    LocalHamiltonian out = *this;
    for (PauliTerm &t : out.terms_) {
        t.coefficient *= factor;
    }
    return out;
}

LocalHamiltonian operator+(const LocalHamiltonian &a, const LocalHamiltonian &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw Error(ErrorKind::Dimension, "cannot add Hamiltonians on " +
                                              std::to_string(a.n_qubits()) + " and " +
                                              std::to_string(b.n_qubits()) + " qubits");
    }
    std::vector<PauliTerm> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return LocalHamiltonian(a.n_qubits(), std::move(terms));
}

LocalHamiltonian operator*(double factor, const LocalHamiltonian &h) { return h.scaled(factor); }

LocalHamiltonian interpolate(const LocalHamiltonian &h0, const LocalHamiltonian &h1, double s) {
    return (1.0 - s) * h0 + s * h1;
}

LocalHamiltonian pauli_field(char axis, int n, double coefficient) {
    if (axis != 'X' && axis != 'Y' && axis != 'Z') {
        throw Error(ErrorKind::InvalidArgument, std::string("field axis must be X, Y or Z, got '") +
                                                    axis + "'");
    }
    LocalHamiltonian h(n);
    for (int i = 0; i < n; ++i) {
        h.add(coefficient, one_site(n, i, axis));
    }
    return h;
}

LocalHamiltonian tfim(int n, double field) {
    require_coupled(n, "tfim");
    LocalHamiltonian h(n);
    for (const auto &[i, j] : chain_bonds(n)) {
        h.add(-1.0, two_site(n, i, j, 'Z', 'Z'));
    }
    for (int i = 0; i < n; ++i) {
        h.add(-field, one_site(n, i, 'X'));
    }
    return h;
}

LocalHamiltonian xxz(int n, double delta) {
    require_coupled(n, "xxz");
    LocalHamiltonian h(n);
    for (const auto &[i, j] : chain_bonds(n)) {
        h.add(1.0, two_site(n, i, j, 'X', 'X'));
        h.add(1.0, two_site(n, i, j, 'Y', 'Y'));
        h.add(delta, two_site(n, i, j, 'Z', 'Z'));
    }
    return h;
}

LocalHamiltonian maxcut(int n, std::span<const Edge> edges) {
    require_coupled(n, "maxcut");
    LocalHamiltonian h(n);
    std::vector<Edge> seen;
    for (const auto &[i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
            throw Error(ErrorKind::InvalidArgument, "invalid edge (" + std::to_string(i) + ", " +
                                                        std::to_string(j) + ") on " +
                                                        std::to_string(n) + " vertices");
        }
        const Edge key{std::min(i, j), std::max(i, j)};
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
            throw Error(ErrorKind::InvalidArgument, "duplicate edge (" + std::to_string(i) +
                                                        ", " + std::to_string(j) + ")");
        }
        seen.push_back(key);
    }
    if (!edges.empty()) {
        h.add(-0.5 * static_cast<double>(edges.size()), std::string(static_cast<std::size_t>(n), 'I'));
    }
    for (const auto &[i, j] : edges) {
        h.add(0.5, two_site(n, i, j, 'Z', 'Z'));
    }
    return h;
}

LocalHamiltonian precoded(std::string_view name, int n, std::span<const double> params,
                          std::span<const Edge> edges) {
    if (name == "pauli-field-x") return pauli_field('X', n, param_or(params, 1.0));
    if (name == "pauli-field-y") return pauli_field('Y', n, param_or(params, 1.0));
    if (name == "pauli-field-z") return pauli_field('Z', n, param_or(params, 1.0));
    if (name == "tfim") return tfim(n, param_or(params, 1.0));
    if (name == "xxz") return xxz(n, param_or(params, 1.0));
    if (name == "maxcut") return maxcut(n, edges);
    throw Error(ErrorKind::NotFound, "unknown model '" + std::string(name) + "'");
}

struct DenseHamiltonian::Cache {
    std::once_flag once;
    Spectrum spectrum;
};

DenseHamiltonian::DenseHamiltonian(Matrix matrix)
    : n_qubits_(0), matrix_(std::move(matrix)), cache_(std::make_shared<Cache>()) {
    const auto dim = static_cast<std::uint64_t>(matrix_.rows());
    if (matrix_.rows() != matrix_.cols() || dim < 2 || !std::has_single_bit(dim)) {
        throw Error(ErrorKind::Shape, "Hamiltonian must be square with power-of-two dimension");
    }
    n_qubits_ = std::countr_zero(dim);
    const double asymmetry = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
    if (asymmetry >= 1e-12) {
        throw Error(ErrorKind::Hermiticity,
                    "matrix is not Hermitian (max |H - H^dagger| = " + std::to_string(asymmetry) + ")");
    }
}

const Spectrum &DenseHamiltonian::spectrum() const {
    std::call_once(cache_->once, [this] {
        const Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_);
        if (solver.info() != Eigen::Success) {
            throw Error(ErrorKind::Numerical, "Hermitian eigendecomposition did not converge");
        }
        cache_->spectrum.values = solver.eigenvalues();
        cache_->spectrum.vectors = solver.eigenvectors();
    });
    return cache_->spectrum;
}

double DenseHamiltonian::ground_energy() const { return spectrum().values(0); }

StateVector DenseHamiltonian::ground_state() const {
    const Matrix &v = spectrum().vectors;
    return StateVector::from_amplitudes(
        std::span<const Complex>(v.col(0).data(), static_cast<std::size_t>(v.rows())));
}

DenseHamiltonian dense_from_local(const LocalHamiltonian &h) {
    const int n = h.n_qubits();
    if (n > kMaxDenseQubits) {
        throw Error(ErrorKind::Capacity, "dense Hamiltonians are limited to " +
                                             std::to_string(kMaxDenseQubits) + " qubits, got " +
                                             std::to_string(n));
    }
    const Index dim = Index{1} << n;
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const PauliTerm &t : h.terms()) {
        const auto masks = kernels::pauli_masks(n, t.pauli);
        const Complex scale = t.coefficient * kernels::i_power(masks.n_y);
        for (Index j = 0; j < dim; ++j) {
            const double sign = (std::popcount(j & masks.sign) & 1) ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(j ^ masks.flip), static_cast<Eigen::Index>(j)) += sign * scale;
        }
    }
    return DenseHamiltonian(std::move(m));
}

namespace {

double real_part_checked(Complex value) {
    if (std::abs(value.imag()) > 1e-10) {
        throw Error(ErrorKind::Hermiticity,
                    "expectation has imaginary residue " + std::to_string(value.imag()));
    }
    return value.real();
}

Eigen::Map<const Vector> as_vector(const StateVector &s) {
    return {s.data(), static_cast<Eigen::Index>(s.size())};
}

} // namespace

double expectation(const StateVector &s, const DenseHamiltonian &h) {
    if (s.n_qubits() != h.n_qubits()) {
        throw Error(ErrorKind::Dimension, "state and Hamiltonian sizes differ");
    }
    const auto psi = as_vector(s);
    return real_part_checked(psi.dot(h.matrix() * psi));
}

double expectation(const StateVector &s, const LocalHamiltonian &h) {
    if (s.n_qubits() != h.n_qubits()) {
        throw Error(ErrorKind::Dimension, "state and Hamiltonian sizes differ");
    }
    Complex total{0.0, 0.0};
    for (const PauliTerm &t : h.terms()) {
        total += t.coefficient * kernels::pauli_expectation(s, t.pauli);
    }
    return real_part_checked(total);
}

void apply_hamiltonian(const LocalHamiltonian &h, const StateVector &in, StateVector &out) {
    if (in.n_qubits() != h.n_qubits() || out.n_qubits() != h.n_qubits()) {
        throw Error(ErrorKind::Dimension, "state and Hamiltonian sizes differ");
    }
    const Complex *psi = in.data();
    Complex *phi = out.data();
    std::fill(phi, phi + out.size(), Complex{0.0, 0.0});
    for (const PauliTerm &t : h.terms()) {
        const auto masks = kernels::pauli_masks(h.n_qubits(), t.pauli);
        const Complex scale = t.coefficient * kernels::i_power(masks.n_y);
        for (Index j = 0; j < in.size(); ++j) {
            const Complex v = scale * psi[j];
            if (std::popcount(j & masks.sign) & 1) {
                phi[j ^ masks.flip] -= v;
            } else {
                phi[j ^ masks.flip] += v;
            }
        }
    }
}

StateVector exact_evolve(const DenseHamiltonian &h, double t, const StateVector &s) {
    if (s.n_qubits() != h.n_qubits()) {
        throw Error(ErrorKind::Dimension, "state and Hamiltonian sizes differ");
    }
    if (t == 0.0) {
        return s;
    }
    const Spectrum &spec = h.spectrum();
    Vector coeffs = spec.vectors.adjoint() * as_vector(s);
    for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
        coeffs(k) *= std::polar(1.0, -spec.values(k) * t);
    }
    const Vector out = spec.vectors * coeffs;
    return StateVector::from_amplitudes(std::span<const Complex>(out.data(), s.size()));
}

LocalHamiltonian parse_hamiltonian(std::string_view text) {
    using Reason = ParseError::Reason;
    std::vector<PauliTerm> terms;
    std::size_t line_no = 0;
    std::size_t width = 0;
    std::size_t first_line = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
        std::size_t pos = 0;
        const auto skip = [&] {
            while (pos < line.size() && blank(line[pos])) ++pos;
        };
        skip();
        if (pos == line.size()) {
            continue;
        }
        const std::size_t coeff_col = pos + 1;
        std::string number;
        if (line.substr(pos, 3) == "\xE2\x88\x92") {
            number = "-";
            pos += 3;
        }
        while (pos < line.size() && !blank(line[pos])) number += line[pos++];
        double value = 0.0;
        const char *first = number.data();
        const char *last = number.data() + number.size();
        if (number.size() > 1 && number[0] == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
            throw ParseError(Reason::Syntax, line_no, coeff_col,
                             "expected a coefficient, found '" + number + "'");
        }
        skip();
        const std::size_t pauli_col = pos + 1;
        std::string pauli;
        while (pos < line.size() && !blank(line[pos])) pauli += line[pos++];
        if (pauli.empty()) {
            throw ParseError(Reason::Syntax, line_no, pauli_col, "expected a Pauli string");
        }
        if (const auto bad = pauli.find_first_not_of("IXYZ"); bad != std::string::npos) {
            throw ParseError(Reason::Lexical, line_no, pauli_col + bad,
                             std::string("invalid Pauli symbol '") + pauli[bad] + "'");
        }
        skip();
        if (pos != line.size()) {
            throw ParseError(Reason::Syntax, line_no, pos + 1, "unexpected text after the term");
        }
        if (width == 0) {
            width = pauli.size();
            first_line = line_no;
        } else if (pauli.size() != width) {
            throw ParseError(Reason::Arity, line_no, pauli_col,
                             "Pauli string has " + std::to_string(pauli.size()) +
                                 " symbols, line " + std::to_string(first_line) + " has " +
                                 std::to_string(width));
        }
        terms.push_back({value, std::move(pauli)});
    }
    if (terms.empty()) {
        throw ParseError(Reason::Syntax, line_no == 0 ? 1 : line_no, 1, "no Hamiltonian terms");
    }
    if (static_cast<int>(width) > max_qubits()) {
        throw ParseError(Reason::Register, first_line, 1,
                         "Hamiltonian acts on " + std::to_string(width) + " qubits");
    }
    return LocalHamiltonian(static_cast<int>(width), std::move(terms));
}

LocalHamiltonian load_hamiltonian(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_hamiltonian(buffer.str());
}

std::string format_hamiltonian(const LocalHamiltonian &h) {
    std::string out;
    char number[40];
    for (const PauliTerm &t : h.terms()) {
        std::snprintf(number, sizeof number, "%.17g", t.coefficient);
        out += number;
        out += ' ';
        out += t.pauli;
        out += '\n';
    }
    return out;
}

} // namespace qsim
