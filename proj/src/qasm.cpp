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
#include "qsim/qasm.hpp"

#include "qsim/error.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace qsim::qasm {

namespace {

using Reason = ParseError::Reason;

enum class Tok {
    Ident,
    Integer,
    Real,
    String,
    Semicolon,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Plus,
    Minus,
    Star,
    Slash,
    Arrow,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::string describe(const Token &t) {
    return t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
}

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space_and_comments();
            if (pos_ >= src_.size()) {
                out.push_back({Tok::End, "", line_, col_});
                return out;
            }
            out.push_back(next());
        }
    }

  private:
    [[nodiscard]] char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
                c == '\v') {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else {
                return;
            }
        }
    }

    static bool is_ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
    }
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
    }
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    Token next() {
        const std::size_t line = line_;
        const std::size_t col = col_;
        const std::size_t start = pos_;
        const char c = peek();
        auto single = [&](Tok kind) {
            advance();
            return Token{kind, std::string(1, c), line, col};
        };
        if (is_ident_start(c)) {
            while (pos_ < src_.size() && is_ident_char(src_[pos_])) {
                advance();
            }
            return {Tok::Ident, std::string(src_.substr(start, pos_ - start)), line, col};
        }
        if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
            return number(line, col);
        }
        switch (c) {
        case ';':
            return single(Tok::Semicolon);
        case ',':
            return single(Tok::Comma);
        case '(':
            return single(Tok::LParen);
        case ')':
            return single(Tok::RParen);
        case '[':
            return single(Tok::LBracket);
        case ']':
            return single(Tok::RBracket);
        case '+':
            return single(Tok::Plus);
        case '*':
            return single(Tok::Star);
        case '/':
            return single(Tok::Slash);
        case '-':
            if (peek(1) == '>') {
                advance();
                advance();
                return {Tok::Arrow, "->", line, col};
            }
            return single(Tok::Minus);
        case '"': {
            advance();
            while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
                advance();
            }
            if (pos_ >= src_.size() || src_[pos_] != '"') {
                throw ParseError(Reason::Lexical, line, col, "unterminated string literal");
            }
            advance();
            return {Tok::String, std::string(src_.substr(start + 1, pos_ - start - 2)),
                    line, col};
        }
        default:
            break;
        }
        const auto byte = static_cast<unsigned char>(c);
        std::string shown;
        if (std::isprint(byte) != 0) {
            shown = std::string("'") + c + "'";
        } else {
            char buf[8];
            std::snprintf(buf, sizeof buf, "0x%02X", byte);
            shown = buf;
        }
        throw ParseError(Reason::Lexical, line, col, "unexpected character " + shown);
    }

    Token number(std::size_t line, std::size_t col) {
        const std::size_t start = pos_;
        bool real = false;
        while (is_digit(peek())) {
            advance();
        }
        if (peek() == '.') {
            real = true;
            advance();
            while (is_digit(peek())) {
                advance();
            }
        }
        if (peek() == 'e' || peek() == 'E') {
            const char after = peek(1);
            if (is_digit(after) ||
                ((after == '+' || after == '-') && is_digit(peek(2)))) {
                real = true;
                advance();
                if (peek() == '+' || peek() == '-') {
                    advance();
                }
                while (is_digit(peek())) {
                    advance();
                }
            }
        }
        if (is_ident_start(peek())) {
            throw ParseError(Reason::Lexical, line, col, "malformed number");
        }
        return {real ? Tok::Real : Tok::Integer,
                std::string(src_.substr(start, pos_ - start)), line, col};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

struct Argument {
    std::string reg;
    std::optional<std::uint64_t> index;
    const Token *at;
};

constexpr int kMaxExpressionDepth = 200;

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Circuit run() {
        if (at(Tok::Ident) && cur().text == "OPENQASM") {
            header();
        }
        while (!at(Tok::End)) {
            statement();
        }
        if (!circuit_) {
            throw ParseError(Reason::Register, cur().line, cur().column,
                             "program declares no quantum register");
        }
        finish_measurements();
        return std::move(*circuit_);
    }

  private:
    const Token &cur() const { return toks_[pos_]; }
    bool at(Tok kind) const { return cur().kind == kind; }

    const Token &take() {
        const Token &t = toks_[pos_];
        if (t.kind != Tok::End) {
            ++pos_;
        }
        return t;
    }

    const Token &expect(Tok kind, const char *what) {
        if (!at(kind)) {
            fail(Reason::Syntax, cur(),
                 std::string("expected ") + what + ", found " + describe(cur()));
        }
        return take();
    }

    [[noreturn]] static void fail(Reason reason, const Token &t, const std::string &msg) {
        throw ParseError(reason, t.line, t.column, msg);
    }

    static std::uint64_t to_integer(const Token &t) {
        errno = 0;
        char *end = nullptr;
        const unsigned long long value = std::strtoull(t.text.c_str(), &end, 10);
        if (errno == ERANGE || end == t.text.c_str() || *end != '\0') {
            fail(Reason::Lexical, t, "integer literal out of range");
        }
        return value;
    }

    void header() {
        const Token &kw = take();
        const Token &version = cur();
        if (!at(Tok::Real) && !at(Tok::Integer)) {
            fail(Reason::Syntax, version, "expected version number after OPENQASM");
        }
        take();
        if (version.text != "2.0" && version.text != "2") {
            fail(Reason::Syntax, version, "unsupported OPENQASM version " + version.text);
        }
        expect(Tok::Semicolon, "';'");
        (void)kw;
    }

    void statement() {
        const Token &head = cur();
        if (!at(Tok::Ident)) {
            fail(Reason::Syntax, head, "expected a statement, found " + describe(head));
        }
        const std::string &word = head.text;
        if (word == "OPENQASM") {
            fail(Reason::Syntax, head, "version header must be the first statement");
        } else if (word == "include") {
            take();
            expect(Tok::String, "file name string");
            expect(Tok::Semicolon, "';'");
        } else if (word == "qreg") {
            qreg();
        } else if (word == "creg") {
            creg();
        } else if (word == "barrier") {
            take();
            arguments();
            expect(Tok::Semicolon, "';'");
        } else if (word == "measure") {
            measure();
        } else if (word == "gate" || word == "opaque" || word == "if" ||
                   word == "reset") {
            fail(Reason::Syntax, head, "'" + word + "' statements are not supported");
        } else {
            gate_application();
        }
    }

    std::pair<std::uint64_t, const Token *> declaration_size(const char *what) {
        expect(Tok::LBracket, "'['");
        const Token &size_tok = expect(Tok::Integer, "register size");
        const std::uint64_t size = to_integer(size_tok);
        expect(Tok::RBracket, "']'");
        expect(Tok::Semicolon, "';'");
        if (size == 0) {
            fail(Reason::Register, size_tok, std::string(what) + " size must be positive");
        }
        return {size, &size_tok};
    }

    void qreg() {
        const Token &kw = take();
        const Token &name = expect(Tok::Ident, "register name");
        const auto [size, size_tok] = declaration_size("qreg");
        if (circuit_) {
            fail(Reason::Register, kw, "only one quantum register is supported");
        }
        if (cregs_.contains(name.text)) {
            fail(Reason::Register, name, "register '" + name.text + "' already declared");
        }
        if (size > static_cast<std::uint64_t>(max_qubits())) {
            fail(Reason::Register, *size_tok,
                 "qreg size " + size_tok->text + " exceeds the maximum of " +
                     std::to_string(max_qubits()) + " qubits");
        }
        qreg_name_ = name.text;
        circuit_.emplace(static_cast<int>(size));
    }

    void creg() {
        take();
        const Token &name = expect(Tok::Ident, "register name");
        const std::uint64_t size = declaration_size("creg").first;
        if (cregs_.contains(name.text) || name.text == qreg_name_) {
            fail(Reason::Register, name, "register '" + name.text + "' already declared");
        }
        cregs_.emplace(name.text, Creg{creg_offset_, size});
        creg_offset_ += size;
    }

    Argument argument() {
        const Token &name = expect(Tok::Ident, "register name");
        Argument arg{name.text, std::nullopt, &name};
        if (at(Tok::LBracket)) {
            take();
            const Token &idx = expect(Tok::Integer, "index");
            arg.index = to_integer(idx);
            arg.at = &idx;
            expect(Tok::RBracket, "']'");
        }
        return arg;
    }

    std::vector<Argument> arguments() {
        std::vector<Argument> args{argument()};
        while (at(Tok::Comma)) {
            take();
            args.push_back(argument());
        }
        return args;
    }

    Circuit &require_qreg(const Token &t) {
        if (!circuit_) {
            fail(Reason::Register, t, "no quantum register declared before use");
        }
        return *circuit_;
    }

    /// Resolves a quantum argument to qubit indices (whole register -> all).
    std::vector<Qubit> qubits_of(const Argument &arg) {
        Circuit &c = require_qreg(*arg.at);
        if (arg.reg != qreg_name_) {
            fail(Reason::Register, *arg.at, "unknown quantum register '" + arg.reg + "'");
        }
        if (!arg.index) {
            std::vector<Qubit> all(static_cast<std::size_t>(c.n_qubits()));
            for (int q = 0; q < c.n_qubits(); ++q) {
                all[static_cast<std::size_t>(q)] = q;
            }
            return all;
        }
        if (*arg.index >= static_cast<std::uint64_t>(c.n_qubits())) {
            fail(Reason::OutOfRange, *arg.at,
                 "qubit index " + std::to_string(*arg.index) + " out of range for " +
                     arg.reg + "[" + std::to_string(c.n_qubits()) + "]");
        }
        return {static_cast<Qubit>(*arg.index)};
    }

    void measure() {
        const Token &kw = take();
        const Argument qarg = argument();
        expect(Tok::Arrow, "'->'");
        const Argument carg = argument();
        expect(Tok::Semicolon, "';'");
        const std::vector<Qubit> qubits = qubits_of(qarg);
        auto it = cregs_.find(carg.reg);
        if (it == cregs_.end()) {
            fail(Reason::Register, *carg.at, "unknown classical register '" + carg.reg + "'");
        }
        const Creg &reg = it->second;
        std::vector<std::uint64_t> bits;
        if (carg.index) {
            if (*carg.index >= reg.size) {
                fail(Reason::OutOfRange, *carg.at,
                     "bit index " + std::to_string(*carg.index) + " out of range for " +
                         carg.reg + "[" + std::to_string(reg.size) + "]");
            }
            bits.push_back(reg.offset + *carg.index);
        } else {
            for (std::uint64_t b = 0; b < reg.size; ++b) {
                bits.push_back(reg.offset + b);
            }
        }
        if (bits.size() != qubits.size()) {
            fail(Reason::Arity, kw, "measure maps " + std::to_string(qubits.size()) +
                                        " qubit(s) onto " + std::to_string(bits.size()) +
                                        " bit(s)");
        }
        for (std::size_t k = 0; k < qubits.size(); ++k) {
            for (const auto &[bit, qubit] : measurements_) {
                if (bit == bits[k]) {
                    fail(Reason::Register, *carg.at, "classical bit written twice");
                }
                if (qubit == qubits[k]) {
                    fail(Reason::Register, *qarg.at,
                         "qubit " + std::to_string(qubits[k]) + " measured twice");
                }
            }
            measurements_.emplace_back(bits[k], qubits[k]);
        }
    }

    void finish_measurements() {
        std::sort(measurements_.begin(), measurements_.end());
        std::vector<Qubit> order;
        for (const auto &entry : measurements_) {
            order.push_back(entry.second);
        }
        circuit_->measure(order);
    }

    double expression(int depth) {
        double value = term(depth);
        while (at(Tok::Plus) || at(Tok::Minus)) {
            const bool plus = take().kind == Tok::Plus;
            const double rhs = term(depth);
            value = plus ? value + rhs : value - rhs;
        }
        return value;
    }

    double term(int depth) {
        double value = unary(depth);
        while (at(Tok::Star) || at(Tok::Slash)) {
            const Token &op = take();
            const double rhs = unary(depth);
            if (op.kind == Tok::Star) {
                value *= rhs;
            } else {
                if (rhs == 0.0) {
                    fail(Reason::Expression, op, "division by zero");
                }
                value /= rhs;
            }
        }
        return value;
    }

    double unary(int depth) {
        if (depth > kMaxExpressionDepth) {
            fail(Reason::Expression, cur(), "expression nested too deeply");
        }
        if (at(Tok::Minus)) {
            take();
            return -unary(depth + 1);
        }
        if (at(Tok::Plus)) {
            take();
            return unary(depth + 1);
        }
        return primary(depth);
    }

    double primary(int depth) {
        const Token &t = cur();
        switch (t.kind) {
        case Tok::Integer:
        case Tok::Real: {
            take();
            errno = 0;
            const double value = std::strtod(t.text.c_str(), nullptr);
            if (errno == ERANGE || !std::isfinite(value)) {
                fail(Reason::Expression, t, "numeric literal out of range");
            }
            return value;
        }
        case Tok::Ident:
            if (t.text == "pi") {
                take();
                return kPi;
            }
            fail(Reason::Expression, t, "unknown identifier '" + t.text + "' in expression");
        case Tok::LParen: {
            take();
            const double value = expression(depth + 1);
            expect(Tok::RParen, "')'");
            return value;
        }
        default:
            fail(Reason::Expression, t, "expected an angle expression, found " + describe(t));
        }
    }

    void gate_application() {
        const Token &name = take();
        const auto resolved = resolve_gate_name(name.text);
        if (!resolved || resolved->kind == GateKind::Unitary) {
            fail(Reason::UnknownGate, name, "unknown gate '" + name.text + "'");
        }
        std::vector<double> params;
        if (at(Tok::LParen)) {
            take();
            if (!at(Tok::RParen)) {
                params.push_back(checked_expression());
                while (at(Tok::Comma)) {
                    take();
                    params.push_back(checked_expression());
                }
            }
            expect(Tok::RParen, "')'");
        }
        const std::vector<Argument> args = arguments();
        expect(Tok::Semicolon, "';'");

        const GateInfo &info = gate_info(resolved->kind);
        if (static_cast<int>(params.size()) != info.n_params) {
            fail(Reason::Arity, name, "gate '" + name.text + "' takes " +
                                          std::to_string(info.n_params) +
                                          " angle(s), got " + std::to_string(params.size()));
        }
        const int expected_args = resolved->n_controls + info.n_targets;
        if (static_cast<int>(args.size()) != expected_args) {
            fail(Reason::Arity, name, "gate '" + name.text + "' takes " +
                                          std::to_string(expected_args) +
                                          " qubit argument(s), got " +
                                          std::to_string(args.size()));
        }

        // A single whole-register argument broadcasts a one-qubit gate.
        std::vector<std::vector<Qubit>> applications;
        if (expected_args == 1 && !args[0].index) {
            for (const Qubit q : qubits_of(args[0])) {
                applications.push_back({q});
            }
        } else {
            std::vector<Qubit> qubits;
            for (const Argument &arg : args) {
                if (!arg.index) {
                    fail(Reason::Syntax, *arg.at,
                         "register broadcast is only supported for one-qubit gates");
                }
                qubits.push_back(qubits_of(arg).front());
            }
            applications.push_back(std::move(qubits));
        }

        Circuit &c = require_qreg(name);
        for (const auto &qubits : applications) {
            for (const Qubit q : qubits) {
                for (const auto &entry : measurements_) {
                    if (entry.second == q) {
                        fail(Reason::Syntax, name,
                             "gate on qubit " + std::to_string(q) +
                                 " after its measurement is not supported");
                    }
                }
            }
            const auto split = qubits.begin() + resolved->n_controls;
            std::vector<Qubit> controls(qubits.begin(), split);
            std::vector<Qubit> targets(split, qubits.end());
            try {
                c.add(Gate(resolved->kind, std::move(targets), std::move(controls), params));
            } catch (const Error &e) {
                fail(Reason::Arity, name, e.what());
            }
        }
    }

    double checked_expression() {
        const Token &start = cur();
        const double value = expression(0);
        if (!std::isfinite(value)) {
            fail(Reason::Expression, start, "angle expression is not finite");
        }
        return value;
    }

    struct Creg {
        std::uint64_t offset;
        std::uint64_t size;
    };

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::optional<Circuit> circuit_;
    std::string qreg_name_;
    std::map<std::string, Creg> cregs_;
    std::uint64_t creg_offset_ = 0;
    std::vector<std::pair<std::uint64_t, Qubit>> measurements_; // (bit, qubit)
};

std::string format_angle(double value, const Gate &g) {
    if (!std::isfinite(value)) {
        throw Error(ErrorKind::Serialization,
                    "gate '" + g.label() + "' has a non-finite angle");
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

} // namespace

Circuit parse(std::string_view text) {
    Lexer lexer(text);
    Parser parser(lexer.run());
    return parser.run();
}

Circuit parse_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

std::string serialize(const Circuit &c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << c.n_qubits() << "];\n";
    const auto &measured = c.measured_qubits();
    if (!measured.empty()) {
        out << "creg c[" << measured.size() << "];\n";
    }
    for (const Gate &g : c.gates()) {
        const std::string name = g.name();
        if (name.empty()) {
            throw Error(ErrorKind::Serialization,
                        "gate '" + g.label() + "' with " +
                            std::to_string(g.controls().size()) +
                            " control(s) has no QASM representation");
        }
        out << name;
        if (g.is_parameterized()) {
            out << '(';
            for (std::size_t k = 0; k < g.params().size(); ++k) {
                out << (k == 0 ? "" : ",") << format_angle(g.params()[k], g);
            }
            out << ')';
        }
        const std::vector<Qubit> qubits = g.qubits();
        for (std::size_t k = 0; k < qubits.size(); ++k) {
            out << (k == 0 ? " " : ", ") << "q[" << qubits[k] << ']';
        }
        out << ";\n";
    }
    for (std::size_t k = 0; k < measured.size(); ++k) {
        out << "measure q[" << measured[k] << "] -> c[" << k << "];\n";
    }
    return out.str();
}

} // namespace qsim::qasm
