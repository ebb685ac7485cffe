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
#include "cli.hpp"

#include "qsim/backends.hpp"
#include "qsim/circuit.hpp"
#include "qsim/error.hpp"
#include "qsim/evolution.hpp"
#include "qsim/hamiltonian.hpp"
#include "qsim/kernels.hpp"
#include "qsim/models.hpp"
#include "qsim/qasm.hpp"
#include "qsim/random.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace qsim::cli {
namespace {

using json = nlohmann::ordered_json;
using ordered_json = nlohmann::ordered_json;

/// Bad flags or config fields; always exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Highest reference-checked register in bench.
constexpr int kCheckedQubits = 10;

std::shared_ptr<const Backend> resolve_backend(const std::string &flag) {
    std::string name = flag;
    if (name.empty()) {
        const char *env = std::getenv("QSIM_BACKEND");
        name = (env != nullptr && *env != '\0') ? env : active_backend_name();
    }
    try {
        return get_backend(name);
    } catch (const Error &) {
        throw UsageError("unknown backend '" + name + "'");
    }
}

// ---------------------------------------------------------------------------
// Config access with field-naming diagnostics.

class Fields {
  public:
    Fields(const json &doc, std::string prefix) : doc_(doc), prefix_(std::move(prefix)) {
        if (!doc_.is_object()) {
            throw UsageError(where() + " must be a JSON object");
        }
    }

    [[nodiscard]] bool has(const char *key) const { return doc_.contains(key); }

    [[nodiscard]] const json &at(const char *key) const {
        if (!doc_.contains(key)) {
            throw UsageError("missing required field '" + name(key) + "'");
        }
        return doc_.at(key);
    }

    [[nodiscard]] Fields object(const char *key) const { return {at(key), name(key)}; }

    [[nodiscard]] double number(const char *key) const {
        const json &v = at(key);
        if (!v.is_number()) throw UsageError("field '" + name(key) + "' must be a number");
        return v.get<double>();
    }
    [[nodiscard]] double number(const char *key, double fallback) const {
        return has(key) ? number(key) : fallback;
    }

    [[nodiscard]] long long integer(const char *key, long long lo = 0) const {
        const json &v = at(key);
        if (!v.is_number_integer() || v.get<long long>() < lo) {
            throw UsageError("field '" + name(key) + "' must be an integer >= " +
                             std::to_string(lo));
        }
        return v.get<long long>();
    }
    [[nodiscard]] long long integer(const char *key, long long fallback, long long lo) const {
        return has(key) ? integer(key, lo) : fallback;
    }

    [[nodiscard]] std::string string(const char *key) const {
        const json &v = at(key);
        if (!v.is_string()) throw UsageError("field '" + name(key) + "' must be a string");
        return v.get<std::string>();
    }
    [[nodiscard]] std::string string(const char *key, std::string fallback) const {
        return has(key) ? string(key) : std::move(fallback);
    }

    [[nodiscard]] std::vector<double> numbers(const char *key) const {
        const json &v = at(key);
        if (!v.is_array() || !std::all_of(v.begin(), v.end(),
                                          [](const json &x) { return x.is_number(); })) {
            throw UsageError("field '" + name(key) + "' must be an array of numbers");
        }
        return v.get<std::vector<double>>();
    }

    [[nodiscard]] std::vector<long long> integers(const char *key) const {
        const json &v = at(key);
        if (!v.is_array() ||
            !std::all_of(v.begin(), v.end(), [](const json &x) {
                return x.is_number_integer() && x.get<long long>() >= 0;
            })) {
            throw UsageError("field '" + name(key) + "' must be an array of non-negative integers");
        }
        return v.get<std::vector<long long>>();
    }

    [[nodiscard]] std::string name(const char *key) const {
        return prefix_.empty() ? key : prefix_ + "." + key;
    }

  private:
    [[nodiscard]] std::string where() const { return prefix_.empty() ? "config" : prefix_; }

    const json &doc_;
    std::string prefix_;
};

int qubit_count(const Fields &f, const char *key) {
    const long long n = f.integer(key, 1);
    if (n > 30) throw UsageError("field '" + f.name(key) + "' must be at most 30");
    return static_cast<int>(n);
}

// {"model": name, "n": int, "params": [...], "edges": [[i, j], ...]} or {"file": path}.
LocalHamiltonian hamiltonian_from(const Fields &f) {
    if (f.has("file")) {
        return load_hamiltonian(f.string("file"));
    }
    const std::string model = f.string("model");
    const int n = qubit_count(f, "n");
    std::vector<double> params = f.has("params") ? f.numbers("params") : std::vector<double>{};
    std::vector<Edge> edges;
    if (f.has("edges")) {
        const json &list = f.at("edges");
        const auto bad = [&] {
            return UsageError("field '" + f.name("edges") + "' must be a list of [i, j] pairs");
        };
        if (!list.is_array()) throw bad();
        for (const json &e : list) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer()) {
                throw bad();
            }
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    try {
        return precoded(model, n, params, edges);
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::NotFound) {
            throw UsageError("field '" + f.name("model") + "': " + e.what());
        }
        throw;
    }
}

OptimizerSpec optimizer_from(const Fields &root) {
    OptimizerSpec spec;
    if (!root.has("optimizer")) return spec;
    const Fields f = root.object("optimizer");
    if (f.has("method")) {
        try {
            spec.method = parse_optimizer_method(f.string("method"));
        } catch (const Error &) {
            throw UsageError("field '" + f.name("method") +
                             "' must be simplex, evolution-strategy or parameter-shift-descent");
        }
    }
    spec.budget = static_cast<std::size_t>(f.integer("budget", 1000, 1));
    spec.seed = static_cast<std::uint64_t>(f.integer("seed", 0, 0));
    spec.tolerance = f.number("tolerance", spec.tolerance);
    spec.initial_step = f.number("initial_step", spec.initial_step);
    spec.learning_rate = f.number("learning_rate", spec.learning_rate);
    return spec;
}

double fidelity(const StateVector &a, const StateVector &b) { return std::norm(overlap(a, b)); }

std::optional<double> dense_ground_energy(const LocalHamiltonian &h) {
    if (h.n_qubits() > kMaxDenseQubits) return std::nullopt;
    return dense_from_local(h).ground_energy();
}

ordered_json or_null(std::optional<double> v) { return v ? ordered_json(*v) : ordered_json(); }

// ---------------------------------------------------------------------------
// Demos

ordered_json demo_vqe(const Fields &f) {
    const LocalHamiltonian h = hamiltonian_from(f.object("hamiltonian"));
    const AnsatzSpec ansatz{h.n_qubits(), static_cast<int>(f.integer("depth", 1))};
    std::optional<std::vector<double>> theta0;
    if (f.has("theta0")) theta0 = f.numbers("theta0");
    const VqeResult r = vqe(h, ansatz, optimizer_from(f), theta0);
    ordered_json out;
    out["energy"] = r.energy;
    out["ground_energy"] = or_null(dense_ground_energy(h));
    out["theta"] = r.theta;
    out["evaluations"] = r.evaluations;
    out["converged"] = r.converged;
    return out;
}

ordered_json demo_qaoa(const Fields &f) {
    const LocalHamiltonian hp = hamiltonian_from(f.object("hamiltonian"));
    const int p = static_cast<int>(f.integer("p", 1));
    std::optional<std::vector<double>> params0;
    if (f.has("params0")) params0 = f.numbers("params0");
    const QaoaResult r = qaoa_optimize(hp, p, optimizer_from(f), params0);
    ordered_json out;
    out["energy"] = r.energy;
    out["ground_energy"] = or_null(dense_ground_energy(hp));
    out["params"] = r.params;
    out["evaluations"] = r.evaluations;
    out["converged"] = r.converged;
    return out;
}

ordered_json demo_adiabatic(const Fields &f) {
    const LocalHamiltonian h1 = hamiltonian_from(f.object("hamiltonian"));
    const LocalHamiltonian h0 = f.has("initial_hamiltonian")
                                    ? hamiltonian_from(f.object("initial_hamiltonian"))
                                    : pauli_field('X', h1.n_qubits(), -1.0);
    const double total = f.number("T");
    const double dt = f.number("dt", 0.05);
    EvolutionOptions opts;
    opts.record_energy = false;
    if (f.has("solver")) {
        try {
            opts.solver = parse_solver(f.string("solver"));
        } catch (const Error &) {
            throw UsageError("field '" + f.name("solver") + "' must be exact, rk4 or trotter");
        }
    }
    std::vector<double> lambda;
    if (f.has("schedule")) lambda = f.numbers("schedule");
    const Schedule schedule = Schedule::polynomial(lambda);

    const EvolutionResult r = adiabatic_evolve(h0, h1, schedule, total, dt, opts);
    const DenseHamiltonian target = dense_from_local(h1);
    ordered_json out;
    out["fidelity"] = fidelity(r.state, target.ground_state());
    out["final_energy"] = expectation(r.state, h1);
    out["ground_energy"] = target.ground_energy();
    out["steps"] = static_cast<long long>(std::ceil(total / dt - 1e-9));
    return out;
}

ordered_json demo_falqon(const Fields &f) {
    const LocalHamiltonian hp = hamiltonian_from(f.object("hamiltonian"));
    const LocalHamiltonian hm = f.has("mixer") ? hamiltonian_from(f.object("mixer"))
                                               : pauli_field('X', hp.n_qubits());
    const FalqonResult r =
        falqon(hp, hm, f.number("dt"), static_cast<int>(f.integer("steps", 1)));
    ordered_json out;
    out["final_energy"] = r.energies.back();
    out["ground_energy"] = or_null(dense_ground_energy(hp));
    out["monotone"] = r.monotone;
    out["betas"] = r.betas;
    out["energies"] = r.energies;
    out["warnings"] = r.warnings;
    return out;
}

ordered_json demo_grover(const Fields &f) {
    const int n = qubit_count(f, "n");
    std::vector<Index> marked;
    for (const long long m : f.integers("marked")) marked.push_back(static_cast<Index>(m));
    std::optional<int> iterations;
    if (f.has("iterations")) iterations = static_cast<int>(f.integer("iterations", 0));
    const auto shots = static_cast<std::uint64_t>(f.integer("shots", 10000, 1));
    const auto seed = static_cast<std::uint64_t>(f.integer("seed", 0, 0));

    const GroverCircuit g = grover(n, marked, iterations);
    ExecutionOptions opts;
    opts.nshots = shots;
    opts.seed = seed;
    const ExecutionResult r = execute(g.circuit, std::move(opts));
    const double simulated = marked_probability(*r.final_state, marked);
    std::uint64_t hits = 0;
    for (const Index m : marked) {
        const auto it = r.counts.find(to_bitstring(m, n));
        if (it != r.counts.end()) hits += it->second;
    }
    const double empirical = static_cast<double>(hits) / static_cast<double>(shots);
    const double sigma =
        std::sqrt(g.predicted_success * (1.0 - g.predicted_success) / static_cast<double>(shots));
    ordered_json out;
    out["iterations"] = g.iterations;
    out["predicted_success"] = g.predicted_success;
    out["simulated_success"] = simulated;
    out["empirical_success"] = empirical;
    out["shots"] = shots;
    out["sigma"] = sigma;
    out["within_3_sigma"] = std::abs(empirical - g.predicted_success) <= 3.0 * sigma + 1e-12;
    return out;
}

// ---------------------------------------------------------------------------
// Benchmark circuits

Circuit random_layered(int n, int layers, std::uint64_t seed) {
    Rng rng(seed);
    Circuit c(n);
    for (int layer = 0; layer < layers; ++layer) {
        for (Qubit q = 0; q < n; ++q) {
            const double angle = rng.uniform(-kPi, kPi);
            switch (rng.below(3)) {
            case 0: c.add(gates::rx(q, angle)); break;
            case 1: c.add(gates::ry(q, angle)); break;
            default: c.add(gates::rz(q, angle)); break;
            }
        }
        for (Qubit q = 0; q + 1 < n; ++q) c.add(gates::cz(q, q + 1));
    }
    return c;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

// ---------------------------------------------------------------------------
// Subcommands

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> items;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

int cmd_run(const std::string &path, const std::string &backend_flag, std::uint64_t nshots,
            std::uint64_t seed, const std::string &init_path, const std::string &save_path,
            bool as_json, bool timing, std::ostream &out) {
    const Circuit c = qasm::parse_file(path);
    ExecutionOptions opts;
    opts.backend = resolve_backend(backend_flag);
    opts.nshots = nshots;
    opts.seed = seed;
    opts.keep_state = !save_path.empty();
    if (!init_path.empty()) opts.initial = load_state(init_path);
    const ExecutionResult r = execute(c, std::move(opts));
    if (!save_path.empty()) save_state(save_path, *r.final_state);

    if (as_json) {
        out << to_json(r, timing).dump() << '\n';
        return kExitOk;
    }
    const int width = static_cast<int>(r.measured_qubits.size());
    out << "qubits " << r.n_qubits << ", measured " << width << '\n';
    for (std::size_t i = 0; i < r.probabilities.size(); ++i) {
        if (r.probabilities[i] == 0.0) continue;
        const std::string bits = to_bitstring(i, width);
        out << bits << "  p=" << r.probabilities[i];
        const auto it = r.counts.find(bits);
        if (it != r.counts.end()) out << "  count=" << it->second;
        out << '\n';
    }
    if (timing) out << "elapsed_s " << r.elapsed_s << '\n';
    return kExitOk;
}

} // namespace

nlohmann::ordered_json bench(const BenchOptions &options) {
    if (options.family != "qft" && options.family != "random-layered") {
        throw UsageError("unknown circuit family '" + options.family + "'");
    }
    if (options.repeats < 3) throw UsageError("--repeats must be at least 3");
    if (options.qubits.empty()) throw UsageError("--qubits needs at least one size");
    std::vector<std::shared_ptr<const Backend>> backends;
    for (const std::string &name : options.backends) backends.push_back(resolve_backend(name));
    if (backends.empty()) backends.push_back(resolve_backend(""));

    ordered_json report;
    report["family"] = options.family;
    report["repeats"] = options.repeats;
    report["seed"] = options.seed;
    if (options.family == "random-layered") report["layers"] = options.layers;
    report["rows"] = ordered_json::array();

    const auto reference = get_backend("reference");
    for (const int n : options.qubits) {
        if (n < 1 || n > 30) throw UsageError("qubit counts must lie in [1, 30]");
        const Circuit c = options.family == "qft" ? qft_circuit(n)
                                                   : random_layered(n, options.layers, options.seed);
        std::optional<StateVector> expected;
        for (const auto &backend : backends) {
            ordered_json row;
            row["backend"] = backend->name();
            row["family"] = options.family;
            row["n_qubits"] = n;
            if (n > backend->max_qubits()) {
                row["status"] = "skipped";
                row["reason"] = "capacity";
                report["rows"].push_back(std::move(row));
                continue;
            }
            // Warm-up doubles as the correctness run.
            StateVector state = backend->initial_state(n);
            run(c, state, *backend);
            std::optional<bool> correct;
            if (n <= kCheckedQubits) {
                if (!expected) {
                    expected.emplace(reference->initial_state(n));
                    run(c, *expected, *reference);
                }
                correct = max_abs_diff(state, *expected) < 1e-10;
            }
            row["correct"] = correct ? ordered_json(*correct) : ordered_json();
            if (correct == false) {
                row["status"] = "invalid";
                row["reason"] = "state differs from the reference backend";
                report["rows"].push_back(std::move(row));
                continue;
            }
            std::vector<double> times;
            std::size_t allocations = 0;
            const std::size_t full = std::size_t{1} << n;
            for (int rep = 0; rep < options.repeats; ++rep) {
                AllocationTracker::reset();
                const auto start = std::chrono::steady_clock::now();
                StateVector s = backend->initial_state(n);
                run(c, s, *backend);
                times.push_back(
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count());
                allocations = std::max(allocations, AllocationTracker::count_at_least(full));
            }
            row["status"] = "ok";
            row["median_s"] = median(times);
            row["times_s"] = times;
            row["state_allocations"] = allocations;
            report["rows"].push_back(std::move(row));
        }
    }
    return report;
}

nlohmann::ordered_json demo(const std::string &name, const nlohmann::ordered_json &config) {
    const Fields f(config, "");
    ordered_json result;
    if (name == "vqe") {
        result = demo_vqe(f);
    } else if (name == "qaoa") {
        result = demo_qaoa(f);
    } else if (name == "adiabatic") {
        result = demo_adiabatic(f);
    } else if (name == "falqon") {
        result = demo_falqon(f);
    } else if (name == "grover") {
        result = demo_grover(f);
    } else {
        throw UsageError("unknown demo '" + name + "'");
    }
    ordered_json out;
    out["demo"] = name;
    out["config"] = config;
    out["result"] = std::move(result);
    return out;
}

int main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"qsim: state-vector quantum circuit simulator"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "Worker threads for the kernels (0 keeps the default)")
        ->check(CLI::NonNegativeNumber);

    auto *run_cmd = app.add_subcommand("run", "Execute an OpenQASM file");
    std::string path;
    std::string backend_flag;
    std::uint64_t nshots = 0;
    std::uint64_t seed = 0;
    std::string init_path;
    std::string save_path;
    bool as_json = false;
    bool timing = false;
    run_cmd->add_option("circuit", path, "OpenQASM 2.0 file")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--backend", backend_flag, "Backend name (default: QSIM_BACKEND or kernel)");
    run_cmd->add_option("--nshots", nshots, "Number of samples");
    run_cmd->add_option("--seed", seed, "Sampling seed");
    run_cmd->add_option("--init-state", init_path, "Initial state file")->check(CLI::ExistingFile);
    run_cmd->add_option("--save-state", save_path, "Write the final state to this file");
    run_cmd->add_flag("--json", as_json, "Print the result as JSON");
    run_cmd->add_flag("--timing", timing, "Include wall-clock time in the output");

    auto *bench_cmd = app.add_subcommand("bench", "Benchmark backends on a circuit family");
    BenchOptions bench_opts;
    std::string qubit_list = "4,8";
    std::string backend_list;
    std::string out_path;
    bench_cmd->add_option("--family", bench_opts.family, "qft or random-layered");
    bench_cmd->add_option("--qubits", qubit_list, "Comma separated qubit counts");
    bench_cmd->add_option("--backends", backend_list, "Comma separated backend names");
    bench_cmd->add_option("--repeats", bench_opts.repeats, "Timed repeats per row (>= 3)");
    bench_cmd->add_option("--layers", bench_opts.layers, "Layers for random-layered");
    bench_cmd->add_option("--seed", bench_opts.seed, "Seed for random-layered");
    bench_cmd->add_option("--out", out_path, "Report file (stdout when omitted)");

    auto *demo_cmd = app.add_subcommand("demo", "Run a model demo from a JSON config");
    std::string demo_name;
    std::string config_path;
    demo_cmd->add_option("name", demo_name, "vqe, qaoa, adiabatic, falqon or grover")
        ->required()
        ->check(CLI::IsMember({"vqe", "qaoa", "adiabatic", "falqon", "grover"}));
    demo_cmd->add_option("--config", config_path, "JSON config file")
        ->required()
        ->check(CLI::ExistingFile);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        std::optional<kernels::ScopedThreads> scoped;
        if (threads > 0) scoped.emplace(threads);
        if (*run_cmd) {
            return cmd_run(path, backend_flag, nshots, seed, init_path, save_path, as_json,
                           timing, out);
        }
        if (*bench_cmd) {
            for (const std::string &item : split_list(qubit_list)) {
                try {
                    std::size_t used = 0;
                    bench_opts.qubits.push_back(std::stoi(item, &used));
                    if (used != item.size()) throw std::invalid_argument(item);
                } catch (const std::logic_error &) {
                    throw UsageError("--qubits: '" + item + "' is not an integer");
                }
            }
            bench_opts.backends = split_list(backend_list);
            const ordered_json report = bench(bench_opts);
            if (out_path.empty()) {
                out << report.dump(2) << '\n';
            } else {
                std::ofstream file(out_path);
                if (!(file << report.dump(2) << '\n')) {
                    throw Error(ErrorKind::Io, "cannot write " + out_path);
                }
            }
            return kExitOk;
        }
        std::ifstream file(config_path);
        json config;
        try {
            config = json::parse(file);
        } catch (const json::parse_error &e) {
            err << "error: " << config_path << ": " << e.what() << '\n';
            return kExitParse;
        }
        out << demo(demo_name, config).dump(2) << '\n';
        return kExitOk;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError &e) {
        err << "error: " << (path.empty() ? "" : path + ":") << e.what() << '\n';
        return kExitParse;
    } catch (const Error &e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return kExitExecution;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitExecution;
    }
}

} // namespace qsim::cli
