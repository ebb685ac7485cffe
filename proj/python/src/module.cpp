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
// Python bindings. Errors surface as qsim.QsimError (with a `kind`) and
// qsim.ParseError (with `reason`, `line`, `column`).
#include "qsim/backends.hpp"
#include "qsim/circuit.hpp"
#include "qsim/error.hpp"
#include "qsim/evolution.hpp"
#include "qsim/hamiltonian.hpp"
#include "qsim/kernels.hpp"
#include "qsim/models.hpp"
#include "qsim/optimizers.hpp"
#include "qsim/qasm.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qsim;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexArray to_numpy(const StateVector &s) {
    return ComplexArray(static_cast<py::ssize_t>(s.size()), s.data());
}

StateVector from_numpy(const ComplexArray &a) {
    if (a.ndim() != 1) throw Error(ErrorKind::Shape, "amplitudes must be one-dimensional");
    return StateVector::from_amplitudes({a.data(), static_cast<std::size_t>(a.size())});
}

Gate make_gate(const std::string &name, const std::vector<Qubit> &qubits,
               const std::vector<double> &params) {
    const auto resolved = resolve_gate_name(name);
    if (!resolved || resolved->kind == GateKind::Unitary) {
        throw Error(ErrorKind::UnknownGate, "unknown gate '" + name + "'");
    }
    const int expected = resolved->n_controls + gate_info(resolved->kind).n_targets;
    if (static_cast<int>(qubits.size()) != expected) {
        throw Error(ErrorKind::Arity, "gate '" + name + "' takes " + std::to_string(expected) +
                                          " qubit(s), got " + std::to_string(qubits.size()));
    }
    const auto split = qubits.begin() + resolved->n_controls;
    return Gate(resolved->kind, std::vector<Qubit>(split, qubits.end()),
                std::vector<Qubit>(qubits.begin(), split), params);
}

OptimizerSpec optimizer(const std::string &method, std::size_t budget, std::uint64_t seed,
                        double tolerance) {
    OptimizerSpec spec;
    spec.method = parse_optimizer_method(method);
    spec.budget = budget;
    spec.seed = seed;
    spec.tolerance = tolerance;
    return spec;
}

std::vector<PauliTerm> terms_from(const std::vector<std::pair<double, std::string>> &pairs) {
    std::vector<PauliTerm> terms;
    for (const auto &[c, p] : pairs) terms.push_back({c, p});
    return terms;
}

} // namespace

PYBIND11_MODULE(_qsim, m) {
    m.doc() = "State-vector quantum circuit simulator";

    static py::exception<Error> qsim_error(m, "QsimError");
    static py::exception<ParseError> parse_error(m, "ParseError", qsim_error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        const auto raise = [](PyObject *type, const Error &e) {
            py::object exc = py::reinterpret_borrow<py::object>(type)(e.what());
            exc.attr("kind") = std::string(to_string(e.kind()));
            if (const auto *pe = dynamic_cast<const ParseError *>(&e)) {
                exc.attr("reason") = std::string(to_string(pe->reason()));
                exc.attr("line") = pe->line();
                exc.attr("column") = pe->column();
            }
            PyErr_SetObject(type, exc.ptr());
        };
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError &e) {
            raise(parse_error.ptr(), e);
        } catch (const Error &e) {
            raise(qsim_error.ptr(), e);
        }
    });

    // ---- state
    py::class_<StateVector>(m, "StateVector")
        .def(py::init<int>(), py::arg("n_qubits"))
        .def_static("from_amplitudes", &from_numpy, py::arg("amplitudes"))
        .def_property_readonly("n_qubits", &StateVector::n_qubits)
        .def("__len__", &StateVector::size)
        .def("norm_squared", &StateVector::norm_squared)
        .def("normalize", &StateVector::normalize)
        .def("amplitudes", &to_numpy, "Copy of the amplitudes as a complex128 array")
        .def("probabilities", [](const StateVector &s) { return probabilities(s); });
    m.def("zero_state", &zero_state, py::arg("n"));
    m.def("plus_state", &plus_state, py::arg("n"));
    m.def("basis_state", &basis_state, py::arg("n"), py::arg("index"));
    m.def("overlap", &overlap, py::arg("a"), py::arg("b"));
    m.def("save_state", &save_state, py::arg("path"), py::arg("state"));
    m.def("load_state", &load_state, py::arg("path"));

    // ---- gates and circuits
    py::class_<Gate>(m, "Gate")
        .def(py::init(&make_gate), py::arg("name"), py::arg("qubits"),
             py::arg("params") = std::vector<double>{})
        .def_static("unitary", &Gate::unitary, py::arg("matrix"), py::arg("targets"),
                    py::arg("controls") = std::vector<Qubit>{},
                    py::arg("label") = std::string("unitary"))
        .def_property_readonly("name", &Gate::name)
        .def_property_readonly("label", &Gate::label)
        .def_property_readonly("targets", &Gate::targets)
        .def_property_readonly("controls", &Gate::controls)
        .def_property_readonly("qubits", &Gate::qubits)
        .def_property_readonly("params", &Gate::params)
        .def_property_readonly("matrix", &Gate::matrix)
        .def("dagger", [](const Gate &g) { return dagger(g); })
        .def("__repr__", [](const Gate &g) { return "<Gate " + g.label() + ">"; });

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<int>(), py::arg("n_qubits"))
        .def_property_readonly("n_qubits", &Circuit::n_qubits)
        .def_property_readonly("gates", &Circuit::gates)
        .def_property_readonly("measured_qubits", &Circuit::measured_qubits)
        .def("add", [](Circuit &c, const Gate &g) -> Circuit & { return c.add(g); },
             py::arg("gate"), py::return_value_policy::reference_internal)
        .def(
            "add",
            [](Circuit &c, const std::string &name, const std::vector<Qubit> &qubits,
               const std::vector<double> &params) -> Circuit & {
                return c.add(make_gate(name, qubits, params));
            },
            py::arg("name"), py::arg("qubits"), py::arg("params") = std::vector<double>{},
            py::return_value_policy::reference_internal)
        .def(
            "measure",
            [](Circuit &c, const std::vector<Qubit> &qubits) -> Circuit & {
                return c.measure(qubits);
            },
            py::arg("qubits"), py::return_value_policy::reference_internal)
        .def("depth", &Circuit::depth)
        .def("parameters", &Circuit::parameters)
        .def(
            "set_parameters",
            [](Circuit &c, const std::vector<double> &v) { c.set_parameters(v); },
            py::arg("values"))
        .def("inverse", &Circuit::inverse)
        .def("__len__", [](const Circuit &c) { return c.gates().size(); });

    py::class_<ExecutionResult>(m, "ExecutionResult")
        .def_readonly("n_qubits", &ExecutionResult::n_qubits)
        .def_readonly("measured_qubits", &ExecutionResult::measured_qubits)
        .def_readonly("probabilities", &ExecutionResult::probabilities)
        .def_readonly("counts", &ExecutionResult::counts)
        .def_readonly("elapsed_s", &ExecutionResult::elapsed_s)
        .def_property_readonly("final_state",
                               [](const ExecutionResult &r) { return r.final_state; })
        .def(
            "to_json",
            [](const ExecutionResult &r, bool timing) { return to_json(r, timing).dump(); },
            py::arg("timing") = false);

    m.def(
        "execute",
        [](const Circuit &c, std::uint64_t nshots, std::uint64_t seed,
           std::optional<StateVector> initial, const std::string &backend) {
            ExecutionOptions opts;
            opts.nshots = nshots;
            opts.seed = seed;
            opts.initial = std::move(initial);
            if (!backend.empty()) opts.backend = get_backend(backend);
            py::gil_scoped_release release;
            return execute(c, std::move(opts));
        },
        py::arg("circuit"), py::arg("nshots") = 0, py::arg("seed") = 0,
        py::arg("initial") = std::nullopt, py::arg("backend") = std::string());
    m.def("final_state", &final_state, py::arg("circuit"));
    m.def("sample", &sample, py::arg("probabilities"), py::arg("nshots"), py::arg("seed"));

    m.def("parse_qasm", &qasm::parse, py::arg("text"));
    m.def("load_qasm", &qasm::parse_file, py::arg("path"));
    m.def("to_qasm", &qasm::serialize, py::arg("circuit"));

    m.def("backend_names", &backend_names);
    m.def("active_backend", &active_backend_name);
    m.def("set_active_backend", &set_active_backend, py::arg("name"));
    m.def("set_num_threads", &kernels::set_num_threads, py::arg("threads"));
    m.def("num_threads", &kernels::num_threads);

    // ---- Hamiltonians and evolution
    py::class_<LocalHamiltonian>(m, "Hamiltonian")
        .def(py::init([](int n, const std::vector<std::pair<double, std::string>> &terms) {
                 return LocalHamiltonian(n, terms_from(terms));
             }),
             py::arg("n_qubits"), py::arg("terms") = std::vector<std::pair<double, std::string>>{})
        .def_property_readonly("n_qubits", &LocalHamiltonian::n_qubits)
        .def_property_readonly("terms",
                               [](const LocalHamiltonian &h) {
                                   std::vector<std::pair<double, std::string>> out;
                                   for (const auto &t : h.terms()) out.emplace_back(t.coefficient, t.pauli);
                                   return out;
                               })
        .def(
            "add",
            [](LocalHamiltonian &h, double c, const std::string &p) -> LocalHamiltonian & {
                return h.add(c, p);
            },
            py::arg("coefficient"), py::arg("pauli"), py::return_value_policy::reference_internal)
        .def("matrix", [](const LocalHamiltonian &h) { return dense_from_local(h).matrix(); })
        .def("ground_energy",
             [](const LocalHamiltonian &h) { return dense_from_local(h).ground_energy(); })
        .def("ground_state",
             [](const LocalHamiltonian &h) { return dense_from_local(h).ground_state(); })
        .def("to_text", &format_hamiltonian)
        .def("__add__", [](const LocalHamiltonian &a, const LocalHamiltonian &b) { return a + b; })
        .def("__rmul__", [](const LocalHamiltonian &h, double f) { return f * h; })
        .def("__mul__", [](const LocalHamiltonian &h, double f) { return f * h; });

    m.def("tfim", &tfim, py::arg("n"), py::arg("h"));
    m.def("xxz", &xxz, py::arg("n"), py::arg("delta"));
    m.def("pauli_field", &pauli_field, py::arg("axis"), py::arg("n"),
          py::arg("coefficient") = 1.0);
    m.def(
        "maxcut", [](int n, const std::vector<Edge> &edges) { return maxcut(n, edges); },
        py::arg("n"), py::arg("edges"));
    m.def(
        "precoded",
        [](const std::string &name, int n, const std::vector<double> &params,
           const std::vector<Edge> &edges) { return precoded(name, n, params, edges); },
        py::arg("name"), py::arg("n"), py::arg("params") = std::vector<double>{},
        py::arg("edges") = std::vector<Edge>{});
    m.def("parse_hamiltonian", &parse_hamiltonian, py::arg("text"));
    m.def("load_hamiltonian", &load_hamiltonian, py::arg("path"));
    m.def(
        "expectation",
        [](const StateVector &s, const LocalHamiltonian &h) { return expectation(s, h); },
        py::arg("state"), py::arg("hamiltonian"));
    m.def(
        "exact_evolve",
        [](const LocalHamiltonian &h, double t, const StateVector &s) {
            return exact_evolve(dense_from_local(h), t, s);
        },
        py::arg("hamiltonian"), py::arg("t"), py::arg("state"));

    py::class_<EvolutionResult>(m, "EvolutionResult")
        .def_readonly("state", &EvolutionResult::state)
        .def_readonly("times", &EvolutionResult::times)
        .def_readonly("energies", &EvolutionResult::energies);
    m.def(
        "time_evolve",
        [](const LocalHamiltonian &h, double total, double dt, const StateVector &initial,
           const std::string &solver, int order) {
            EvolutionOptions opts;
            opts.solver = parse_solver(solver);
            opts.trotter_order = order;
            return time_evolve([h](double) { return h; }, total, dt, initial, opts);
        },
        py::arg("hamiltonian"), py::arg("total_time"), py::arg("dt"), py::arg("initial"),
        py::arg("solver") = std::string("exact"), py::arg("order") = 2);
    m.def(
        "adiabatic_evolve",
        [](const LocalHamiltonian &h0, const LocalHamiltonian &h1, double total, double dt,
           const std::vector<double> &schedule, const std::string &solver) {
            EvolutionOptions opts;
            opts.solver = parse_solver(solver);
            return adiabatic_evolve(h0, h1, Schedule::polynomial(schedule), total, dt, opts);
        },
        py::arg("h0"), py::arg("h1"), py::arg("total_time"), py::arg("dt"),
        py::arg("schedule") = std::vector<double>{}, py::arg("solver") = std::string("exact"));
    m.def("trotter_circuit", &trotter_circuit, py::arg("hamiltonian"), py::arg("dt"),
          py::arg("order") = 2);

    // ---- models and optimizers
    m.def("qft_circuit", &qft_circuit, py::arg("n"), py::arg("with_swaps") = true);
    m.def(
        "grover",
        [](int n, const std::vector<Index> &marked, std::optional<int> iterations) {
            GroverCircuit g = grover(n, marked, iterations);
            return py::make_tuple(std::move(g.circuit), g.iterations, g.predicted_success);
        },
        py::arg("n"), py::arg("marked"), py::arg("iterations") = std::nullopt);
    m.def(
        "ansatz",
        [](int n, int depth, const std::vector<double> &theta) {
            return AnsatzSpec{n, depth}.build(theta);
        },
        py::arg("n"), py::arg("depth"), py::arg("theta"));
    m.def(
        "minimize",
        [](const std::function<double(std::vector<double>)> &f, std::vector<double> x0,
           const std::string &method, std::size_t budget, std::uint64_t seed, double tolerance) {
            const OptimizeResult r = minimize(
                [&](std::span<const double> x) { return f({x.begin(), x.end()}); },
                std::move(x0), optimizer(method, budget, seed, tolerance));
            py::dict out;
            out["x"] = r.x;
            out["f"] = r.f;
            out["evaluations"] = r.evaluations;
            out["converged"] = r.converged;
            return out;
        },
        py::arg("f"), py::arg("x0"), py::arg("method") = "simplex", py::arg("budget") = 1000,
        py::arg("seed") = 0, py::arg("tolerance") = 1e-10);
    m.def(
        "vqe",
        [](const LocalHamiltonian &h, int depth, const std::string &method, std::size_t budget,
           std::uint64_t seed, std::optional<std::vector<double>> theta0) {
            const VqeResult r = vqe(h, AnsatzSpec{h.n_qubits(), depth},
                                    optimizer(method, budget, seed, 1e-10), std::move(theta0));
            py::dict out;
            out["energy"] = r.energy;
            out["theta"] = r.theta;
            out["evaluations"] = r.evaluations;
            out["converged"] = r.converged;
            return out;
        },
        py::arg("hamiltonian"), py::arg("depth"), py::arg("method") = "simplex",
        py::arg("budget") = 1000, py::arg("seed") = 0, py::arg("theta0") = std::nullopt);
    m.def(
        "qaoa_circuit",
        [](const LocalHamiltonian &hp, const std::vector<double> &params) {
            return qaoa_circuit(hp, params);
        },
        py::arg("hamiltonian"), py::arg("params"));
    m.def(
        "qaoa_optimize",
        [](const LocalHamiltonian &hp, int p, const std::string &method, std::size_t budget,
           std::uint64_t seed) {
            const QaoaResult r = qaoa_optimize(hp, p, optimizer(method, budget, seed, 1e-10));
            py::dict out;
            out["energy"] = r.energy;
            out["params"] = r.params;
            out["evaluations"] = r.evaluations;
            out["converged"] = r.converged;
            return out;
        },
        py::arg("hamiltonian"), py::arg("p"), py::arg("method") = "simplex",
        py::arg("budget") = 1000, py::arg("seed") = 0);
    m.def(
        "falqon",
        [](const LocalHamiltonian &hp, const LocalHamiltonian &hm, double dt, int steps) {
            FalqonResult r = falqon(hp, hm, dt, steps);
            py::dict out;
            out["betas"] = r.betas;
            out["energies"] = r.energies;
            out["monotone"] = r.monotone;
            out["warnings"] = r.warnings;
            out["state"] = std::move(r.state);
            return out;
        },
        py::arg("problem"), py::arg("mixer"), py::arg("dt"), py::arg("steps"));
}
