// Copyright 2026 The GateForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// gateforge: synthesize, decompose, evolve, verify and search gate
// Hamiltonians.
//
//   gateforge synth FAMILY PARAMS      families: not1 not1-general not2
//                                      not2-general xor unitary
//   gateforge decompose MATRIX         Hermitian matrix -> Pauli terms
//   gateforge evolve HAMILTONIAN       [--protocol P] [--steps N]
//   gateforge verify HAMILTONIAN SPEC  [--tol T] [--protocol P]
//   gateforge search ANSATZ SPEC [CONFIG] [--seed S] [--history FILE]
//
// PARAMS, MATRIX, ANSATZ, CONFIG and P are inline JSON, a file path, or "-"
// for stdin.
//
// Exit codes
//   0  success / gate verified / search target met
//   1  verification failed / search budget exhausted
//   2  input error (parse, schema, dimension)
//   3  constraint violation

#include <chrono>
#include <cmath>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gateforge/evolution.hpp"
#include "gateforge/gate_families.hpp"
#include "gateforge/report.hpp"
#include "gateforge/search.hpp"
#include "gateforge/synthesis.hpp"

namespace gf = gateforge;
using gf::Json;

namespace {

enum ExitCode : int { kPass = 0, kFail = 1, kInput = 2, kConstraint = 3 };

struct Options {
    double delta_t = 1.0;
    double hbar = 1.0;
    double tol = gf::Tolerances::verification;
    std::optional<std::uint64_t> seed;
    std::size_t steps = 256;
    std::string out;
    std::string format = "json";
    std::string manifest;
    bool degrees = false;

    std::string family;
    std::string params;
    std::string input;
    std::string spec;
    std::string config;
    std::string protocol;
    std::string history;
};

// Filled by each command for the manifest.
Json g_effective = Json::object();
std::optional<std::uint64_t> g_seed;

constexpr std::string_view kAngleKeys[] = {"alpha", "beta", "gamma", "delta", "rho",
                                           "omega", "xi",   "eta",   "mu",    "nu"};

Json to_radians(Json params) {
    if (!params.is_object()) {
        return params;
    }
    for (std::string_view k : kAngleKeys) {
        if (params.contains(k) && params[std::string(k)].is_number()) {
            params[std::string(k)] = params[std::string(k)].get<double>() * gf::kPi / 180.0;
        }
    }
    return params;
}

gf::GateSpec read_spec(const std::string &name) {
    try {
        return gf::spec_by_name(name);
    } catch (const std::invalid_argument &e) {
        throw gf::InputError(e.what());
    }
}

void emit_json(const Options &o, const Json &j) { gf::write_text(o.out, gf::dump_json(j)); }

std::string terms_csv(const gf::PauliPolynomial &p) {
    std::string s = "string,coeff\n";
    for (const auto &[str, c] : p.terms()) {
        s += str.letters() + "," + gf::format_double(c) + "\n";
    }
    return s;
}

void emit_hamiltonian(const Options &o, const gf::HamiltonianReport &r) {
    if (o.format == "csv") {
        gf::write_text(o.out, terms_csv(r.hamiltonian));
    } else {
        emit_json(o, gf::to_json(r));
    }
}

double wrapped_difference(double a, double b) { return std::remainder(a - b, 2.0 * gf::kPi); }

gf::PauliPolynomial synth_xor(const Json &p, double delta_t, double hbar) {
    constexpr std::string_view what = "xor params";
    gf::check_fields(p, what, {"alpha", "beta", "gamma"}, {"delta", "rho", "omega", "xi", "eta", "mu", "nu"});
    const gf::XorAngleSolution sol = gf::solve_xor_constraints(
        gf::get_number(p, "alpha", what), gf::get_number(p, "beta", what), gf::get_number(p, "gamma", what));
    const std::pair<std::string_view, double> derived[] = {{"delta", sol.delta}, {"rho", sol.rho},
                                                           {"omega", sol.omega_angle}, {"xi", sol.xi},
                                                           {"eta", sol.eta}, {"mu", sol.mu},
                                                           {"nu", sol.nu}};
    for (const auto &[key, value] : derived) {
        if (p.contains(key)) {
            const double given = gf::get_number(p, key, what);
            if (std::abs(wrapped_difference(given, value)) > 1e-9) {
                throw gf::ConstraintError("xor: " + std::string(key) + " = " + gf::format_double(given) +
                                          " violates the XOR constraints, which require " +
                                          gf::format_double(value) + " (mod 2 pi)");
            }
        }
    }
    return gf::hamiltonian_xor(sol.alpha, sol.beta, sol.gamma, delta_t, hbar);
}

gf::HamiltonianReport synthesize_family(const Options &o, const Json &p) {
    const double dt = o.delta_t;
    const double hb = o.hbar;
    const std::string &f = o.family;
    gf::PauliPolynomial h;
    if (f == "not1") {
        gf::check_fields(p, "not1 params", {"N", "gamma"});
        h = gf::hamiltonian_not1(gf::get_integer(p, "N", "not1 params"), gf::get_number(p, "gamma", "not1 params"),
                                 dt, hb);
    } else if (f == "not1-general") {
        constexpr std::string_view what = "not1-general params";
        gf::check_fields(p, what, {"alpha", "beta", "N1", "N2"});
        h = gf::hamiltonian_not1_general({gf::get_number(p, "alpha", what), gf::get_number(p, "beta", what)},
                                         {{gf::get_integer(p, "N1", what), gf::get_integer(p, "N2", what)}}, dt,
                                         hb);
    } else if (f == "not2") {
        constexpr std::string_view what = "not2 params";
        gf::check_fields(p, what, {"E", "N", "gamma"});
        h = gf::hamiltonian_not2(gf::get_number(p, "E", what), gf::get_integer(p, "N", what),
                                 gf::get_number(p, "gamma", what), dt, hb);
    } else if (f == "not2-general") {
        constexpr std::string_view what = "not2-general params";
        gf::check_fields(p, what, {"alpha", "beta", "rho", "delta", "N1", "N2", "N3", "N4"});
        const gf::Not2RestrictedParams rp{gf::get_number(p, "alpha", what), gf::get_number(p, "beta", what),
                                          gf::get_number(p, "rho", what), gf::get_number(p, "delta", what)};
        h = gf::hamiltonian_not2_general(rp,
                                         {{gf::get_integer(p, "N1", what), gf::get_integer(p, "N2", what),
                                           gf::get_integer(p, "N3", what), gf::get_integer(p, "N4", what)}},
                                         dt, hb);
    } else if (f == "xor") {
        h = synth_xor(p, dt, hb);
    } else if (f == "unitary") {
        constexpr std::string_view what = "unitary params";
        gf::check_fields(p, what, {"matrix"}, {"branch"});
        const gf::CMatrix u = gf::matrix_from_json(p["matrix"]);
        const gf::UnitarityCheck check = gf::check_unitary(u);
        if (!check.unitary) {
            throw gf::ConstraintError("unitary: matrix is not unitary (residual " +
                                      gf::format_double(check.residual) + ")");
        }
        gf::BranchChoice branch = gf::BranchChoice::principal(gf::unitary_clusters(u).size());
        if (p.contains("branch")) {
            if (!p["branch"].is_array()) {
                throw gf::InputError("unitary params: \"branch\" must be an array of integers");
            }
            branch.integers.clear();
            for (const Json &b : p["branch"]) {
                if (!b.is_number_integer()) {
                    throw gf::InputError("unitary params: \"branch\" must be an array of integers");
                }
                branch.integers.push_back(b.get<long>());
            }
        }
        h = gf::synthesize(u, branch, dt, hb);
    } else {
        throw gf::InputError("unknown family \"" + f + "\"");
    }
    return gf::make_hamiltonian_report(f, h, dt, hb);
}

int cmd_synth(const Options &o) {
    Json params = gf::load_json_argument(o.params, "params");
    if (o.degrees) {
        params = to_radians(std::move(params));
    }
    g_effective = Json{{"family", o.family}, {"params", params}, {"delta_t", o.delta_t}, {"hbar", o.hbar}};
    emit_hamiltonian(o, synthesize_family(o, params));
    return kPass;
}

int cmd_decompose(const Options &o) {
    Json j = gf::load_json_argument(o.input, "matrix");
    if (j.is_object() && j.contains("matrix")) {
        gf::check_fields(j, "matrix file", {"matrix"}, {"kind", "n_qubits", "delta_t", "hbar", "protocol",
                                                        "protocol_check", "steps"});
        j = j["matrix"];
    }
    g_effective = Json{{"matrix", j}, {"delta_t", o.delta_t}, {"hbar", o.hbar}};
    const gf::CMatrix m = gf::matrix_from_json(j);
    gf::PauliPolynomial h;
    try {
        h = gf::decompose(m);
    } catch (const gf::DomainError &e) {
        throw gf::ConstraintError(e.what());
    }
    emit_hamiltonian(o, gf::make_hamiltonian_report("matrix", h, o.delta_t, o.hbar));
    return kPass;
}

struct Evolved {
    gf::CMatrix u;
    std::optional<gf::Protocol> protocol;
    std::optional<gf::ProtocolCheck> check;
    double delta_t;
    double hbar;
};

Evolved evolve_report(const Options &o, const gf::HamiltonianReport &r) {
    Evolved e{{}, std::nullopt, std::nullopt, r.delta_t, r.hbar};
    if (o.protocol.empty()) {
        e.u = gf::evolve_const(r.hamiltonian, r.delta_t, r.hbar);
        return e;
    }
    Json pj = gf::load_json_argument(o.protocol, "protocol");
    if (pj.is_object() && !pj.contains("delta_t")) {
        pj["delta_t"] = r.delta_t;
    }
    e.protocol = gf::protocol_from_json(pj);
    e.check = gf::check_protocol(*e.protocol);
    if (!e.check->valid) {
        throw gf::ConstraintError("protocol integral is " + gf::format_double(e.check->integral) +
                                  " but must equal delta_t = " + gf::format_double(e.protocol->delta_t()));
    }
    e.u = gf::evolve_protocol(r.hamiltonian, *e.protocol, o.steps, r.hbar);
    return e;
}

int cmd_evolve(const Options &o) {
    const gf::HamiltonianReport r =
        gf::hamiltonian_report_from_json(gf::load_json_argument(o.input, "hamiltonian"));
    g_effective = Json{{"hamiltonian", o.input}, {"protocol", o.protocol}, {"steps", o.steps}};
    const Evolved e = evolve_report(o, r);
    Json j{{"schema", gf::kSchema}, {"kind", "unitary"}, {"n_qubits", r.n_qubits}, {"delta_t", e.delta_t},
           {"hbar", e.hbar}};
    if (e.protocol) {
        j["protocol"] = gf::protocol_to_json(*e.protocol);
        j["protocol_check"] = gf::to_json(*e.check);
        j["steps"] = o.steps;
    }
    j["matrix"] = gf::matrix_to_json(e.u);
    emit_json(o, j);
    return kPass;
}

int cmd_verify(const Options &o) {
    const gf::GateSpec spec = read_spec(o.spec);
    const Json input = gf::load_json_argument(o.input, "hamiltonian");
    g_effective = Json{{"input", o.input}, {"spec", o.spec}, {"tol", o.tol}, {"protocol", o.protocol},
                       {"steps", o.steps}};
    gf::CMatrix u;
    if (input.is_object() && input.value("kind", "") == "unitary") {
        gf::check_fields(input, "unitary file", {"kind", "matrix"},
                         {"n_qubits", "delta_t", "hbar", "protocol", "protocol_check", "steps"});
        u = gf::matrix_from_json(input["matrix"]);
    } else {
        const gf::HamiltonianReport r = gf::hamiltonian_report_from_json(input);
        if (r.n_qubits != spec.n_qubits) {
            throw gf::InputError("hamiltonian acts on " + std::to_string(r.n_qubits) + " qubits but spec \"" +
                                 spec.name + "\" needs " + std::to_string(spec.n_qubits));
        }
        u = evolve_report(o, r).u;
    }
    const gf::VerificationReport v = gf::verify_gate(u, spec, o.tol);
    if (o.format == "csv") {
        std::string s = "row,leakage\n";
        for (std::size_t i = 0; i < v.row_labels.size(); ++i) {
            s += "\"" + v.row_labels[i] + "\"," + gf::format_double(v.row_leakage[i]) + "\n";
        }
        gf::write_text(o.out, s);
    } else {
        emit_json(o, gf::to_json(v, spec.name));
    }
    return v.passed ? kPass : kFail;
}

int cmd_search(const Options &o) {
    const gf::GateSpec spec = read_spec(o.spec);
    const gf::CouplingAnsatz ansatz =
        gf::ansatz_from_json(gf::load_json_argument(o.input, "ansatz"), o.delta_t, o.hbar);
    gf::SearchConfig config =
        o.config.empty() ? gf::SearchConfig{} : gf::config_from_json(gf::load_json_argument(o.config, "config"));
    if (o.seed) {
        config.seed = *o.seed;
    }
    g_seed = config.seed;
    if (ansatz.n_qubits != spec.n_qubits) {
        throw gf::InputError("ansatz acts on " + std::to_string(ansatz.n_qubits) + " qubits but spec \"" +
                             spec.name + "\" needs " + std::to_string(spec.n_qubits));
    }
    g_effective = Json{{"ansatz", gf::ansatz_to_json(ansatz)},
                       {"spec", spec.name},
                       {"config", gf::config_to_json(config)},
                       {"delta_t", o.delta_t},
                       {"hbar", o.hbar}};
    const gf::SearchResult result = gf::run_search(ansatz, spec, config, o.delta_t, o.hbar);
    if (o.format == "csv") {
        gf::write_text(o.out, gf::history_csv(result));
    } else {
        emit_json(o, gf::to_json(result, ansatz, spec.name, config, o.delta_t, o.hbar));
    }
    if (!o.history.empty()) {
        gf::write_text(o.history, gf::history_csv(result));
    }
    return result.target_met ? kPass : kFail;
}

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

int main(int argc, char **argv) {
    const auto start = std::chrono::steady_clock::now();
    const std::string started_at = utc_now();

    Options o;
    CLI::App app{"Synthesize, decompose, evolve, verify and search gate Hamiltonians.", "gateforge"};
    app.set_version_flag("--version", std::string(GATEFORGE_VERSION));
    app.require_subcommand(1);
    app.add_option("--delta-t", o.delta_t, "Gate duration")->check(CLI::PositiveNumber);
    app.add_option("--hbar", o.hbar, "Reduced Planck constant")->check(CLI::PositiveNumber);
    app.add_option("--tol", o.tol, "Verification tolerance")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", o.seed, "Search seed (overrides the config)");
    app.add_option("--steps", o.steps, "Time steps for protocol evolution")->check(CLI::PositiveNumber);
    app.add_option("--out", o.out, "Output file (default stdout)");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--manifest", o.manifest, "Write a run manifest here");
    app.add_flag("--degrees", o.degrees, "Read angles in params as degrees");

    auto *synth = app.add_subcommand("synth", "Closed-form or pipeline Hamiltonian for a gate");
    synth->add_option("family", o.family, "not1, not1-general, not2, not2-general, xor or unitary")->required();
    synth->add_option("params", o.params, "Parameters: inline JSON, path or -")->required();

    auto *decompose = app.add_subcommand("decompose", "Pauli expansion of a Hermitian matrix");
    decompose->add_option("matrix", o.input, "Matrix JSON: inline, path or -")->required();

    auto *evolve = app.add_subcommand("evolve", "Evolution operator of a Hamiltonian report");
    evolve->add_option("hamiltonian", o.input, "Hamiltonian report: inline, path or -")->required();
    evolve->add_option("--protocol", o.protocol, "Time protocol JSON");

    auto *verify = app.add_subcommand("verify", "Check a Hamiltonian or unitary against a truth table");
    verify->add_option("hamiltonian", o.input, "Hamiltonian report or unitary: inline, path or -")->required();
    verify->add_option("spec", o.spec, "not1, not2 or xor")->required();
    verify->add_option("--protocol", o.protocol, "Time protocol JSON");

    auto *search = app.add_subcommand("search", "Numerical search for couplings within an ansatz");
    search->add_option("ansatz", o.input, "Ansatz JSON: inline, path or -")->required();
    search->add_option("spec", o.spec, "not1, not2 or xor")->required();
    search->add_option("config", o.config, "Search config JSON: inline, path or -");
    search->add_option("--history", o.history, "Also write the CSV history here");

    for (CLI::App *sub : {synth, decompose, evolve, verify, search}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInput;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    int code = kInput;
    try {
        if (command == "synth") {
            code = cmd_synth(o);
        } else if (command == "decompose") {
            code = cmd_decompose(o);
        } else if (command == "evolve") {
            code = cmd_evolve(o);
        } else if (command == "verify") {
            code = cmd_verify(o);
        } else {
            code = cmd_search(o);
        }
    } catch (const gf::ConstraintError &e) {
        std::cerr << "gateforge " << command << ": constraint violation: " << e.what() << "\n";
        code = kConstraint;
    } catch (const gf::DomainError &e) {
        std::cerr << "gateforge " << command << ": constraint violation: " << e.what() << "\n";
        code = kConstraint;
    } catch (const std::exception &e) {
        std::cerr << "gateforge " << command << ": " << e.what() << "\n";
        code = kInput;
    }

    if (!o.manifest.empty()) {
        gf::RunManifest m;
        m.command = command;
        m.arguments.assign(argv, argv + argc);
        m.config = g_effective;
        m.seed = g_seed ? g_seed : o.seed;
        m.version = GATEFORGE_VERSION;
        m.started_at = started_at;
        m.wall_clock_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        m.exit_code = code;
        try {
            gf::write_text(o.manifest, gf::dump_json(gf::to_json(m)));
        } catch (const std::exception &e) {
            std::cerr << "gateforge: " << e.what() << "\n";
            return kInput;
        }
    }
    return code;
}
