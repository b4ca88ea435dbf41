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

#include "gateforge/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "gateforge/synthesis.hpp"

namespace gateforge {

std::string format_double(double v) {
    if (!std::isfinite(v)) {
        throw InputError("cannot serialize a non-finite number");
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    if (s.find_first_of(".eEn") == std::string::npos) {
        s += ".0";
    }
    return s;
}

namespace {

std::string quote(const std::string &s) {
    return Json(s).dump();
}

void dump_into(const Json &j, std::string &out, int depth) {
    const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
    const std::string close(2 * static_cast<std::size_t>(depth), ' ');
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (const auto &[k, v] : j.items()) {
            if (!first) {
                out += ",\n";
            }
            first = false;
            out += pad + quote(k) + ": ";
            dump_into(v, out, depth + 1);
        }
        out += "\n" + close + "}";
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        // Arrays of scalars stay on one line.
        const bool flat = std::all_of(j.begin(), j.end(), [](const Json &e) { return e.is_primitive(); });
        if (flat) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i > 0) {
                    out += ", ";
                }
                dump_into(j[i], out, depth + 1);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i > 0) {
                out += ",\n";
            }
            out += pad;
            dump_into(j[i], out, depth + 1);
        }
        out += "\n" + close + "]";
        return;
    }
    case Json::value_t::number_float:
        out += format_double(j.get<double>());
        return;
    default:
        out += j.dump();
        return;
    }
}

} // namespace

std::string dump_json(const Json &j) {
    std::string out;
    dump_into(j, out, 0);
    out += '\n';
    return out;
}

Json parse_json_text(std::string_view text, std::string_view what) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error &e) {
        throw InputError(std::string(what) + ": invalid JSON (" + e.what() + ")");
    }
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open \"" + path + "\"");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json load_json_argument(const std::string &source, std::string_view what) {
    if (source == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return parse_json_text(ss.str(), what);
    }
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
        return parse_json_text(source, what);
    }
    return parse_json_text(read_text_file(source), what);
}

void write_text(const std::string &path, std::string_view text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write \"" + path + "\"");
    }
    out << text;
}

void check_fields(const Json &obj, std::string_view what, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional) {
    if (!obj.is_object()) {
        throw InputError(std::string(what) + ": expected a JSON object");
    }
    for (std::string_view k : required) {
        if (!obj.contains(k)) {
            throw InputError(std::string(what) + ": missing field \"" + std::string(k) + "\"");
        }
    }
    for (const auto &[k, v] : obj.items()) {
        const bool known = std::find(required.begin(), required.end(), k) != required.end() ||
                           std::find(optional.begin(), optional.end(), k) != optional.end() || k == "schema";
        if (!known) {
            throw InputError(std::string(what) + ": unknown field \"" + k + "\"");
        }
    }
    if (obj.contains("schema") && obj["schema"] != std::string(kSchema)) {
        throw InputError(std::string(what) + ": unsupported schema " + obj["schema"].dump() + ", expected \"" +
                         std::string(kSchema) + "\"");
    }
}

double get_number(const Json &obj, std::string_view key, std::string_view what) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw InputError(std::string(what) + ": missing field \"" + std::string(key) + "\"");
    }
    if (!it->is_number()) {
        throw InputError(std::string(what) + ": field \"" + std::string(key) + "\" must be a number");
    }
    const double v = it->get<double>();
    if (!std::isfinite(v)) {
        throw InputError(std::string(what) + ": field \"" + std::string(key) + "\" must be finite");
    }
    return v;
}

double get_number_or(const Json &obj, std::string_view key, double fallback, std::string_view what) {
    return obj.contains(key) ? get_number(obj, key, what) : fallback;
}

long get_integer(const Json &obj, std::string_view key, std::string_view what) {
    const double v = get_number(obj, key, what);
    if (v != std::floor(v) || std::abs(v) > 1e15) {
        throw InputError(std::string(what) + ": field \"" + std::string(key) + "\" must be an integer");
    }
    return static_cast<long>(v);
}

std::string get_string(const Json &obj, std::string_view key, std::string_view what) {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) {
        throw InputError(std::string(what) + ": field \"" + std::string(key) + "\" must be a string");
    }
    return it->get<std::string>();
}

namespace {

Json number_array(std::span<const double> v) {
    Json a = Json::array();
    for (double x : v) {
        a.push_back(x);
    }
    return a;
}

std::vector<double> read_number_array(const Json &j, std::string_view what) {
    if (!j.is_array()) {
        throw InputError(std::string(what) + ": expected an array of numbers");
    }
    std::vector<double> out;
    for (const Json &e : j) {
        if (!e.is_number()) {
            throw InputError(std::string(what) + ": expected an array of numbers");
        }
        out.push_back(e.get<double>());
    }
    return out;
}

PauliString read_string(const Json &j, std::string_view what) {
    if (!j.is_string()) {
        throw InputError(std::string(what) + ": Pauli strings must be JSON strings");
    }
    try {
        return PauliString(j.get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

} // namespace

Json polynomial_to_json(const PauliPolynomial &p) {
    Json terms = Json::array();
    for (const auto &[s, c] : p.terms()) {
        terms.push_back(Json{{"string", s.letters()}, {"coeff", c}});
    }
    return terms;
}

PauliPolynomial polynomial_from_json(const Json &terms, std::size_t n_qubits) {
    if (!terms.is_array()) {
        throw InputError("terms: expected an array");
    }
    PauliPolynomial p(n_qubits);
    for (const Json &t : terms) {
        check_fields(t, "term", {"string", "coeff"});
        const PauliString s = read_string(t["string"], "term");
        if (s.size() != n_qubits) {
            throw InputError("term \"" + s.letters() + "\" does not act on " + std::to_string(n_qubits) +
                             " qubits");
        }
        if (p.terms().contains(s)) {
            throw InputError("term \"" + s.letters() + "\" appears twice");
        }
        p.add_term(s, get_number(t, "coeff", "term"));
    }
    return p;
}

Json matrix_to_json(const CMatrix &m) {
    Json re = Json::array();
    Json im = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Json rr = Json::array();
        Json ri = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            rr.push_back(m(r, c).real());
            ri.push_back(m(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
    }
    return Json{{"real", re}, {"imag", im}};
}

CMatrix matrix_from_json(const Json &j) {
    check_fields(j, "matrix", {"real"}, {"imag"});
    const Json &re = j["real"];
    if (!re.is_array() || re.empty()) {
        throw InputError("matrix: \"real\" must be a nonempty array of rows");
    }
    const std::size_t n = re.size();
    CMatrix m(n);
    auto fill = [&](const Json &rows, bool imag) {
        if (!rows.is_array() || rows.size() != n) {
            throw InputError("matrix: expected " + std::to_string(n) + " rows");
        }
        for (std::size_t r = 0; r < n; ++r) {
            const std::vector<double> row = read_number_array(rows[r], "matrix row");
            if (row.size() != n) {
                throw InputError("matrix: row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(n));
            }
            for (std::size_t c = 0; c < n; ++c) {
                if (imag) {
                    m(r, c) = Complex(m(r, c).real(), row[c]);
                } else {
                    m(r, c) = Complex(row[c], m(r, c).imag());
                }
            }
        }
    };
    fill(re, false);
    if (j.contains("imag")) {
        fill(j["imag"], true);
    }
    return m;
}

HamiltonianReport make_hamiltonian_report(std::string family, const PauliPolynomial &h, double delta_t,
                                          double hbar) {
    HamiltonianReport r;
    r.family = std::move(family);
    r.n_qubits = h.n_qubits();
    r.hbar = hbar;
    r.delta_t = delta_t;
    r.hamiltonian = h;
    const CMatrix m = h.to_matrix();
    r.energies = eig_hermitian(m).eigenvalues;
    try {
        r.branch = branch_for_energies(evolve_const(h, delta_t, hbar), r.energies, delta_t, hbar).integers;
    } catch (const DomainError &) {
        // Distinct energies 2 pi hbar / dt apart: no branch choice recovers H.
        r.branch.clear();
    }
    return r;
}

Json to_json(const HamiltonianReport &r) {
    Json profile = Json::array();
    for (const auto &[w, list] : locality_profile(r.hamiltonian)) {
        Json terms = Json::array();
        for (const auto &[s, c] : list) {
            terms.push_back(Json{{"string", s.letters()}, {"coeff", c}});
        }
        profile.push_back(Json{{"weight", w}, {"terms", terms}});
    }
    Json branch = Json::array();
    for (long b : r.branch) {
        branch.push_back(b);
    }
    return Json{{"schema", kSchema},
                {"kind", "hamiltonian"},
                {"family", r.family},
                {"n_qubits", r.n_qubits},
                {"hbar", r.hbar},
                {"delta_t", r.delta_t},
                {"terms", polynomial_to_json(r.hamiltonian)},
                {"constant_term", r.hamiltonian.constant_term()},
                {"energies", number_array(r.energies)},
                {"branch", branch},
                {"locality_profile", profile}};
}

HamiltonianReport hamiltonian_report_from_json(const Json &j) {
    check_fields(j, "hamiltonian report", {"schema", "kind", "n_qubits", "terms"},
                 {"family", "hbar", "delta_t", "constant_term", "energies", "branch", "locality_profile"});
    if (j["kind"] != "hamiltonian") {
        throw InputError("hamiltonian report: kind must be \"hamiltonian\"");
    }
    const long n = get_integer(j, "n_qubits", "hamiltonian report");
    if (n < 1 || n > 10) {
        throw InputError("hamiltonian report: n_qubits must be between 1 and 10");
    }
    HamiltonianReport r;
    r.family = j.contains("family") ? get_string(j, "family", "hamiltonian report") : "custom";
    r.n_qubits = static_cast<std::size_t>(n);
    r.hbar = get_number_or(j, "hbar", 1.0, "hamiltonian report");
    r.delta_t = get_number_or(j, "delta_t", 1.0, "hamiltonian report");
    if (!(r.hbar > 0.0) || !(r.delta_t > 0.0)) {
        throw InputError("hamiltonian report: hbar and delta_t must be positive");
    }
    r.hamiltonian = polynomial_from_json(j["terms"], r.n_qubits);
    if (j.contains("energies")) {
        r.energies = read_number_array(j["energies"], "energies");
    }
    if (j.contains("branch")) {
        for (double b : read_number_array(j["branch"], "branch")) {
            r.branch.push_back(static_cast<long>(b));
        }
    }
    return r;
}

Json to_json(const VerificationReport &r, std::string_view spec_name) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < r.row_labels.size(); ++i) {
        rows.push_back(Json{{"row", r.row_labels[i]}, {"leakage", r.row_leakage[i]}});
    }
    return Json{{"schema", kSchema},     {"kind", "verification"},
                {"spec", spec_name},     {"passed", r.passed},
                {"tolerance", r.tolerance}, {"worst_leakage", r.worst_leakage},
                {"rows", rows}};
}

Json protocol_to_json(const Protocol &p) {
    Json params = Json::object();
    switch (p.kind()) {
    case ProtocolKind::constant:
        break;
    case ProtocolKind::raised_cosine:
        params["cycles"] = p.cycles();
        break;
    case ProtocolKind::table:
        params["samples"] = number_array(p.samples());
        break;
    case ProtocolKind::custom: {
        params["constant"] = p.constant_part();
        Json cos = Json::array();
        for (const CosineTerm &c : p.cosines()) {
            cos.push_back(Json{{"amplitude", c.amplitude}, {"harmonic", c.harmonic}, {"phase", c.phase}});
        }
        params["cosines"] = cos;
        break;
    }
    }
    return Json{{"kind", to_string(p.kind())},
                {"amplitude", p.amplitude()},
                {"t0", p.t0()},
                {"delta_t", p.delta_t()},
                {"params", params}};
}

Protocol protocol_from_json(const Json &j) {
    constexpr std::string_view what = "protocol";
    check_fields(j, what, {"kind"}, {"amplitude", "t0", "delta_t", "params"});
    ProtocolKind kind;
    try {
        kind = protocol_kind_from_string(get_string(j, "kind", what));
    } catch (const std::invalid_argument &e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
    const double t0 = get_number_or(j, "t0", 0.0, what);
    const double dt = get_number_or(j, "delta_t", 1.0, what);
    const Json params = j.contains("params") ? j["params"] : Json::object();
    try {
        switch (kind) {
        case ProtocolKind::constant:
            check_fields(params, "constant params", {});
            return Protocol::constant(t0, dt, get_number_or(j, "amplitude", 1.0, what));
        case ProtocolKind::raised_cosine: {
            check_fields(params, "raised_cosine params", {}, {"cycles"});
            const double cycles = get_number_or(params, "cycles", 1.0, what);
            return j.contains("amplitude")
                       ? Protocol::raised_cosine(t0, dt, cycles, get_number(j, "amplitude", what))
                       : Protocol::raised_cosine(t0, dt, cycles);
        }
        case ProtocolKind::table:
            check_fields(params, "table params", {"samples"});
            return Protocol::table(t0, dt, read_number_array(params["samples"], "samples"),
                                   get_number_or(j, "amplitude", 1.0, what));
        case ProtocolKind::custom: {
            check_fields(params, "custom params", {}, {"constant", "cosines"});
            std::vector<CosineTerm> cos;
            if (params.contains("cosines")) {
                if (!params["cosines"].is_array()) {
                    throw InputError("custom params: \"cosines\" must be an array");
                }
                for (const Json &c : params["cosines"]) {
                    check_fields(c, "cosine term", {"amplitude", "harmonic"}, {"phase"});
                    cos.push_back({get_number(c, "amplitude", "cosine term"), get_number(c, "harmonic", "cosine term"),
                                   get_number_or(c, "phase", 0.0, "cosine term")});
                }
            }
            return Protocol::custom(t0, dt, get_number_or(params, "constant", 0.0, what), std::move(cos),
                                    get_number_or(j, "amplitude", 1.0, what));
        }
        }
    } catch (const DomainError &e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
    throw InputError("protocol: unreachable kind");
}

Json to_json(const ProtocolCheck &c) {
    return Json{{"integral", c.integral}, {"valid", c.valid}, {"changes_sign", c.changes_sign}};
}

Json ansatz_to_json(const CouplingAnsatz &a) {
    Json terms = Json::array();
    Json bounds = Json::array();
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (a.terms[i].strings.size() == 1) {
            terms.push_back(a.terms[i].strings.front().letters());
        } else {
            Json group = Json::array();
            for (const PauliString &s : a.terms[i].strings) {
                group.push_back(s.letters());
            }
            terms.push_back(group);
        }
        bounds.push_back(Json::array({a.bounds[i].first, a.bounds[i].second}));
    }
    return Json{{"n_qubits", a.n_qubits}, {"terms", terms}, {"bounds", bounds}, {"two_spin_only", a.two_spin_only}};
}

CouplingAnsatz ansatz_from_json(const Json &j, double delta_t, double hbar) {
    constexpr std::string_view what = "ansatz";
    if (j.is_object() && j.contains("name")) {
        check_fields(j, what, {"name"}, {"n_qubits", "fields"});
        const long n = j.contains("n_qubits") ? get_integer(j, "n_qubits", what) : 3;
        bool fields = false;
        if (j.contains("fields")) {
            if (!j["fields"].is_boolean()) {
                throw InputError("ansatz: \"fields\" must be a boolean");
            }
            fields = j["fields"].get<bool>();
        }
        if (n < 1 || n > 10) {
            throw InputError("ansatz: n_qubits must be between 1 and 10");
        }
        try {
            return ansatz_by_name(get_string(j, "name", what), static_cast<std::size_t>(n), fields, delta_t, hbar);
        } catch (const std::invalid_argument &e) {
            throw InputError(std::string("ansatz: ") + e.what());
        }
    }
    check_fields(j, what, {"n_qubits", "terms"}, {"bounds", "two_spin_only"});
    const long n = get_integer(j, "n_qubits", what);
    if (n < 1 || n > 10) {
        throw InputError("ansatz: n_qubits must be between 1 and 10");
    }
    CouplingAnsatz a;
    a.n_qubits = static_cast<std::size_t>(n);
    if (!j["terms"].is_array()) {
        throw InputError("ansatz: \"terms\" must be an array");
    }
    for (const Json &t : j["terms"]) {
        CouplingTerm term;
        if (t.is_array()) {
            for (const Json &s : t) {
                term.strings.push_back(read_string(s, what));
            }
        } else {
            term.strings.push_back(read_string(t, what));
        }
        a.terms.push_back(std::move(term));
    }
    if (j.contains("bounds")) {
        if (!j["bounds"].is_array()) {
            throw InputError("ansatz: \"bounds\" must be an array of [lo, hi] pairs");
        }
        for (const Json &b : j["bounds"]) {
            const std::vector<double> pair = read_number_array(b, "ansatz bounds");
            if (pair.size() != 2) {
                throw InputError("ansatz: every bound must be a [lo, hi] pair");
            }
            a.bounds.emplace_back(pair[0], pair[1]);
        }
    } else {
        a.bounds.assign(a.terms.size(), default_coupling_bounds(delta_t, hbar));
    }
    if (j.contains("two_spin_only")) {
        if (!j["two_spin_only"].is_boolean()) {
            throw InputError("ansatz: \"two_spin_only\" must be a boolean");
        }
        a.two_spin_only = j["two_spin_only"].get<bool>();
    }
    try {
        a.validate();
    } catch (const std::invalid_argument &e) {
        throw InputError(std::string("ansatz: ") + e.what());
    }
    return a;
}

Json config_to_json(const SearchConfig &c) {
    return Json{{"restarts", c.restarts},
                {"max_evaluations", c.max_evaluations},
                {"seed", c.seed},
                {"target_leakage", c.target_leakage},
                {"optimizer", to_string(c.optimizer)},
                {"metric", to_string(c.metric)},
                {"threads", c.threads}};
}

SearchConfig config_from_json(const Json &j) {
    constexpr std::string_view what = "search config";
    check_fields(j, what, {},
                 {"restarts", "max_evaluations", "seed", "target_leakage", "optimizer", "metric", "threads"});
    SearchConfig c;
    auto count = [&](std::string_view key, std::size_t fallback) {
        if (!j.contains(key)) {
            return fallback;
        }
        const long v = get_integer(j, key, what);
        if (v < 1) {
            throw InputError(std::string(what) + ": \"" + std::string(key) + "\" must be at least 1");
        }
        return static_cast<std::size_t>(v);
    };
    c.restarts = count("restarts", c.restarts);
    c.max_evaluations = count("max_evaluations", c.max_evaluations);
    c.threads = count("threads", c.threads);
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) {
            throw InputError("search config: \"seed\" must be a nonnegative integer");
        }
        c.seed = j["seed"].get<std::uint64_t>();
    }
    c.target_leakage = get_number_or(j, "target_leakage", c.target_leakage, what);
    try {
        if (j.contains("optimizer")) {
            c.optimizer = optimizer_from_string(get_string(j, "optimizer", what));
        }
        if (j.contains("metric")) {
            c.metric = metric_from_string(get_string(j, "metric", what));
        }
        c.validate();
    } catch (const std::invalid_argument &e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
    return c;
}

Json to_json(const SearchResult &r, const CouplingAnsatz &a, std::string_view spec_name,
             const SearchConfig &config, double delta_t, double hbar) {
    Json history = Json::array();
    for (const RestartHistory &h : r.history) {
        Json points = Json::array();
        for (const HistoryPoint &p : h.points) {
            points.push_back(Json::array({p.evaluation, p.best_leakage}));
        }
        history.push_back(Json{{"restart", h.restart},
                               {"evaluations", h.evaluations},
                               {"best_leakage", h.best_leakage},
                               {"improvements", points}});
    }
    Json best_terms = r.best_coefficients.empty() ? Json::array() : polynomial_to_json(a.hamiltonian(r.best_coefficients));
    return Json{{"schema", kSchema},
                {"kind", "search_result"},
                {"spec", spec_name},
                {"delta_t", delta_t},
                {"hbar", hbar},
                {"ansatz", ansatz_to_json(a)},
                {"config", config_to_json(config)},
                {"target_met", r.target_met},
                {"best_leakage", r.best_leakage},
                {"best_coefficients", number_array(r.best_coefficients)},
                {"best_terms", best_terms},
                {"evaluations_used", r.evaluations_used},
                {"history", history}};
}

std::string history_csv(const SearchResult &r) {
    std::string out = "restart,evaluation,best_leakage\n";
    for (const RestartHistory &h : r.history) {
        for (const HistoryPoint &p : h.points) {
            out += std::to_string(h.restart) + "," + std::to_string(p.evaluation) + "," +
                   format_double(p.best_leakage) + "\n";
        }
    }
    return out;
}

Json to_json(const RunManifest &m) {
    Json j{{"schema", kSchema}, {"kind", "manifest"}, {"command", m.command}, {"arguments", m.arguments},
           {"config", m.config}};
    j["seed"] = m.seed ? Json(*m.seed) : Json(nullptr);
    j["version"] = m.version;
    j["started_at"] = m.started_at;
    j["wall_clock_seconds"] = m.wall_clock_seconds;
    j["exit_code"] = m.exit_code;
    return j;
}

} // namespace gateforge
