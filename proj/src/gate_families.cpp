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

#include "gateforge/gate_families.hpp"

#include <algorithm>
#include <cmath>

namespace gateforge {

namespace {

Complex phase(double angle) { return std::polar(1.0, angle); }

std::vector<std::size_t> indices_where(std::size_t n, auto &&pred) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
        if (pred(i)) {
            out.push_back(i);
        }
    }
    return out;
}

} // namespace

GateSpec make_gate_spec(std::string name, std::size_t n_qubits, std::vector<SemanticRow> rows) {
    GateSpec spec;
    spec.name = std::move(name);
    spec.n_qubits = n_qubits;
    const std::size_t dim = spec.dim();
    spec.allowed.assign(dim, std::vector<bool>(dim, true));
    for (const SemanticRow &row : rows) {
        for (std::size_t in : row.inputs) {
            if (in >= dim) {
                throw std::invalid_argument("make_gate_spec: input index out of range");
            }
            for (std::size_t out = 0; out < dim; ++out) {
                spec.allowed[out][in] =
                    std::find(row.outputs.begin(), row.outputs.end(), out) != row.outputs.end();
            }
        }
        for (std::size_t out : row.outputs) {
            if (out >= dim) {
                throw std::invalid_argument("make_gate_spec: output index out of range");
            }
        }
    }
    spec.rows = std::move(rows);
    return spec;
}

GateSpec not1_spec() {
    return make_gate_spec("not1", 1, {{"1->0", {0}, {1}}, {"0->1", {1}, {0}}});
}

GateSpec not2_spec() {
    constexpr std::size_t n = 2;
    auto input_up = [](std::size_t i) { return qubit_is_up(i, 0, n); };
    auto output_up = [](std::size_t i) { return qubit_is_up(i, 1, n); };
    return make_gate_spec(
        "not2", n,
        {{"I=1 -> O=0", indices_where(n, input_up), indices_where(n, [&](std::size_t i) { return !output_up(i); })},
         {"I=0 -> O=1", indices_where(n, [&](std::size_t i) { return !input_up(i); }),
          indices_where(n, output_up)}});
}

GateSpec xor_spec() {
    constexpr std::size_t n = 3;
    std::vector<SemanticRow> rows;
    for (int a : {1, 0}) {
        for (int b : {1, 0}) {
            const bool c_up = (a ^ b) == 1;
            SemanticRow row;
            row.label = "AB=" + std::to_string(a) + std::to_string(b) + " -> C=" + std::to_string(a ^ b);
            row.inputs = indices_where(n, [&](std::size_t i) {
                return qubit_is_up(i, 0, n) == (a == 1) && qubit_is_up(i, 1, n) == (b == 1);
            });
            row.outputs = indices_where(n, [&](std::size_t i) { return qubit_is_up(i, 2, n) == c_up; });
            rows.push_back(std::move(row));
        }
    }
    return make_gate_spec("xor", n, std::move(rows));
}

GateSpec unconstrained_spec(std::size_t n_qubits) { return make_gate_spec("any", n_qubits, {}); }

GateSpec spec_by_name(std::string_view name) {
    if (name == "not1") {
        return not1_spec();
    }
    if (name == "not2") {
        return not2_spec();
    }
    if (name == "xor") {
        return xor_spec();
    }
    throw std::invalid_argument("unknown gate spec \"" + std::string(name) + "\" (expected not1, not2 or xor)");
}

CMatrix not1_unitary(const Not1Params &p) { return CMatrix{{0.0, phase(p.beta)}, {phase(p.alpha), 0.0}}; }

CMatrix not2_general_unitary(const Not2GeneralParams &p) {
    const double big_omega = std::clamp(p.Omega, 0.0, kPi / 2.0);
    const double upsilon = std::clamp(p.Upsilon, 0.0, kPi / 2.0);
    const double so = std::sin(big_omega), co = std::cos(big_omega);
    const double su = std::sin(upsilon), cu = std::cos(upsilon);
    CMatrix u(4);
    u(0, 2) = phase(p.chi) * so;
    u(0, 3) = phase(p.beta) * co;
    u(1, 0) = -phase(p.alpha + p.rho - p.eta) * su;
    u(1, 1) = phase(p.rho) * cu;
    u(2, 2) = phase(p.delta) * co;
    u(2, 3) = -phase(p.beta + p.delta - p.chi) * so;
    u(3, 0) = phase(p.alpha) * cu;
    u(3, 1) = phase(p.eta) * su;
    return u;
}

CMatrix not2_restricted_unitary(const Not2RestrictedParams &p) {
    CMatrix u(4);
    u(0, 3) = phase(p.beta);
    u(1, 1) = phase(p.rho);
    u(2, 2) = phase(p.delta);
    u(3, 0) = phase(p.alpha);
    return u;
}

CMatrix xor_v_block(const XorParams &p) {
    CMatrix v(4);
    v(0, 2) = phase(p.delta);
    v(1, 0) = phase(p.alpha);
    v(2, 3) = phase(p.beta);
    v(3, 1) = phase(p.gamma);
    return v;
}

CMatrix xor_w_block(const XorParams &p) {
    CMatrix w(4);
    w(0, 1) = phase(p.rho);
    w(1, 3) = phase(p.omega_angle);
    w(2, 0) = phase(p.xi);
    w(3, 2) = phase(p.eta);
    return w;
}

CMatrix xor_unitary(const XorParams &p) {
    const CMatrix v = xor_v_block(p);
    const CMatrix w = xor_w_block(p);
    CMatrix u(8);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            u(r, c) = v(r, c);
            u(r + 4, c + 4) = w(r, c);
        }
    }
    return u;
}

double pattern_leakage(const CMatrix &u, const GateSpec &spec) {
    if (u.dim() != spec.dim()) {
        throw DimensionError("pattern_leakage: unitary is " + std::to_string(u.dim()) + "x" +
                             std::to_string(u.dim()) + " but spec \"" + spec.name + "\" needs " +
                             std::to_string(spec.dim()));
    }
    double leak = 0.0;
    for (std::size_t r = 0; r < u.dim(); ++r) {
        for (std::size_t c = 0; c < u.dim(); ++c) {
            if (!spec.allowed[r][c]) {
                leak += std::norm(u(r, c));
            }
        }
    }
    return leak;
}

} // namespace gateforge
