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

#ifndef GATEFORGE_GATE_FAMILIES_HPP
#define GATEFORGE_GATE_FAMILIES_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gateforge/linalg.hpp"

namespace gateforge {

// Basis convention used everywhere: index 0 is |11...1> (all up), then
// descending binary with 1 = up. For n qubits the state of qubit k (k = 0 is
// the leftmost, A) in basis index i is up iff bit (n - 1 - k) of i is clear.

/// Whether qubit `k` of an `n`-qubit basis index is up (logical 1).
constexpr bool qubit_is_up(std::size_t index, std::size_t k, std::size_t n) {
    return ((index >> (n - 1 - k)) & 1u) == 0;
}

/// One truth-table row: every state in span(inputs) must evolve into
/// span(outputs).
struct SemanticRow {
    std::string label;
    std::vector<std::size_t> inputs;
    std::vector<std::size_t> outputs;
};

/// Block-zero pattern plus truth-table semantics of a gate.
struct GateSpec {
    std::string name;
    std::size_t n_qubits = 0;
    /// allowed[out][in]: whether U(out, in) may be nonzero.
    std::vector<std::vector<bool>> allowed;
    std::vector<SemanticRow> rows;

    std::size_t dim() const { return std::size_t{1} << n_qubits; }
};

/// Builds a spec whose mask is derived from its rows; basis states not named
/// by any row are unconstrained.
GateSpec make_gate_spec(std::string name, std::size_t n_qubits, std::vector<SemanticRow> rows);

/// Single-qubit NOT: |1> -> |0>, |0> -> |1>.
GateSpec not1_spec();
/// Two-spin NOT of the input spin I (qubit 0) into the output spin O (qubit 1).
GateSpec not2_spec();
/// XOR of A, B deposited in C; A, B outputs and the phase of C are free.
GateSpec xor_spec();
/// No constraints at all.
GateSpec unconstrained_spec(std::size_t n_qubits);
/// "not1", "not2" or "xor"; throws std::invalid_argument otherwise.
GateSpec spec_by_name(std::string_view name);

struct Not1Params {
    double alpha = 0.0;
    double beta = 0.0;
};

struct Not2GeneralParams {
    double chi = 0.0;
    double beta = 0.0;
    double alpha = 0.0;
    double rho = 0.0;
    double eta = 0.0;
    double delta = 0.0;
    double omega_angle = 0.0;
    double Omega = 0.0;   // clamped to [0, pi/2]
    double Upsilon = 0.0; // clamped to [0, pi/2]
};

struct Not2RestrictedParams {
    double alpha = 0.0;
    double beta = 0.0;
    double rho = 0.0;
    double delta = 0.0;
};

struct XorParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    double rho = 0.0;
    double omega_angle = 0.0;
    double xi = 0.0;
    double eta = 0.0;

    /// Mean phase of the V block, (alpha + beta + gamma + delta) / 4.
    double mu() const { return (alpha + beta + gamma + delta) / 4.0; }
    /// Mean phase of the W block, (rho + omega + xi + eta) / 4.
    double nu() const { return (rho + omega_angle + xi + eta) / 4.0; }
};

/// [[0, e^{i beta}], [e^{i alpha}, 0]].
CMatrix not1_unitary(const Not1Params &p);

/// Eight-angle parametrization of every unitary with the two-spin NOT zero
/// pattern. Omega and Upsilon are clamped into [0, pi/2].
CMatrix not2_general_unitary(const Not2GeneralParams &p);

/// One phase per row and column: swaps |11> and |00>, phases |10> and |01>.
CMatrix not2_restricted_unitary(const Not2RestrictedParams &p);

/// 4x4 block acting on B (x) C when A is up.
CMatrix xor_v_block(const XorParams &p);
/// 4x4 block acting on B (x) C when A is down.
CMatrix xor_w_block(const XorParams &p);
/// Block-diagonal diag(V, W), diagonal in the A spin.
CMatrix xor_unitary(const XorParams &p);

/// Sum of |U_ij|^2 over entries the spec forbids.
double pattern_leakage(const CMatrix &u, const GateSpec &spec);

} // namespace gateforge

#endif // GATEFORGE_GATE_FAMILIES_HPP
