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

#ifndef GATEFORGE_SEARCH_HPP
#define GATEFORGE_SEARCH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gateforge/gate_families.hpp"
#include "gateforge/pauli.hpp"

namespace gateforge {

/// One tunable coupling: a unit-weight sum of Pauli strings sharing a single
/// coefficient (e.g. XX + YY for an XY bond).
struct CouplingTerm {
    std::vector<PauliString> strings;

    std::string label() const;
    std::size_t max_weight() const;
};

/// Hamiltonian family sum_i c_i term_i with box bounds on every c_i.
struct CouplingAnsatz {
    std::size_t n_qubits = 0;
    std::vector<CouplingTerm> terms;
    std::vector<std::pair<double, double>> bounds;
    bool two_spin_only = true;

    /// Throws std::invalid_argument on an empty ansatz, mismatched string
    /// lengths or bounds, inverted bounds, or (with two_spin_only) a term of
    /// weight above two.
    void validate() const;

    PauliPolynomial hamiltonian(std::span<const double> coeffs) const;

    /// One term per string, every bound set to the default box.
    static CouplingAnsatz from_strings(std::size_t n_qubits, std::span<const PauliString> strings,
                                       double delta_t = 1.0, double hbar = 1.0);
};

/// [-2 pi hbar / dt, 2 pi hbar / dt].
std::pair<double, double> default_coupling_bounds(double delta_t = 1.0, double hbar = 1.0);

/// The twelve-string tensor family of the closed-form XOR Hamiltonians.
CouplingAnsatz xor_tensor_ansatz(double delta_t = 1.0, double hbar = 1.0);
/// XX, YY, XY, YX on two spins: the transverse part of the two-spin NOT.
CouplingAnsatz not2_tensor_ansatz(double delta_t = 1.0, double hbar = 1.0);

/// Conventional couplings on every pair of qubits. `with_fields` adds
/// independent X, Y, Z fields on every spin.
CouplingAnsatz ising_ansatz(std::size_t n_qubits, bool with_fields = false, double delta_t = 1.0,
                            double hbar = 1.0);
CouplingAnsatz xy_ansatz(std::size_t n_qubits, bool with_fields = false, double delta_t = 1.0,
                         double hbar = 1.0);
CouplingAnsatz heisenberg_ansatz(std::size_t n_qubits, bool with_fields = false, double delta_t = 1.0,
                                 double hbar = 1.0);
/// "xor-tensor", "not2-tensor", "ising", "xy", "heisenberg".
CouplingAnsatz ansatz_by_name(std::string_view name, std::size_t n_qubits, bool with_fields = false,
                              double delta_t = 1.0, double hbar = 1.0);

enum class OptimizerKind { simplex, random };
/// What the simplex ranks its vertices by. `total` is the summed leakage of
/// all basis inputs (smooth, zero exactly when `worst` is zero).
enum class SimplexMetric { total, worst };

struct SearchConfig {
    std::size_t restarts = 20;
    std::size_t max_evaluations = 2000; // per restart
    std::uint64_t seed = 1;
    double target_leakage = 1e-6;
    OptimizerKind optimizer = OptimizerKind::simplex;
    SimplexMetric metric = SimplexMetric::total;
    std::size_t threads = 1;

    void validate() const;
};

std::string_view to_string(OptimizerKind k);
std::string_view to_string(SimplexMetric m);
OptimizerKind optimizer_from_string(std::string_view s);
SimplexMetric metric_from_string(std::string_view s);

struct HistoryPoint {
    std::size_t evaluation; // 1-based within the restart
    double best_leakage;
};

struct RestartHistory {
    std::size_t restart;
    std::vector<HistoryPoint> points; // recorded on improvement
    double best_leakage;
    std::size_t evaluations;
};

struct SearchResult {
    std::vector<double> best_coefficients;
    double best_leakage = 1.0;
    std::size_t evaluations_used = 0;
    bool target_met = false;
    std::vector<RestartHistory> history;
};

/// Worst-case truth-table leakage of exp(-i H dt / hbar) with H built from
/// the ansatz.
double objective(std::span<const double> coeffs, const CouplingAnsatz &ansatz, const GateSpec &spec,
                 double delta_t = 1.0, double hbar = 1.0);

/// Seeded multi-restart derivative-free search. Restarts run in order (or in
/// waves of `threads`) and the result covers restarts up to the first that
/// meets the target, so it does not depend on the thread count.
SearchResult run_search(const CouplingAnsatz &ansatz, const GateSpec &spec, const SearchConfig &config,
                        double delta_t = 1.0, double hbar = 1.0);

} // namespace gateforge

#endif // GATEFORGE_SEARCH_HPP
