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

#ifndef GATEFORGE_SYNTHESIS_HPP
#define GATEFORGE_SYNTHESIS_HPP

#include <span>
#include <vector>

#include "gateforge/gate_families.hpp"
#include "gateforge/linalg.hpp"
#include "gateforge/pauli.hpp"

namespace gateforge {

/// Energies (one per eigenvalue, cluster order, with multiplicity) together
/// with the branch integers that produced them.
struct EnergyLevels {
    std::vector<double> energies;
    std::vector<Complex> eigenvalues; // source eigenvalue of each energy
    BranchChoice branch;
    double delta_t = 1.0;
    double hbar = 1.0;

    /// max - min of the energies.
    double spread() const;
};

/// Energies from the pipeline's spectrum of U with the given per-cluster
/// branch integers.
EnergyLevels energy_levels(const CMatrix &u, const BranchChoice &branch, double delta_t = 1.0,
                           double hbar = 1.0);

/// Branch integers that make the pipeline reproduce `target_energies` (any
/// order, one entry per eigenvalue). Every cluster must be hit, and targets
/// landing in one cluster must coincide; otherwise DomainError.
BranchChoice branch_for_energies(const CMatrix &u, std::span<const double> target_energies,
                                 double delta_t = 1.0, double hbar = 1.0);

/// Generic pipeline: eigendecomposition, branch energies, logarithm, Pauli
/// expansion. Keeps the identity term.
PauliPolynomial synthesize(const CMatrix &u, const BranchChoice &branch, double delta_t = 1.0,
                           double hbar = 1.0);

// -- Single-qubit NOT ------------------------------------------------------

/// E1 = -hbar(alpha+beta)/(2 dt) + 2 pi hbar N1 / dt and
/// E2 = -hbar(alpha+beta)/(2 dt) + 2 pi hbar (N2 + 1/2) / dt, with
/// `n1_n2` = (N1, N2).
EnergyLevels not1_energies(const Not1Params &p, const BranchChoice &n1_n2, double delta_t = 1.0,
                           double hbar = 1.0);

/// Transverse-field NOT Hamiltonian pi hbar/dt (N - 1/2)[cos g X + sin g Y].
PauliPolynomial hamiltonian_not1(long n, double gamma, double delta_t = 1.0, double hbar = 1.0);

/// Full single-qubit NOT Hamiltonian including its identity term.
PauliPolynomial hamiltonian_not1_general(const Not1Params &p, const BranchChoice &n1_n2,
                                         double delta_t = 1.0, double hbar = 1.0);

// -- Two-spin NOT ----------------------------------------------------------

/// E1, E2 as for the single-qubit NOT and E3 = (-rho + 2 pi N3) hbar/dt,
/// E4 = (-delta + 2 pi N4) hbar/dt, with `n` = (N1, N2, N3, N4).
EnergyLevels not2_energies(const Not2RestrictedParams &p, const BranchChoice &n, double delta_t = 1.0,
                           double hbar = 1.0);

/// -E ZZ + (pi hbar / 2dt)(N - 1/2)[cos g (XX - YY) + sin g (XY + YX)].
PauliPolynomial hamiltonian_not2(double ising_energy, long n, double gamma, double delta_t = 1.0,
                                 double hbar = 1.0);

/// The three pieces of hamiltonian_not2: the Ising term and the cos/sin
/// transverse parts.
struct Not2Parts {
    PauliPolynomial ising;
    PauliPolynomial cos_part;
    PauliPolynomial sin_part;
};
Not2Parts hamiltonian_not2_parts(double ising_energy, long n, double gamma, double delta_t = 1.0,
                                 double hbar = 1.0);

/// Two-spin NOT Hamiltonian for the restricted one-phase-per-row family,
/// expressed through E1..E4, including the identity term and the
/// (E3 - E4)/4 (Z_I - Z_O) field terms.
PauliPolynomial hamiltonian_not2_general(const Not2RestrictedParams &p, const BranchChoice &n,
                                         double delta_t = 1.0, double hbar = 1.0);

/// Parameters of hamiltonian_not2 equivalent to a restricted-family
/// Hamiltonian with E3 = E4.
struct Not2Reduction {
    double ising_energy;
    long n;
    double gamma;
};
/// Throws DomainError if E3 != E4 or if E1 - E2 is not 2 pi hbar (N - 1/2)/dt
/// for an integer N.
Not2Reduction reduce_to_not2(const Not2RestrictedParams &p, const BranchChoice &n, double delta_t = 1.0,
                             double hbar = 1.0);

// -- Three-spin XOR ----------------------------------------------------------

/// alpha, beta, gamma free; the rest fixed so that both diagonal phases
/// vanish and P - Q is first order. Derived angles are not reduced mod 2 pi.
struct XorAngleSolution {
    double alpha, beta, gamma;
    double delta, rho, omega_angle, xi, eta;
    double mu, nu;

    XorParams params() const { return {alpha, beta, gamma, delta, rho, omega_angle, xi, eta}; }
};

XorAngleSolution solve_xor_constraints(double alpha, double beta, double gamma);

/// I_B (x) [[0, X], [X*, 0]]_C + [[0, Y], [Y*, 0]]_B (x) I_C.
struct FirstOrderForm {
    Complex x;
    Complex y;
    CMatrix to_matrix() const;
};

/// Reduced generators p, q (V = exp(ip), W = exp(iq)) and the physical
/// P = -(hbar/dt) p, Q = -(hbar/dt) q combinations.
struct PQMatrices {
    CMatrix p;
    CMatrix q;
    CMatrix p_plus_q;
    CMatrix p_minus_q;
    FirstOrderForm first_order; // read off P - Q
};

/// Throws DomainError if `sol` does not satisfy the XOR constraints.
PQMatrices build_pq(const XorAngleSolution &sol, double delta_t = 1.0, double hbar = 1.0);

/// 2H = P + Q + sigma_zA (P - Q), expanded in Pauli strings.
PauliPolynomial hamiltonian_xor(double alpha, double beta, double gamma, double delta_t = 1.0,
                                double hbar = 1.0);

/// The same family written term by term in closed form.
PauliPolynomial hamiltonian_xor_closed_form(double alpha, double beta, double gamma, double delta_t = 1.0,
                                            double hbar = 1.0);

/// The twelve two-spin strings the XOR family is built from.
const std::vector<PauliString> &xor_interaction_strings();

/// Energies of the XOR Hamiltonian: -(hbar/dt){mu, mu + pi/2, mu + pi, mu + 3pi/2}
/// for each block.
std::vector<double> xor_block_energies(const XorAngleSolution &sol, double delta_t = 1.0,
                                       double hbar = 1.0);

/// Branch integers under which synthesize(xor_unitary(sol)) uses the
/// eigenvalue choice above.
BranchChoice xor_reference_branch(const XorAngleSolution &sol, double delta_t = 1.0, double hbar = 1.0);

} // namespace gateforge

#endif // GATEFORGE_SYNTHESIS_HPP
