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

#include "gateforge/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace gateforge {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

void require_positive_units(double delta_t, double hbar) {
    if (!(delta_t > 0.0) || !(hbar > 0.0)) {
        throw DomainError("delta_t and hbar must be positive");
    }
}

void require_branch_size(const BranchChoice &b, std::size_t n, const char *who) {
    if (b.size() != n) {
        throw DimensionError(std::string(who) + ": expected " + std::to_string(n) + " branch integers, got " +
                             std::to_string(b.size()));
    }
}

Complex cis(double a) { return std::polar(1.0, a); }

bool angles_match(double got, double want) { return std::abs(got - want) <= 1e-12 * (1.0 + std::abs(want)); }

} // namespace

double EnergyLevels::spread() const {
    if (energies.empty()) {
        return 0.0;
    }
    const auto [lo, hi] = std::minmax_element(energies.begin(), energies.end());
    return *hi - *lo;
}

EnergyLevels energy_levels(const CMatrix &u, const BranchChoice &branch, double delta_t, double hbar) {
    require_positive_units(delta_t, hbar);
    const std::vector<EigenCluster> clusters = unitary_clusters(u);
    require_branch_size(branch, clusters.size(), "energy_levels");
    EnergyLevels out;
    out.branch = branch;
    out.delta_t = delta_t;
    out.hbar = hbar;
    for (std::size_t k = 0; k < clusters.size(); ++k) {
        const double e =
            hbar * (clusters[k].principal_phase + 2.0 * kPi * static_cast<double>(branch.integers[k])) / delta_t;
        for (std::size_t m = 0; m < clusters[k].vectors.size(); ++m) {
            out.energies.push_back(e);
            out.eigenvalues.push_back(clusters[k].eigenvalue);
        }
    }
    return out;
}

BranchChoice branch_for_energies(const CMatrix &u, std::span<const double> target_energies, double delta_t,
                                 double hbar) {
    require_positive_units(delta_t, hbar);
    if (target_energies.size() != u.dim()) {
        throw DimensionError("branch_for_energies: need one target energy per eigenvalue");
    }
    const std::vector<EigenCluster> clusters = unitary_clusters(u);
    std::vector<std::optional<double>> assigned(clusters.size());
    std::vector<std::size_t> hits(clusters.size(), 0);
    BranchChoice branch = BranchChoice::principal(clusters.size());
    for (double e : target_energies) {
        const double theta = e * delta_t / hbar;
        const Complex target = cis(-theta);
        std::size_t best = clusters.size();
        double best_dist = Tolerances::eigen_cluster;
        for (std::size_t k = 0; k < clusters.size(); ++k) {
            const double d = std::abs(target - clusters[k].eigenvalue);
            if (d < best_dist) {
                best = k;
                best_dist = d;
            }
        }
        if (best == clusters.size()) {
            throw DomainError("branch_for_energies: energy " + std::to_string(e) +
                              " does not correspond to any eigenvalue");
        }
        if (assigned[best] && std::abs(*assigned[best] - theta) > 1e-9 * (1.0 + std::abs(theta))) {
            throw DomainError("branch_for_energies: distinct energies fall into one degenerate eigenvalue "
                              "cluster; the Hamiltonian is not determined by per-cluster branches");
        }
        assigned[best] = theta;
        ++hits[best];
        branch.integers[best] = std::lround((theta - clusters[best].principal_phase) / (2.0 * kPi));
    }
    for (std::size_t k = 0; k < clusters.size(); ++k) {
        if (hits[k] != clusters[k].vectors.size()) {
            throw DomainError("branch_for_energies: target multiplicities do not match the spectrum");
        }
    }
    return branch;
}

PauliPolynomial synthesize(const CMatrix &u, const BranchChoice &branch, double delta_t, double hbar) {
    return decompose(logm_unitary(u, branch, delta_t, hbar));
}

EnergyLevels not1_energies(const Not1Params &p, const BranchChoice &n1_n2, double delta_t, double hbar) {
    require_positive_units(delta_t, hbar);
    require_branch_size(n1_n2, 2, "not1_energies");
    const double unit = hbar / delta_t;
    const double base = -0.5 * unit * (p.alpha + p.beta);
    const double half_sum = 0.5 * (p.alpha + p.beta);
    EnergyLevels out;
    out.energies = {base + 2.0 * kPi * unit * static_cast<double>(n1_n2.integers[0]),
                    base + 2.0 * kPi * unit * (static_cast<double>(n1_n2.integers[1]) + 0.5)};
    out.eigenvalues = {cis(half_sum), -cis(half_sum)};
    out.branch = n1_n2;
    out.delta_t = delta_t;
    out.hbar = hbar;
    return out;
}

PauliPolynomial hamiltonian_not1(long n, double gamma, double delta_t, double hbar) {
    require_positive_units(delta_t, hbar);
    const double strength = kPi * hbar / delta_t * (static_cast<double>(n) - 0.5);
    PauliPolynomial h(1);
    h.add_term("X", strength * std::cos(gamma));
    h.add_term("Y", strength * std::sin(gamma));
    return h;
}

PauliPolynomial hamiltonian_not1_general(const Not1Params &p, const BranchChoice &n1_n2, double delta_t,
                                         double hbar) {
    require_positive_units(delta_t, hbar);
    require_branch_size(n1_n2, 2, "hamiltonian_not1_general");
    const double unit = hbar / delta_t;
    const double n1 = static_cast<double>(n1_n2.integers[0]);
    const double n2 = static_cast<double>(n1_n2.integers[1]);
    const double half_diff = 0.5 * (p.alpha - p.beta);
    const double transverse = kPi * unit * (n1 - n2 - 0.5);
    PauliPolynomial h(1);
    h.add_term("I", -0.5 * unit * (p.alpha + p.beta) + kPi * unit * (n1 + n2 + 0.5));
    h.add_term("X", transverse * std::cos(half_diff));
    h.add_term("Y", transverse * std::sin(half_diff));
    return h;
}

EnergyLevels not2_energies(const Not2RestrictedParams &p, const BranchChoice &n, double delta_t, double hbar) {
    require_branch_size(n, 4, "not2_energies");
    EnergyLevels out = not1_energies({p.alpha, p.beta}, BranchChoice{{n.integers[0], n.integers[1]}}, delta_t, hbar);
    const double unit = hbar / delta_t;
    out.energies.push_back(unit * (-p.rho + 2.0 * kPi * static_cast<double>(n.integers[2])));
    out.energies.push_back(unit * (-p.delta + 2.0 * kPi * static_cast<double>(n.integers[3])));
    out.eigenvalues.push_back(cis(p.rho));
    out.eigenvalues.push_back(cis(p.delta));
    out.branch = n;
    return out;
}

Not2Parts hamiltonian_not2_parts(double ising_energy, long n, double gamma, double delta_t, double hbar) {
    require_positive_units(delta_t, hbar);
    const double strength = kPi * hbar / (2.0 * delta_t) * (static_cast<double>(n) - 0.5);
    const double c = strength * std::cos(gamma);
    const double s = strength * std::sin(gamma);
    Not2Parts parts{PauliPolynomial(2), PauliPolynomial(2), PauliPolynomial(2)};
    parts.ising.add_term("ZZ", -ising_energy);
    parts.cos_part.add_term("XX", c);
    parts.cos_part.add_term("YY", -c);
    parts.sin_part.add_term("XY", s);
    parts.sin_part.add_term("YX", s);
    return parts;
}

PauliPolynomial hamiltonian_not2(double ising_energy, long n, double gamma, double delta_t, double hbar) {
    const Not2Parts parts = hamiltonian_not2_parts(ising_energy, n, gamma, delta_t, hbar);
    return parts.ising + parts.cos_part + parts.sin_part;
}

PauliPolynomial hamiltonian_not2_general(const Not2RestrictedParams &p, const BranchChoice &n, double delta_t,
                                         double hbar) {
    const EnergyLevels lv = not2_energies(p, n, delta_t, hbar);
    const double e1 = lv.energies[0], e2 = lv.energies[1], e3 = lv.energies[2], e4 = lv.energies[3];
    const double g = 0.5 * (p.alpha - p.beta);
    PauliPolynomial h(2);
    // Qubit 0 is the input spin I, qubit 1 the output spin O.
    h.add_term("II", (e1 + e2 + e3 + e4) / 4.0);
    h.add_term("ZI", (e3 - e4) / 4.0);
    h.add_term("IZ", -(e3 - e4) / 4.0);
    h.add_term("ZZ", (e1 + e2 - e3 - e4) / 4.0);
    const double t = (e1 - e2) / 4.0;
    h.add_term("XX", t * std::cos(g));
    h.add_term("YY", -t * std::cos(g));
    h.add_term("XY", t * std::sin(g));
    h.add_term("YX", t * std::sin(g));
    return h;
}

Not2Reduction reduce_to_not2(const Not2RestrictedParams &p, const BranchChoice &n, double delta_t, double hbar) {
    const EnergyLevels lv = not2_energies(p, n, delta_t, hbar);
    const double e1 = lv.energies[0], e2 = lv.energies[1], e3 = lv.energies[2], e4 = lv.energies[3];
    const double scale = 1.0 + std::abs(e3) + std::abs(e4);
    if (std::abs(e3 - e4) > 1e-12 * scale) {
        throw DomainError("reduce_to_not2: E3 != E4, the Hamiltonian keeps single-spin field terms",
                          std::abs(e3 - e4));
    }
    // E1 - E2 = 2 pi hbar (N - 1/2) / dt must hold for an integer N.
    const double n_real = (e1 - e2) * delta_t / (2.0 * kPi * hbar) + 0.5;
    const long n_int = std::lround(n_real);
    if (std::abs(n_real - static_cast<double>(n_int)) > 1e-9) {
        throw DomainError("reduce_to_not2: E1 - E2 is not 2 pi hbar (N - 1/2) / dt", n_real);
    }
    return {-(e1 + e2 - e3 - e4) / 4.0, n_int, 0.5 * (p.alpha - p.beta)};
}

XorAngleSolution solve_xor_constraints(double alpha, double beta, double gamma) {
    XorAngleSolution s{};
    s.alpha = alpha;
    s.beta = beta;
    s.gamma = gamma;
    s.delta = -3.0 * kPi - alpha - beta - gamma;
    s.rho = -kPi + beta;
    s.omega_angle = -2.0 * kPi - alpha - beta - gamma;
    s.xi = -kPi + gamma;
    s.eta = kPi + alpha;
    s.mu = s.params().mu();
    s.nu = s.params().nu();
    return s;
}

CMatrix FirstOrderForm::to_matrix() const {
    return CMatrix{{0.0, x, y, 0.0},
                   {std::conj(x), 0.0, 0.0, y},
                   {std::conj(y), 0.0, 0.0, x},
                   {0.0, std::conj(y), std::conj(x), 0.0}};
}

PQMatrices build_pq(const XorAngleSolution &sol, double delta_t, double hbar) {
    require_positive_units(delta_t, hbar);
    const XorAngleSolution want = solve_xor_constraints(sol.alpha, sol.beta, sol.gamma);
    const bool ok = angles_match(sol.delta, want.delta) && angles_match(sol.rho, want.rho) &&
                    angles_match(sol.omega_angle, want.omega_angle) && angles_match(sol.xi, want.xi) &&
                    angles_match(sol.eta, want.eta) && angles_match(sol.mu, want.mu) &&
                    angles_match(sol.nu, want.nu);
    if (!ok) {
        throw DomainError("build_pq: angles do not satisfy the XOR constraints");
    }
    const double a = sol.alpha, b = sol.beta, g = sol.gamma, d = sol.delta;
    const double r = sol.rho, w = sol.omega_angle, x = sol.xi, e = sol.eta;
    const double mu = sol.mu, nu = sol.nu;
    const Complex one_p_i(1.0, 1.0), one_m_i(1.0, -1.0);

    // Spectral projections of V and W onto eigenphases mu + k pi/2 (and nu
    // + k pi/2), in the original B (x) C basis, scaled by 4/pi.
    const Complex dp = 4.0 / kPi * mu + 3.0;
    CMatrix p{{dp, -one_p_i * cis(mu - a), -one_m_i * cis(d - mu), -cis(2.0 * mu - a - g)},
              {-one_m_i * cis(a - mu), dp, -cis(2.0 * mu - b - g), -one_p_i * cis(mu - g)},
              {-one_p_i * cis(mu - d), -cis(b + g - 2.0 * mu), dp, -one_m_i * cis(b - mu)},
              {-cis(a + g - 2.0 * mu), -one_m_i * cis(g - mu), -one_p_i * cis(mu - b), dp}};
    const Complex dq = 4.0 / kPi * nu + 3.0;
    CMatrix q{{dq, -one_m_i * cis(r - nu), -one_p_i * cis(nu - x), -cis(r + w - 2.0 * nu)},
              {-one_p_i * cis(nu - r), dq, -cis(w + e - 2.0 * nu), -one_m_i * cis(w - nu)},
              {-one_m_i * cis(x - nu), -cis(2.0 * nu - w - e), dq, -one_p_i * cis(nu - e)},
              {-cis(2.0 * nu - r - w), -one_p_i * cis(nu - w), -one_m_i * cis(e - nu), dq}};
    p *= kPi / 4.0;
    q *= kPi / 4.0;

    const double unit = -hbar / delta_t;
    const CMatrix big_p = p * unit;
    const CMatrix big_q = q * unit;
    PQMatrices out{p, q, big_p + big_q, big_p - big_q, {}};
    out.first_order = FirstOrderForm{out.p_minus_q(0, 1), out.p_minus_q(0, 2)};
    return out;
}

PauliPolynomial hamiltonian_xor(double alpha, double beta, double gamma, double delta_t, double hbar) {
    const PQMatrices pq = build_pq(solve_xor_constraints(alpha, beta, gamma), delta_t, hbar);
    const CMatrix id2 = CMatrix::identity(2);
    const CMatrix z{{1.0, 0.0}, {0.0, -1.0}};
    const CMatrix h = (kron(id2, pq.p_plus_q) + kron(z, pq.p_minus_q)) * 0.5;
    return decompose(h);
}

PauliPolynomial hamiltonian_xor_closed_form(double alpha, double beta, double gamma, double delta_t,
                                            double hbar) {
    require_positive_units(delta_t, hbar);
    const double k = -kPi * hbar / (8.0 * delta_t);
    const double s = alpha + beta + gamma;
    const double ag = alpha + gamma, bg = beta + gamma;
    using std::cos;
    using std::sin;
    PauliPolynomial h(3);
    h.add_term("ZIX", k * kSqrt2 * (sin(alpha) + sin(beta)));
    h.add_term("ZIY", -k * kSqrt2 * (cos(alpha) - cos(beta)));
    h.add_term("ZXI", k * kSqrt2 * (sin(gamma) + sin(s)));
    h.add_term("ZYI", -k * kSqrt2 * (cos(gamma) + cos(s)));
    h.add_term("IZX", k * kSqrt2 * (sin(alpha) - sin(beta)));
    h.add_term("IZY", -k * kSqrt2 * (cos(alpha) + cos(beta)));
    h.add_term("IXZ", -k * kSqrt2 * (sin(gamma) - sin(s)));
    h.add_term("IYZ", k * kSqrt2 * (cos(gamma) - cos(s)));
    h.add_term("IXX", -k * (sin(ag) + sin(bg)));
    h.add_term("IXY", k * (cos(ag) - cos(bg)));
    h.add_term("IYX", k * (cos(ag) + cos(bg)));
    h.add_term("IYY", k * (sin(ag) - sin(bg)));
    return h;
}

const std::vector<PauliString> &xor_interaction_strings() {
    static const std::vector<PauliString> strings = [] {
        std::vector<PauliString> v;
        for (const char *s : {"ZIX", "ZIY", "ZXI", "ZYI", "IZX", "IZY", "IXZ", "IYZ", "IXX", "IXY", "IYX", "IYY"}) {
            v.emplace_back(s);
        }
        return v;
    }();
    return strings;
}

std::vector<double> xor_block_energies(const XorAngleSolution &sol, double delta_t, double hbar) {
    require_positive_units(delta_t, hbar);
    std::vector<double> out;
    for (double base : {sol.mu, sol.nu}) {
        for (int k = 0; k < 4; ++k) {
            out.push_back(-hbar / delta_t * (base + 0.5 * kPi * k));
        }
    }
    return out;
}

BranchChoice xor_reference_branch(const XorAngleSolution &sol, double delta_t, double hbar) {
    const std::vector<double> targets = xor_block_energies(sol, delta_t, hbar);
    return branch_for_energies(xor_unitary(sol.params()), targets, delta_t, hbar);
}

} // namespace gateforge
