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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gateforge/evolution.hpp"
#include "gateforge/synthesis.hpp"
#include "support.hpp"

namespace gateforge {
namespace {

using testing::angle;

long small_int(std::mt19937_64 &rng) { return static_cast<long>(rng() % 5) - 2; }

std::vector<double> sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v;
}

TEST(EnergyLevels, PrincipalBranchOfPauliX) {
    const CMatrix x{{0.0, 1.0}, {1.0, 0.0}};
    const EnergyLevels lv = energy_levels(x, BranchChoice{{0, 0}});
    ASSERT_EQ(lv.energies.size(), 2u);
    EXPECT_NEAR(lv.energies[0], 0.0, 1e-15);
    EXPECT_NEAR(lv.energies[1], kPi, 1e-15);
    EXPECT_NEAR(lv.spread(), kPi, 1e-15);
}

TEST(EnergyLevels, ScaleWithUnits) {
    const CMatrix x{{0.0, 1.0}, {1.0, 0.0}};
    const EnergyLevels lv = energy_levels(x, BranchChoice{{1, -1}}, 0.5, 2.0);
    EXPECT_NEAR(lv.energies[0], 2.0 / 0.5 * 2.0 * kPi, 1e-12);
    EXPECT_NEAR(lv.energies[1], 2.0 / 0.5 * (kPi - 2.0 * kPi), 1e-12);
    EXPECT_THROW(energy_levels(x, BranchChoice{{0}}), DimensionError);
    EXPECT_THROW(energy_levels(x, BranchChoice{{0, 0}}, -1.0), DomainError);
}

TEST(BranchForEnergies, InvertsEnergyLevels) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        const CMatrix u = testing::random_unitary(rng, 4);
        const std::size_t k = unitary_clusters(u).size();
        BranchChoice b{std::vector<long>(k)};
        for (long &n : b.integers) {
            n = small_int(rng);
        }
        const EnergyLevels lv = energy_levels(u, b, 1.3, 0.7);
        std::vector<double> shuffled = lv.energies;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        EXPECT_EQ(branch_for_energies(u, shuffled, 1.3, 0.7), b);
    }
}

TEST(BranchForEnergies, RejectsForeignEnergies) {
    const CMatrix x{{0.0, 1.0}, {1.0, 0.0}};
    const std::vector<double> bad{0.0, 1.0};
    EXPECT_THROW(branch_for_energies(x, bad), DomainError);
    const std::vector<double> split{kPi, -kPi};
    EXPECT_THROW(branch_for_energies(x, split), DomainError);
}

TEST(Synthesize, InvertsEvolution) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        const CMatrix u = testing::random_unitary(rng, 8);
        const PauliPolynomial h = synthesize(u, BranchChoice::principal(unitary_clusters(u).size()), 2.0, 1.5);
        EXPECT_LT(max_abs_diff(evolve_const(h, 2.0, 1.5), u), 1e-10);
    }
}

TEST(Not1, ClosedFormMatchesPipeline) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const Not1Params p{angle(rng), angle(rng)};
        const BranchChoice n{{small_int(rng), small_int(rng)}};
        const PauliPolynomial general = hamiltonian_not1_general(p, n);
        const EnergyLevels lv = not1_energies(p, n);
        const CMatrix u = not1_unitary(p);
        const PauliPolynomial piped = synthesize(u, branch_for_energies(u, lv.energies));
        EXPECT_LT(max_coefficient_diff(general, piped), 1e-10);

        const long big_n = n.integers[0] - n.integers[1];
        const PauliPolynomial simple = hamiltonian_not1(big_n, 0.5 * (p.alpha - p.beta));
        EXPECT_LT(max_coefficient_diff(general.without_constant(), simple), 1e-10);
    }
}

TEST(Not1, ExampleGammaZeroIsPureX) {
    const PauliPolynomial h = hamiltonian_not1(0, 0.0);
    EXPECT_EQ(h.size(), 1u);
    EXPECT_NEAR(h.coefficient("X"), -kPi / 2.0, 1e-15);
    EXPECT_LT(verify_gate(evolve_const(h), not1_spec()).worst_leakage, 1e-30);
}

TEST(Not2, SpectrumMatchesClosedForm) {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 100; ++trial) {
        const double e = testing::uniform(rng, -5.0, 5.0);
        const long n = small_int(rng);
        const double g = angle(rng);
        const PauliPolynomial h = hamiltonian_not2(e, n, g);
        const double t = kPi * (static_cast<double>(n) - 0.5);
        const std::vector<double> want = sorted({-e + t, -e - t, e, e});
        const std::vector<double> got = eig_hermitian(h.to_matrix()).eigenvalues;
        for (std::size_t i = 0; i < 4; ++i) {
            EXPECT_NEAR(got[i], want[i], 1e-10);
        }
        EXPECT_LT(verify_gate(evolve_const(h), not2_spec()).worst_leakage, 1e-9);
    }
}

TEST(Not2, GeneralFormMatchesPipeline) {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 50; ++trial) {
        const Not2RestrictedParams p{angle(rng), angle(rng), angle(rng), angle(rng)};
        const BranchChoice n{{small_int(rng), small_int(rng), small_int(rng), small_int(rng)}};
        const PauliPolynomial closed = hamiltonian_not2_general(p, n);
        const CMatrix u = not2_restricted_unitary(p);
        const PauliPolynomial piped = synthesize(u, branch_for_energies(u, not2_energies(p, n).energies));
        EXPECT_LT(max_coefficient_diff(closed, piped), 1e-10);
    }
}

TEST(Not2, ReducesWhenOuterEnergiesCoincide) {
    std::mt19937_64 rng(46);
    for (int trial = 0; trial < 50; ++trial) {
        const double shared = angle(rng);
        const Not2RestrictedParams p{angle(rng), angle(rng), shared, shared};
        const BranchChoice n{{small_int(rng), small_int(rng), 1, 1}};
        const Not2Reduction r = reduce_to_not2(p, n);
        EXPECT_EQ(r.n, n.integers[0] - n.integers[1]);
        const PauliPolynomial general = hamiltonian_not2_general(p, n).without_constant();
        EXPECT_LT(max_coefficient_diff(general, hamiltonian_not2(r.ising_energy, r.n, r.gamma)), 1e-10);
    }
}

TEST(Not2, FieldTermsAppearWithOppositeSigns) {
    const Not2RestrictedParams p{0.3, -0.2, 0.9, -0.4};
    const BranchChoice n{{0, 0, 0, 0}};
    const EnergyLevels lv = not2_energies(p, n);
    const PauliPolynomial h = hamiltonian_not2_general(p, n);
    const double field = (lv.energies[2] - lv.energies[3]) / 4.0;
    EXPECT_NEAR(h.coefficient("ZI"), field, 1e-12);
    EXPECT_NEAR(h.coefficient("IZ"), -field, 1e-12);
    EXPECT_THROW(reduce_to_not2(p, n), DomainError);
}

TEST(Not2, EigenvaluesOfRestrictedUnitary) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const Not2RestrictedParams p{angle(rng), angle(rng), angle(rng), angle(rng)};
        const double half = 0.5 * (p.alpha + p.beta);
        std::vector<Complex> want{std::polar(1.0, half), -std::polar(1.0, half), std::polar(1.0, p.rho),
                                  std::polar(1.0, p.delta)};
        std::vector<Complex> got = eig_unitary(not2_restricted_unitary(p)).eigenvalues;
        for (Complex w : want) {
            const auto it = std::min_element(got.begin(), got.end(), [&](Complex a, Complex b) {
                return std::abs(a - w) < std::abs(b - w);
            });
            EXPECT_LT(std::abs(*it - w), 1e-10);
            got.erase(it);
        }
    }
}

TEST(Xor, ConstraintsZeroBothDiagonalPhases) {
    std::mt19937_64 rng(48);
    for (int trial = 0; trial < 100; ++trial) {
        const XorAngleSolution s = solve_xor_constraints(angle(rng), angle(rng), angle(rng));
        EXPECT_NEAR(s.mu, -3.0 * kPi / 4.0, 1e-12);
        EXPECT_NEAR(s.nu, -3.0 * kPi / 4.0, 1e-12);
        const std::vector<Complex> ev = eig_unitary(xor_v_block(s.params())).eigenvalues;
        for (int k = 0; k < 4; ++k) {
            const Complex w = std::polar(1.0, s.mu + 0.5 * kPi * k);
            double best = 10.0;
            for (Complex e : ev) {
                best = std::min(best, std::abs(e - w));
            }
            EXPECT_LT(best, 1e-10);
        }
    }
}

TEST(Xor, ZeroAnglesGiveThreeTerms) {
    const PauliPolynomial h = hamiltonian_xor(0.0, 0.0, 0.0);
    ASSERT_EQ(h.size(), 3u);
    EXPECT_NEAR(h.coefficient("ZYI"), std::sqrt(2.0) * kPi / 4.0, 1e-12);
    EXPECT_NEAR(h.coefficient("IZY"), std::sqrt(2.0) * kPi / 4.0, 1e-12);
    EXPECT_NEAR(h.coefficient("IYX"), -kPi / 4.0, 1e-12);
}

TEST(Xor, MatrixRouteMatchesClosedFormAndPipeline) {
    std::mt19937_64 rng(49);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = angle(rng), b = angle(rng), g = angle(rng);
        const PauliPolynomial h = hamiltonian_xor(a, b, g, 0.8, 1.7);
        EXPECT_LT(max_coefficient_diff(h, hamiltonian_xor_closed_form(a, b, g, 0.8, 1.7)), 1e-12);
        const XorAngleSolution s = solve_xor_constraints(a, b, g);
        const PauliPolynomial piped = synthesize(xor_unitary(s.params()), xor_reference_branch(s, 0.8, 1.7), 0.8, 1.7);
        EXPECT_LT(max_coefficient_diff(h, piped), 1e-9);
        for (const auto &[str, c] : h.terms()) {
            EXPECT_EQ(str.weight(), 2u);
            const auto &allowed = xor_interaction_strings();
            EXPECT_NE(std::find(allowed.begin(), allowed.end(), str), allowed.end()) << str.letters();
        }
        EXPECT_LT(verify_gate(evolve_const(h, 0.8, 1.7), xor_spec()).worst_leakage, 1e-9);
    }
}

TEST(Xor, PMinusQIsFirstOrder) {
    std::mt19937_64 rng(50);
    for (int trial = 0; trial < 20; ++trial) {
        const PQMatrices pq = build_pq(solve_xor_constraints(angle(rng), angle(rng), angle(rng)));
        EXPECT_LT(max_abs_diff(pq.p_minus_q, pq.first_order.to_matrix()), 1e-12);
    }
}

TEST(Xor, BuildPqRejectsViolatedConstraints) {
    XorAngleSolution s = solve_xor_constraints(0.1, 0.2, 0.3);
    s.rho += 0.5;
    EXPECT_THROW(build_pq(s), DomainError);
}

TEST(Xor, BlockEnergiesAreQuarterTurnsApart) {
    const XorAngleSolution s = solve_xor_constraints(0.0, 0.0, 0.0);
    const std::vector<double> e = xor_block_energies(s);
    ASSERT_EQ(e.size(), 8u);
    EXPECT_NEAR(e[1] - e[0], -kPi / 2.0, 1e-15);
    EXPECT_NEAR(e[0], 3.0 * kPi / 4.0, 1e-15);
}

} // namespace
} // namespace gateforge
