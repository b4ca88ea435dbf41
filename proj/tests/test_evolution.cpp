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

#include <cmath>
#include <random>

#include "gateforge/evolution.hpp"
#include "gateforge/synthesis.hpp"
#include "support.hpp"

namespace gateforge {
namespace {

TEST(EvolveConst, MatchesTaylorOracle) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const PauliPolynomial h = decompose(testing::random_hermitian(rng, 4));
        const CMatrix u = evolve_const(h, 0.7, 1.3);
        EXPECT_LT(frobenius_distance(u, testing::expm_taylor(h.to_matrix() * Complex(0.0, -0.7 / 1.3))), 1e-10);
    }
    EXPECT_THROW(evolve_const(PauliPolynomial(1), 0.0), DomainError);
}

TEST(Protocol, ShapesAndSupport) {
    const Protocol c = Protocol::constant(1.0, 2.0, 0.5);
    EXPECT_DOUBLE_EQ(c(2.0), 0.5);
    EXPECT_DOUBLE_EQ(c(0.5), 0.0);
    EXPECT_DOUBLE_EQ(c(3.5), 0.0);

    const Protocol r = Protocol::raised_cosine(0.0, 1.0, 1.0, 1.0);
    EXPECT_NEAR(r(0.0), 0.0, 1e-15);
    EXPECT_NEAR(r(0.5), 2.0, 1e-15);

    const Protocol t = Protocol::table(0.0, 2.0, {0.0, 2.0, 1.0});
    EXPECT_NEAR(t(0.5), 1.0, 1e-15);
    EXPECT_NEAR(t(1.5), 1.5, 1e-15);
    EXPECT_EQ(t.breakpoints().size(), 3u);

    const Protocol cu = Protocol::custom(0.0, 1.0, 1.0, {{0.5, 2.0, 0.0}});
    EXPECT_NEAR(cu(0.25), 1.0 - 0.5, 1e-15);

    EXPECT_THROW(Protocol::constant(0.0, 0.0), DomainError);
    EXPECT_THROW(Protocol::table(0.0, 1.0, {1.0}), DomainError);
    EXPECT_THROW(Protocol::raised_cosine(0.0, 1.0, 0.0), DomainError);
}

TEST(Protocol, KindNamesRoundTrip) {
    for (ProtocolKind k :
         {ProtocolKind::constant, ProtocolKind::raised_cosine, ProtocolKind::table, ProtocolKind::custom}) {
        EXPECT_EQ(protocol_kind_from_string(to_string(k)), k);
    }
    EXPECT_THROW(protocol_kind_from_string("gaussian"), std::invalid_argument);
}

TEST(ProtocolIntegral, ExactForKnownShapes) {
    EXPECT_NEAR(protocol_integral(Protocol::constant(0.0, 3.0)), 3.0, 1e-13);
    for (double cycles : {1.0, 1.25, 2.5, 3.0}) {
        const ProtocolCheck c = check_protocol(Protocol::raised_cosine(0.2, 1.5, cycles));
        EXPECT_NEAR(c.integral, 1.5, 1e-12) << cycles;
        EXPECT_TRUE(c.valid);
        EXPECT_FALSE(c.changes_sign);
    }
    EXPECT_NEAR(protocol_integral(Protocol::table(0.0, 2.0, {0.0, 2.0, 1.0})), 2.5, 1e-13);
}

TEST(ProtocolCheck, FlagsSignChangesAndBadIntegrals) {
    const ProtocolCheck c = check_protocol(Protocol::custom(0.0, 1.0, 1.0, {{2.0, 1.0, 0.0}}));
    EXPECT_TRUE(c.valid);
    EXPECT_TRUE(c.changes_sign);
    EXPECT_FALSE(check_protocol(Protocol::constant(0.0, 1.0, 0.9)).valid);
}

TEST(EvolveProtocol, ConstantProtocolIsExact) {
    const PauliPolynomial h = hamiltonian_not2(0.7, 1, 0.3);
    const CMatrix u = evolve_protocol(h, Protocol::constant(0.0, 1.0), 4);
    EXPECT_LT(frobenius_distance(u, evolve_const(h)), 1e-13);
}

TEST(EvolveProtocol, NormalizedShapesReachTheSameGate) {
    const PauliPolynomial h = hamiltonian_xor(0.4, -0.3, 1.1);
    for (const Protocol &f : {Protocol::raised_cosine(0.0, 1.0, 1.0), Protocol::raised_cosine(0.0, 1.0, 1.25),
                              Protocol::table(0.0, 1.0, {0.0, 1.5, 1.5, 0.0}, 1.0)}) {
        const CMatrix u = evolve_protocol(h, f, 512);
        EXPECT_LT(frobenius_distance(u, evolve_const(h)), 1e-5);
        EXPECT_LT(verify_gate(u, xor_spec()).worst_leakage, 1e-9);
    }
}

TEST(EvolveTimeOrdered, RejectsMismatchedTerms) {
    const PauliPolynomial a(1, {{"X", 1.0}});
    const PauliPolynomial b(2, {{"XX", 1.0}});
    const std::vector<ProtocolTerm> mixed{{a, Protocol::constant(0.0, 1.0)}, {b, Protocol::constant(0.0, 1.0)}};
    EXPECT_THROW(evolve_time_ordered(mixed), DimensionError);
    const std::vector<ProtocolTerm> shifted{{a, Protocol::constant(0.0, 1.0)}, {a, Protocol::constant(0.5, 1.0)}};
    EXPECT_THROW(evolve_time_ordered(shifted), std::invalid_argument);
    EXPECT_THROW(evolve_time_ordered(std::vector<ProtocolTerm>{}), std::invalid_argument);
}

TEST(EvolveTimeOrdered, CommutingSplitMatchesProductOfExponentials) {
    // Ising part on a raised cosine, transverse part constant.
    const Not2Parts parts = hamiltonian_not2_parts(0.9, 0, 0.4);
    const std::vector<ProtocolTerm> terms{{parts.ising, Protocol::raised_cosine(0.0, 1.0, 1.0)},
                                          {parts.cos_part + parts.sin_part, Protocol::constant(0.0, 1.0)}};
    const CMatrix u = evolve_time_ordered(terms, 512);
    EXPECT_LT(frobenius_distance(u, evolve_const(hamiltonian_not2(0.9, 0, 0.4))), 1e-10);
}

TEST(SplitCommutes, Not2AndResonance) {
    const Not2Parts parts = hamiltonian_not2_parts(0.5, 1, 0.7);
    const std::vector<PauliPolynomial> not2{parts.ising, parts.cos_part + parts.sin_part};
    EXPECT_TRUE(split_commutes(not2).commutes);
    EXPECT_LT(commutation_check(parts.cos_part, parts.sin_part).anticommutator, 1e-10);

    const ResonanceModel m;
    const std::vector<PauliPolynomial> res{m.static_part(), m.transverse_part(0.3)};
    const SplitReport r = split_commutes(res);
    EXPECT_FALSE(r.commutes);
    ASSERT_EQ(r.pairs.size(), 1u);
    EXPECT_GT(r.pairs[0].norm, 0.1);
}

TEST(VerifyGate, ReportsRowsAndRejectsDimensionMismatch) {
    const VerificationReport rep = verify_gate(CMatrix::identity(8), xor_spec());
    EXPECT_FALSE(rep.passed);
    ASSERT_EQ(rep.row_leakage.size(), 4u);
    EXPECT_NEAR(rep.worst_leakage, 1.0, 1e-15);
    EXPECT_THROW(verify_gate(CMatrix::identity(4), xor_spec()), DimensionError);
}

} // namespace
} // namespace gateforge
