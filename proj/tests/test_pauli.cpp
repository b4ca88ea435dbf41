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

#include <random>

#include "gateforge/pauli.hpp"
#include "support.hpp"

namespace gateforge {
namespace {

const Complex kI(0.0, 1.0);

TEST(PauliString, ValidatesLetters) {
    EXPECT_NO_THROW(PauliString("IXYZ"));
    EXPECT_THROW(PauliString(""), std::invalid_argument);
    EXPECT_THROW(PauliString("XA"), std::invalid_argument);
    EXPECT_THROW(PauliString("x"), std::invalid_argument);
}

TEST(PauliString, WeightAndOrder) {
    EXPECT_EQ(PauliString("IZI").weight(), 1u);
    EXPECT_EQ(PauliString("XYZ").weight(), 3u);
    EXPECT_TRUE(PauliString::identity(4).is_identity());
    EXPECT_LT(PauliString("IX"), PauliString("XI"));
    EXPECT_LT(PauliString("XZ"), PauliString("YI"));
}

TEST(StringMatrix, SingleLetters) {
    EXPECT_EQ(string_matrix(PauliString("X")), (CMatrix{{0.0, 1.0}, {1.0, 0.0}}));
    EXPECT_EQ(string_matrix(PauliString("Y")), (CMatrix{{0.0, -kI}, {kI, 0.0}}));
    EXPECT_EQ(string_matrix(PauliString("Z")), (CMatrix{{1.0, 0.0}, {0.0, -1.0}}));
}

TEST(StringMatrix, LeftmostLetterActsOnMostSignificantQubit) {
    const CMatrix zi = string_matrix(PauliString("ZI"));
    EXPECT_EQ(zi(0, 0), Complex(1.0));
    EXPECT_EQ(zi(1, 1), Complex(1.0));
    EXPECT_EQ(zi(2, 2), Complex(-1.0));
    EXPECT_EQ(zi(3, 3), Complex(-1.0));
}

TEST(StringMatrix, ProductsFollowPauliAlgebra) {
    const CMatrix x = string_matrix(PauliString("X"));
    const CMatrix y = string_matrix(PauliString("Y"));
    const CMatrix z = string_matrix(PauliString("Z"));
    EXPECT_LT(max_abs_diff(x * y, z * kI), 1e-15);
    EXPECT_LT(max_abs_diff(y * z, x * kI), 1e-15);
    EXPECT_LT(max_abs_diff(z * x, y * kI), 1e-15);
}

TEST(PauliPolynomial, PrunesCancelledTerms) {
    PauliPolynomial p(2);
    p.add_term("XZ", 0.5);
    p.add_term("XZ", -0.5);
    EXPECT_TRUE(p.empty());
    p.add_term("XZ", 1e-15);
    EXPECT_TRUE(p.empty());
}

TEST(PauliPolynomial, RejectsWrongLength) {
    PauliPolynomial p(2);
    EXPECT_THROW(p.add_term("X", 1.0), std::invalid_argument);
}

TEST(PauliPolynomial, ArithmeticAndConstantTerm) {
    const PauliPolynomial a(2, {{"II", 1.0}, {"XX", 2.0}});
    const PauliPolynomial b(2, {{"XX", -2.0}, {"ZZ", 3.0}});
    const PauliPolynomial s = a + b;
    EXPECT_EQ(s.size(), 2u);
    EXPECT_DOUBLE_EQ(s.constant_term(), 1.0);
    EXPECT_DOUBLE_EQ(s.coefficient("ZZ"), 3.0);
    EXPECT_EQ(s.without_constant().size(), 1u);
    EXPECT_DOUBLE_EQ((2.0 * a).coefficient("XX"), 4.0);
}

TEST(Decompose, RoundTripsRandomHermitianMatrices) {
    std::mt19937_64 rng(21);
    for (std::size_t dim : {2u, 4u, 8u}) {
        for (int trial = 0; trial < 25; ++trial) {
            const CMatrix h = testing::random_hermitian(rng, dim);
            const PauliPolynomial p = decompose(h);
            EXPECT_LT(max_abs_diff(p.to_matrix(), h), 1e-13);
        }
    }
}

TEST(Decompose, RecoversKnownCoefficients) {
    std::mt19937_64 rng(22);
    const char *letters = "IXYZ";
    for (int trial = 0; trial < 50; ++trial) {
        PauliPolynomial p(3);
        for (int k = 0; k < 5; ++k) {
            std::string s(3, 'I');
            for (char &c : s) {
                c = letters[rng() % 4];
            }
            p.add_term(s, testing::uniform(rng, -2.0, 2.0));
        }
        EXPECT_LT(max_coefficient_diff(decompose(p.to_matrix()), p), 1e-14);
    }
}

TEST(Decompose, RejectsBadInput) {
    EXPECT_THROW(decompose(CMatrix::identity(3)), DimensionError);
    const CMatrix not_hermitian{{0.0, 1.0}, {0.0, 0.0}};
    EXPECT_THROW(decompose(not_hermitian), DomainError);
}

TEST(LocalityProfile, GroupsByWeight) {
    const PauliPolynomial p(3, {{"III", 1.0}, {"ZIX", 2.0}, {"IYY", 3.0}, {"XYZ", 4.0}});
    const LocalityProfile prof = locality_profile(p);
    ASSERT_EQ(prof.size(), 3u);
    EXPECT_EQ(prof.at(0).size(), 1u);
    EXPECT_EQ(prof.at(2).size(), 2u);
    EXPECT_EQ(prof.at(3).size(), 1u);
    EXPECT_FALSE(prof.contains(1));
}

TEST(CommutationCheck, DistinguishesCommutingAndAnticommuting) {
    const PauliPolynomial xx(2, {{"XX", 1.0}});
    const PauliPolynomial zz(2, {{"ZZ", 1.0}});
    const PauliPolynomial zi(2, {{"ZI", 1.0}});
    EXPECT_LT(commutation_check(xx, zz).commutator, 1e-15);
    EXPECT_LT(commutation_check(xx, zi).anticommutator, 1e-15);
    EXPECT_THROW(commutation_check(xx, PauliPolynomial(3)), DimensionError);
}

} // namespace
} // namespace gateforge
