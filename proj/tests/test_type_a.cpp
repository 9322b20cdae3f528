/*
   Copyright 2026 The qsatake Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <qsatake/symfunc.hpp>
#include <qsatake/type_a.hpp>

#include "oracle/presentation.hpp"

using namespace qsatake;

namespace {

PartitionVector basis(const Partition& l) { return PartitionVector::basis(l); }

}  // namespace

TEST(TypeA, SmallProducts) {
    GrassmannSpace g22(2, 2);
    PartitionVector expect = basis({2, 2}) + PartitionVector::basis({}, q_monomial(1, 1));
    EXPECT_EQ(power_sum_rim_product(1, {2, 1}, g22).v, expect);
    EXPECT_EQ(power_sum_rim_product(1, {}, g22).v, basis({1}));
    // projective line: sigma_1^2 = q
    GrassmannSpace p1(1, 1);
    EXPECT_EQ(quantum_pieri('h', 1, {1}, p1).v, PartitionVector::basis({}, q_monomial(1, 1)));
}

TEST(TypeA, PieriTopDegreeWraps) {
    // h2 * sigma(2,2) in G(2,4) is q sigma(1,1)
    GrassmannSpace g(2, 2);
    EXPECT_EQ(quantum_pieri('h', 2, {2, 2}, g).v, PartitionVector::basis({1, 1}, q_monomial(1, 1)));
    oracle::Presentation P(2, 2);
    EXPECT_EQ(P.multiply({2}, {2, 2}), PartitionVector::basis({1, 1}, q_monomial(1, 1)));
}

TEST(TypeA, ThreeWayPowerSumAgreement) {
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; a + b <= 7; ++b) {
            GrassmannSpace sp(a, b);
            oracle::Presentation P(a, b);
            for (const auto& lam : sp.basis())
                for (int l = 1; l < a + b; ++l) {
                    auto rim = power_sum_rim_product(l, lam, sp).v;
                    auto ring = P.power_sum_times(l, lam);
                    auto wedge = wedge_power_action(l, {sp, basis(lam)}).v;
                    ASSERT_EQ(rim, ring) << "G(" << a << "," << b << ") p" << l << " " << to_string(lam);
                    ASSERT_EQ(rim, wedge) << "G(" << a << "," << b << ") p" << l << " " << to_string(lam);
                }
        }
}

TEST(TypeA, PieriMatchesPresentation) {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; a + b <= 7; ++b) {
            GrassmannSpace sp(a, b);
            oracle::Presentation P(a, b);
            for (const auto& lam : sp.basis()) {
                for (int r = 1; r <= b; ++r) ASSERT_EQ(quantum_pieri('h', r, lam, sp).v, P.multiply({r}, lam));
                for (int r = 1; r <= a; ++r) ASSERT_EQ(quantum_pieri('e', r, lam, sp).v, P.multiply(Partition(static_cast<std::size_t>(r), 1), lam));
            }
        }
}

TEST(TypeA, SchurProductsMatchPresentation) {
    for (int a = 2; a <= 3; ++a)
        for (int b = 2; a + b <= 6; ++b) {
            GrassmannSpace sp(a, b);
            oracle::Presentation P(a, b);
            for (const auto& mu : sp.basis())
                for (const auto& lam : sp.basis()) ASSERT_EQ(q_multiply_symfunc(schur_in_h(mu), lam, sp).v, P.multiply(mu, lam)) << to_string(mu) << " * " << to_string(lam);
        }
}

TEST(TypeA, ClassicalProductsFromComposedActions) {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 6; ++b) {
            GrassmannSpace sp(a, b);
            oracle::Presentation P(a, b);
            for (const auto& mu : sp.basis())
                for (const auto& lam : sp.basis()) {
                    PartitionVector classical;
                    const PartitionVector full = P.multiply(mu, lam);
                    for (const auto& [l, c] : full.coeffs())
                        if (c.coeff(0) != 0) classical.add(l, QPoly::constant(c.coeff(0), "q"));
                    ASSERT_EQ(lr_by_composed_actions(mu, lam, sp).v, classical) << to_string(mu) << " * " << to_string(lam);
                }
        }
}

TEST(TypeA, ClassicalWedgeDropsWrap) {
    GrassmannSpace sp(2, 3);
    for (const auto& lam : sp.basis())
        for (int l = 1; l < 5; ++l) {
            auto quantum = wedge_power_action(l, {sp, basis(lam)}, true).v;
            auto classical = wedge_power_action(l, {sp, basis(lam)}, false).v;
            PartitionVector q0;
            for (const auto& [m, c] : quantum.coeffs())
                if (c.coeff(0) != 0) q0.add(m, QPoly::constant(c.coeff(0), "q"));
            EXPECT_EQ(classical, q0);
        }
}

TEST(TypeA, BasisChangeAtQOne) {
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; a + b <= 6; ++b) EXPECT_LT(satake_basis_change_check({a, b}, 1.0), 1e-9) << a << "," << b;
}

TEST(TypeA, InvalidInput) {
    GrassmannSpace sp(2, 2);
    EXPECT_THROW(power_sum_rim_product(4, {1}, sp), std::invalid_argument);
    EXPECT_THROW(power_sum_rim_product(1, {3}, sp), std::invalid_argument);
}
