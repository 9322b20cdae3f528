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

#include <cmath>

#include <gtest/gtest.h>

#include <qsatake/qde.hpp>

#include "fixtures.hpp"
#include "oracle/binomial_sums.hpp"

using namespace qsatake;

namespace {

QPoly Dv() { return qpoly_var("D"); }
QPoly Dc(long c) { return QPoly::constant(Rational(c), "D"); }
QPoly apery_middle() { return (Rational(2) * Dv() + Dc(1)) * (Rational(17) * Dv() * Dv() + Rational(17) * Dv() + Dc(5)); }

OreOperator og5_operator() {
    OreOperator::Terms t;
    t[0] = Dv().pow(11) * (Dv() - Dc(1)).pow(5);
    t[1] = -(Dv().pow(5) * apery_middle());
    t[2] = Dc(1);
    return OreOperator(t);
}

OreOperator v12_operator() {
    OreOperator::Terms t;
    t[0] = Dv().pow(4);
    t[1] = -apery_middle();
    t[2] = (Dv() + Dc(1)).pow(2);
    return OreOperator(t);
}

}  // namespace

TEST(Spaces, Parse) {
    EXPECT_EQ(parse_space("A:2,3").to_string(), "A:2,3");
    EXPECT_EQ(parse_space(" og : 5 ").to_string(), "OG:5");
    EXPECT_EQ(parse_space("Q:4").to_string(), "Q:4");
    EXPECT_THROW(parse_space("B:3"), std::invalid_argument);
    EXPECT_THROW(parse_space("A2,3"), std::invalid_argument);
}

TEST(Connection, OG5MatrixMatchesPrintedExactly) {
    auto M = hyperplane_matrix(parse_space("OG:5"));
    ASSERT_EQ(M.dim(), 16u);
    EXPECT_EQ(M.labels, fixtures::og5_basis());
    const auto& rows = fixtures::og5_matrix_rows();
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) {
            char c = rows[i][j];
            QPoly expect = c == '0' ? QPoly("t") : c == '1' ? QPoly::constant(Rational(1), "t") : qpoly_var("t");
            ASSERT_EQ(M.m(i, j), expect) << i << "," << j;
        }
}

TEST(MinimalOperator, ProjectiveLine) {
    auto r = minimal_operator(hyperplane_matrix(parse_space("A:1,1")));
    EXPECT_EQ(r.op.to_string(), "D^2 - t");
    EXPECT_EQ(r.span_dim, 2u);
}

TEST(MinimalOperator, ProjectiveSpaces) {
    // P^{n-1}: D^n - t
    for (int n = 2; n <= 6; ++n) {
        auto r = minimal_operator(hyperplane_matrix(parse_space("A:1," + std::to_string(n - 1))));
        OreOperator expect = OreOperator::from_D(Dv().pow(static_cast<unsigned>(n))) - OreOperator::t();
        EXPECT_EQ(r.op, expect) << r.op.to_string();
    }
}

TEST(MinimalOperator, OG5) {
    auto r = minimal_operator(hyperplane_matrix(parse_space("OG:5")));
    EXPECT_EQ(r.op, og5_operator()) << r.op.to_string();
    EXPECT_EQ(r.op.to_string(), "D^11(D - 1)^5 - tD^5(2D + 1)(17D^2 + 17D + 5) + t^2");
    EXPECT_EQ(r.op.D_degree(), 16);
    EXPECT_LE(r.op.t_degree(), 2);
}

TEST(MinimalOperator, NonCyclicUnitIsReported) {
    for (std::string s : {"Q:3", "A:2,2", "OG:4"}) {
        auto M = hyperplane_matrix(parse_space(s));
        EXPECT_THROW(minimal_operator(M), std::invalid_argument) << s;
        auto r = minimal_operator(M, 0, false);
        EXPECT_EQ(r.span_dim + 1, M.dim()) << s;
    }
}

TEST(MinimalOperator, AnnihilatesFlatSection) {
    for (std::string s : {"OG:5", "A:2,3", "A:1,3", "OG:3"}) {
        auto M = hyperplane_matrix(parse_space(s));
        auto L = minimal_operator(M).op;
        auto f = connection_series(M, 20);
        std::vector<Rational> unit;
        for (const auto& c : f) unit.push_back(c[0]);
        for (const auto& x : L.apply(unit)) ASSERT_EQ(x, Rational(0)) << s;
    }
}

TEST(MinimalOperator, SeriesFromRecurrence) {
    // for P^1 the flat section's unit component is sum t^n / n!^2
    auto M = hyperplane_matrix(parse_space("A:1,1"));
    auto f = connection_series(M, 10);
    auto rec = operator_to_recurrence(minimal_operator(M).op);
    auto u = solve_recurrence(rec, {Rational(1)}, 10);
    for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(u[n], f[n][0]);
    EXPECT_EQ(u[3], Rational(1, 36));
}

TEST(Lefschetz, V12AndApery) {
    auto L = minimal_operator(hyperplane_matrix(parse_space("OG:5"))).op;
    auto lf = lefschetz_transform(L, 7);
    EXPECT_EQ(lf.factor, Dv().pow(7) * (Dv() - Dc(1)).pow(5));
    EXPECT_EQ(lf.op, v12_operator()) << lf.op.to_string();
    auto reg = regularize(lf.op);
    EXPECT_EQ(reg.factor, Dv());
    EXPECT_EQ(reg.op, apery_operator());
    EXPECT_EQ(reg.op.to_string(), "D^3 - t(2D + 1)(17D^2 + 17D + 5) + t^2(D + 1)^3");
    // factor * result reproduces the multiplied operator
    OreOperator::Terms mult;
    for (const auto& [i, p] : lf.op.terms()) {
        QPoly f = p;
        for (unsigned j = 1; j <= i; ++j) f = f * (Dv() + Dc(static_cast<long>(j)));
        mult[i] = f;
    }
    EXPECT_EQ(OreOperator::from_D(reg.factor) * reg.op, OreOperator(mult));
}

TEST(Lefschetz, TrivialCases) {
    // an operator without t terms is its own left factor
    auto r = regularize(OreOperator::D());
    EXPECT_EQ(r.factor, Dv());
    EXPECT_EQ(r.op, OreOperator::one());
    auto s = lefschetz_transform(OreOperator::from_D(Dv() * Dv()) - OreOperator::t(), 1);
    EXPECT_EQ(OreOperator::from_D(s.factor) * s.op, OreOperator::from_D(Dv() * Dv()) - OreOperator::from_D(Dv() + Dc(1), 1));
}

TEST(Recurrence, Apery) {
    auto r = operator_to_recurrence(apery_operator());
    ASSERT_EQ(r.order(), 2);
    QPoly n = qpoly_var("n");
    QPoly one = QPoly::constant(Rational(1), "n");
    EXPECT_EQ(r.c[0], n.pow(3));
    EXPECT_EQ(r.c[1], -(Rational(34) * n.pow(3) - Rational(51) * n * n + Rational(27) * n - Rational(5) * one));
    EXPECT_EQ(r.c[2], (n - one).pow(3));
}

TEST(Recurrence, Simple) {
    auto r = operator_to_recurrence(OreOperator::D());
    EXPECT_EQ(r.c.size(), 1u);
    EXPECT_EQ(r.c[0], qpoly_var("n"));
    auto s = operator_to_recurrence(OreOperator::from_D(Dv() * Dv()) - OreOperator::t());
    EXPECT_EQ(s.c[1], QPoly::constant(Rational(-1), "n"));
}

TEST(Apery, SequencesAgreeWithBinomialSums) {
    auto d = apery_sequences(20);
    ASSERT_EQ(d.a.size(), 21u);
    EXPECT_EQ(d.a[0], 1);
    EXPECT_EQ(d.a[1], 5);
    EXPECT_EQ(d.a[2], 73);
    EXPECT_EQ(d.a[3], 1445);
    EXPECT_EQ(d.a[4], 33001);
    for (unsigned n = 0; n <= 20; ++n) {
        EXPECT_EQ(d.a[n], oracle::apery_a(n)) << n;
        EXPECT_EQ(d.b[n], oracle::apery_b(n)) << n;
    }
    EXPECT_TRUE(d.binomial_identity);
    EXPECT_TRUE(d.denominators_divide);
}

TEST(Apery, DenominatorBound) {
    auto d = apery_sequences(20);
    for (long n = 1; n <= 20; ++n) {
        Integer bound = 12 * lcm_upto(n) * lcm_upto(n) * lcm_upto(n);
        EXPECT_EQ(bound % Integer(d.b[static_cast<std::size_t>(n)].get_den()), 0) << n;
    }
}

TEST(Zeta3, EnclosuresOverlap) {
    auto fast = zeta3_enclosure(30);
    auto slow = zeta3_defining_enclosure(10000);
    EXPECT_LT(Rational(fast.hi - fast.lo), Rational(Integer(1), Integer("1000000000000000000000000000000")));
    EXPECT_LE(slow.lo, fast.hi);
    EXPECT_GE(slow.hi, fast.lo);
    EXPECT_EQ(decimal_string(fast.lo, 25), "1.2020569031595942853997381");
}

TEST(Zeta3, Convergents) {
    auto rep = zeta3_report(20);
    ASSERT_EQ(rep.rows.size(), 20u);
    EXPECT_LT(rep.rows[0].error_upper, Rational(3, 1000));
    EXPECT_LT(rep.rows[9].error_upper, Rational(1, 10000000000L));
    // the error decays like a_n^-2, about alpha^-2n
    for (std::size_t k = 1; k < rep.rows.size(); ++k) EXPECT_LT(rep.rows[k].error_upper, rep.rows[k - 1].error_lower);
}

TEST(Zeta3, GrowthRatio) {
    auto rep = zeta3_report(20);
    const double alpha = 17 + 12 * std::sqrt(2.0);
    EXPECT_NEAR(rep.alpha, alpha, 1e-12);
    for (std::size_t k = 1; k + 1 < rep.rows.size(); ++k) EXPECT_GT(rep.rows[k].ratio, rep.rows[k - 1].ratio);
    // a_n ~ C alpha^n n^{-3/2}
    const double n = 20;
    EXPECT_NEAR(rep.rows[19].ratio, alpha * std::pow(n / (n + 1), 1.5), 0.1);
    EXPECT_LT(rep.rows[19].ratio, alpha);
}
