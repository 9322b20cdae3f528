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

#include <random>

#include <gtest/gtest.h>

#include <qsatake/lindep.hpp>
#include <qsatake/matrix.hpp>
#include <qsatake/ore.hpp>
#include <qsatake/pfaffian.hpp>
#include <qsatake/poly.hpp>
#include <qsatake/rational.hpp>

#include "oracle/determinant.hpp"

using namespace qsatake;

namespace {

QPoly random_poly(std::mt19937& rng, int max_deg, const std::string& var) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(-4, 4);
    std::vector<Rational> c;
    for (int k = deg(rng); k >= 0; --k) c.push_back(Rational(coef(rng)));
    return QPoly(c, var);
}

OreOperator random_operator(std::mt19937& rng) {
    OreOperator::Terms t;
    std::uniform_int_distribution<int> tdeg(0, 2);
    for (int i = tdeg(rng); i >= 0; --i) {
        QPoly p = random_poly(rng, 3, "D");
        if (!p.is_zero()) t[static_cast<unsigned>(i)] = p;
    }
    return OreOperator(t);
}

QPoly D_poly(std::vector<long> c) {
    std::vector<Rational> r;
    for (long x : c) r.push_back(Rational(x));
    return QPoly(r, "D");
}

}  // namespace

TEST(Rational, ParseAndReduce) {
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-4"), Rational(-4));
    EXPECT_TRUE(is_integer(make_rational(6, 3)));
}

TEST(Poly, ArithmeticAndGcd) {
    QPoly t = qpoly_var("t");
    QPoly one = QPoly::constant(Rational(1), "t");
    EXPECT_EQ((t + one).pow(2), t * t + Rational(2) * t + one);
    QPoly g = poly_gcd((t + one) * (t - one), (t + one) * (t + Rational(2) * one));
    EXPECT_EQ(g.monic(), t + one);
    auto [q, r] = divmod(t * t * t + one, t + one);
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(q, t * t - t + one);
    EXPECT_EQ((t * t).shift(Rational(1)), t * t + Rational(2) * t + one);
}

TEST(Matrix, RankNullspaceSolve) {
    QMatrix m(3, 3, Rational(0));
    int v = 1;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = Rational(v++);
    EXPECT_EQ(rank(m), 2u);
    EXPECT_EQ(det(m), Rational(0));
    auto ns = nullspace(m);
    ASSERT_EQ(ns.size(), 1u);
    auto img = m.apply(ns[0]);
    for (const auto& x : img) EXPECT_EQ(x, Rational(0));
    m(2, 2) = 10;
    auto sol = solve(m, {Rational(1), Rational(2), Rational(3)});
    ASSERT_TRUE(sol.has_value());
    auto back = m.apply(*sol);
    EXPECT_EQ(back[0], Rational(1));
    EXPECT_EQ(back[2], Rational(3));
}

TEST(Ore, CommutationRule) {
    // D t = t (D + 1)
    OreOperator lhs = OreOperator::D() * OreOperator::t();
    OreOperator rhs = OreOperator::from_D(D_poly({1, 1}), 1);
    EXPECT_EQ(lhs, rhs);
}

TEST(Ore, Associativity) {
    std::mt19937 rng(0);
    for (int k = 0; k < 200; ++k) {
        OreOperator a = random_operator(rng), b = random_operator(rng), c = random_operator(rng);
        ASSERT_EQ((a * b) * c, a * (b * c)) << a.to_string() << " | " << b.to_string() << " | " << c.to_string();
    }
}

TEST(Ore, ActionIsMultiplicative) {
    std::mt19937 rng(1);
    std::vector<Rational> s(12);
    for (std::size_t n = 0; n < s.size(); ++n) s[n] = Rational(static_cast<long>(n * n + 1));
    for (int k = 0; k < 30; ++k) {
        OreOperator a = random_operator(rng), b = random_operator(rng);
        EXPECT_EQ((a * b).apply(s), a.apply(b.apply(s)));
    }
}

TEST(Ore, StripRoundTrip) {
    std::mt19937 rng(2);
    for (int k = 0; k < 100; ++k) {
        OreOperator L = random_operator(rng);
        if (L.is_zero()) continue;
        QPoly c = random_poly(rng, 2, "D");
        if (c.is_zero()) continue;
        OreOperator M = OreOperator::from_D(c) * L;
        auto [f, rest] = ore_left_strip(M);
        ASSERT_EQ(OreOperator::from_D(f) * rest, M);
        // the stripped factor is at least as large as the one put in
        EXPECT_TRUE(divmod(f, c.monic()).second.is_zero());
        // nothing left to strip
        EXPECT_EQ(ore_left_strip(rest).first.degree(), 0);
    }
}

TEST(Ore, Printing) {
    OreOperator L = OreOperator::from_D(D_poly({0, 0, 1})) - OreOperator::t();
    EXPECT_EQ(L.to_string(), "D^2 - t");
}

TEST(Lindep, FirstDependence) {
    QPoly t = qpoly_var("t");
    QPoly z("t"), one = QPoly::constant(Rational(1), "t");
    std::vector<std::vector<QPoly>> vs = {{one, z}, {z, one}, {t, t * t}};
    auto dep = minimal_dependence(vs);
    ASSERT_TRUE(dep.has_value());
    ASSERT_EQ(dep->size(), 3u);
    for (std::size_t i = 0; i < 2; ++i) {
        QPoly s("t");
        for (std::size_t k = 0; k < 3; ++k) s += (*dep)[k] * vs[k][i];
        EXPECT_TRUE(s.is_zero());
    }
    EXPECT_FALSE(minimal_dependence({{one, z}, {z, one}}).has_value());
}

TEST(Pfaffian, SmallCases) {
    QMatrix a(2, 2, Rational(0));
    a(0, 1) = 1;
    a(1, 0) = -1;
    EXPECT_EQ(pfaffian(a), Rational(1));
    QMatrix empty(0, 0, Rational(0));
    EXPECT_EQ(pfaffian(empty), Rational(1));
    QMatrix bad(2, 2, Rational(1));
    EXPECT_THROW(pfaffian(bad), std::invalid_argument);
}

TEST(Pfaffian, SquareIsDeterminant) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (std::size_t n = 2; n <= 10; n += 2)
        for (int rep = 0; rep < 10; ++rep) {
            QMatrix a(n, n, Rational(0));
            std::vector<std::vector<mpq_class>> rows(n, std::vector<mpq_class>(n, 0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    Rational v(coef(rng));
                    a(i, j) = v;
                    a(j, i) = -v;
                    rows[i][j] = v;
                    rows[j][i] = -v;
                }
            Rational pf = pfaffian(a);
            ASSERT_EQ(pf * pf, oracle::determinant(rows)) << "n = " << n;
        }
}
