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

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <qsatake/lie.hpp>
#include <qsatake/lie_tables.hpp>

using namespace qsatake;

namespace {

LieElement random_element(const RootSystem& rs, std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-2, 2), pick(0, static_cast<int>(rs.positive.size()) - 1);
    LieElement e;
    for (int k = 0; k < 3; ++k) {
        e.pos[rs.positive[static_cast<std::size_t>(pick(rng))]] += Rational(c(rng));
        e.neg[rs.positive[static_cast<std::size_t>(pick(rng))]] += Rational(c(rng));
    }
    e.h.assign(static_cast<std::size_t>(rs.rank), Rational(0));
    for (auto& x : e.h) x = c(rng);
    return e;
}

QMatrix xq_matrix(const ChevalleyBasis& cb, const Rational& q) {
    LieElement x = principal_nilpotent(*cb.rs);
    x.pos[cb.rs->highest] = q;
    return to_module(cb, x);
}

}  // namespace

TEST(RootSystems, SizesAndExponents) {
    EXPECT_EQ(build_root_system("E6").positive.size(), 36u);
    EXPECT_EQ(build_root_system("E7").positive.size(), 63u);
    EXPECT_EQ(build_root_system("E6").exponents(), (std::vector<int>{1, 4, 5, 7, 8, 11}));
    EXPECT_EQ(build_root_system("E7").exponents(), (std::vector<int>{1, 5, 7, 9, 11, 13, 17}));
    EXPECT_EQ(build_root_system("A4").exponents(), (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(build_root_system("D5").exponents(), (std::vector<int>{1, 3, 4, 5, 7}));
    EXPECT_EQ(build_root_system("E7").coxeter_number(), 18);
    EXPECT_THROW(build_root_system("F4"), std::invalid_argument);
}

TEST(RootSystems, RootExpressions) {
    RootSystem rs = build_root_system("E6");
    // theta is the sum of the simple roots, psi the highest root
    EXPECT_EQ(parse_root_expression(rs, "theta"), rs.theta());
    EXPECT_EQ(height(parse_root_expression(rs, "theta-a2-a6")), 4);
    EXPECT_EQ(height(parse_root_expression(rs, "psi-theta")), 5);
    EXPECT_EQ(parse_root_expression(rs, "psi"), rs.highest);
    EXPECT_THROW(parse_root_expression(rs, "theta+a1+a2"), std::invalid_argument);
}

TEST(Minuscule, DimensionsAndSerre) {
    for (auto [label, dim] : std::vector<std::pair<std::string, std::size_t>>{{"E6", 27}, {"E7", 56}, {"A4", 5}, {"D5", 10}}) {
        RootSystem rs = build_root_system(label);
        MinusculeModule m = minuscule_module(rs, 1);
        EXPECT_EQ(m.dim(), dim) << label;
        EXPECT_TRUE(check_serre_relations(m)) << label;
    }
    RootSystem e6 = build_root_system("E6");
    EXPECT_THROW(minuscule_module(e6, 4), std::invalid_argument);
}

TEST(Chevalley, BracketIsCommutatorAndJacobiHolds) {
    RootSystem rs = build_root_system("E6");
    MinusculeModule m = minuscule_module(rs, 1);
    ChevalleyBasis cb = chevalley_basis(m, e6_table().priority);
    std::mt19937 rng(0);
    for (int k = 0; k < 200; ++k) {
        LieElement a = random_element(rs, rng), b = random_element(rs, rng), c = random_element(rs, rng);
        QMatrix A = to_module(cb, a), B = to_module(cb, b), C = to_module(cb, c);
        ASSERT_EQ(to_module(cb, chevalley_bracket(cb, a, b)), A * B - B * A);
        QMatrix j1 = to_module(cb, chevalley_bracket(cb, a, chevalley_bracket(cb, b, c)));
        QMatrix j2 = to_module(cb, chevalley_bracket(cb, b, chevalley_bracket(cb, c, a)));
        QMatrix j3 = to_module(cb, chevalley_bracket(cb, c, chevalley_bracket(cb, a, b)));
        ASSERT_EQ(j1 + j2 + j3, QMatrix(27, 27, Rational(0)));
    }
}

TEST(Chevalley, StructureConstantsAreIntegral) {
    RootSystem rs = build_root_system("E7");
    MinusculeModule m = minuscule_module(rs, 1);
    ChevalleyBasis cb = chevalley_basis(m, e7_table().priority);
    for (const auto& mat : cb.pos)
        for (std::size_t i = 0; i < mat.rows(); ++i)
            for (std::size_t j = 0; j < mat.cols(); ++j) ASSERT_LE(std::abs(mat(i, j)), 1);
}

TEST(Centralizer, TypeAIsPowersOfX) {
    for (int n = 3; n <= 6; ++n) {
        RootSystem rs = build_root_system("A" + std::to_string(n - 1));
        MinusculeModule m = minuscule_module(rs, 1);
        ChevalleyBasis cb = chevalley_basis(m);
        QMatrix x = to_module(cb, principal_nilpotent(rs));
        auto elems = centralizer_basis(cb);
        ASSERT_EQ(elems.size(), static_cast<std::size_t>(n - 1));
        QMatrix power = x;
        for (const auto& e : elems) {
            QMatrix y = to_module(cb, e.y_element());
            // y = c x^d for one nonzero c
            std::optional<Rational> c;
            bool ok = true;
            for (std::size_t i = 0; i < y.rows(); ++i)
                for (std::size_t j = 0; j < y.cols(); ++j) {
                    if (power(i, j) == 0) {
                        ok = ok && y(i, j) == 0;
                        continue;
                    }
                    Rational r = y(i, j) / power(i, j);
                    if (c && *c != r) ok = false;
                    c = r;
                }
            EXPECT_TRUE(ok && c && *c != 0) << "A" << n - 1 << " d=" << e.d;
            power = power * x;
        }
    }
}

TEST(Centralizer, ExponentProfile) {
    for (std::string label : {"E6", "E7"}) {
        RootSystem rs = build_root_system(label);
        MinusculeModule m = minuscule_module(rs, 1);
        ChevalleyBasis cb = chevalley_basis(m, centralizer_table(label).priority);
        std::vector<int> ds;
        for (const auto& e : centralizer_basis(cb)) ds.push_back(e.d);
        EXPECT_EQ(ds, rs.exponents());
        EXPECT_EQ(xq_centralizer_dimension(cb, Rational(1)), static_cast<std::size_t>(rs.rank));
        EXPECT_GT(xq_centralizer_dimension(cb, Rational(0)), static_cast<std::size_t>(rs.rank) - 1);
    }
}

TEST(Centralizer, QCorrectionCommutesWithXq) {
    RootSystem rs = build_root_system("E6");
    MinusculeModule m = minuscule_module(rs, 1);
    ChevalleyBasis cb = chevalley_basis(m, e6_table().priority);
    QMatrix xq = xq_matrix(cb, Rational(1));
    for (auto e : centralizer_basis(cb)) {
        centralizer_q_correction(cb, e);
        LieElement full = e.y_element();
        for (const auto& [b, c] : e.z) full.pos[b] += c;
        QMatrix y = to_module(cb, full);
        EXPECT_EQ(xq * y, y * xq) << "d=" << e.d;
    }
}

TEST(Minuscule, CentralizerAlgebraSpansModule) {
    // x_q alone does not: its eigenvalues on the 27 weights repeat
    RootSystem rs = build_root_system("E6");
    MinusculeModule m = minuscule_module(rs, 1);
    ChevalleyBasis cb = chevalley_basis(m, e6_table().priority);
    std::vector<QMatrix> gens;
    for (auto e : centralizer_basis(cb)) {
        centralizer_q_correction(cb, e);
        LieElement full = e.y_element();
        for (const auto& [b, c] : e.z) full.pos[b] += c;
        gens.push_back(to_module(cb, full));
    }
    std::vector<std::vector<Rational>> span;
    std::vector<Rational> v0(27, Rational(0));
    v0[0] = 1;
    std::vector<std::vector<Rational>> frontier{v0};
    auto rank_of = [](const std::vector<std::vector<Rational>>& vs) {
        QMatrix K(27, vs.size(), Rational(0));
        for (std::size_t c = 0; c < vs.size(); ++c)
            for (std::size_t i = 0; i < 27; ++i) K(i, c) = vs[c][i];
        return rank(K);
    };
    span.push_back(v0);
    while (!frontier.empty()) {
        std::vector<std::vector<Rational>> next;
        for (const auto& v : frontier)
            for (const auto& g : gens) {
                auto w = g.apply(v);
                auto trial = span;
                trial.push_back(w);
                if (rank_of(trial) > span.size()) {
                    span.push_back(w);
                    next.push_back(w);
                }
            }
        frontier.swap(next);
    }
    EXPECT_EQ(span.size(), 27u);
    QMatrix x = xq_matrix(cb, Rational(1));
    std::vector<std::vector<Rational>> krylov{v0};
    for (int k = 1; k < 27; ++k) krylov.push_back(x.apply(krylov.back()));
    EXPECT_EQ(rank_of(krylov), 25u);
}

TEST(Minuscule, XqIsDiagonalizable) {
    for (std::string label : {"E6", "E7"}) {
        RootSystem rs = build_root_system(label);
        MinusculeModule m = minuscule_module(rs, 1);
        ChevalleyBasis cb = chevalley_basis(m);
        CMatrix x = to_complex(xq_matrix(cb, Rational(1)));
        Eigen::ComplexEigenSolver<CMatrix> es(x);
        Eigen::FullPivLU<CMatrix> lu(es.eigenvectors());
        lu.setThreshold(1e-8);
        EXPECT_EQ(lu.rank(), x.rows()) << label;
    }
}

TEST(Words, GreedyLabelsRoundTrip) {
    RootSystem rs = build_root_system("E7");
    MinusculeModule m = minuscule_module(rs, 1);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        std::string w = weight_word(m, i);
        EXPECT_EQ(static_cast<int>(w.size()), m.depth[i]);
        EXPECT_EQ(weight_of_word(m, w), std::optional<std::size_t>(i));
    }
    EXPECT_FALSE(weight_of_word(m, "2").has_value());
}

TEST(Tables, E6AllMatch) {
    auto c = compare_centralizer_table(e6_table());
    EXPECT_TRUE(c.exponents_match());
    EXPECT_TRUE(c.p_all_match());
    EXPECT_TRUE(c.y_all_match());
    for (const auto& r : c.rows) EXPECT_EQ(r.p_scalar, Rational(1)) << r.d;
}

TEST(Tables, E7ClassesMatchAfterRecordedCorrections) {
    auto c = compare_centralizer_table(e7_table());
    EXPECT_TRUE(c.exponents_match());
    EXPECT_TRUE(c.p_all_match());
    std::size_t corrections = 0;
    for (const auto& r : c.rows) corrections += r.corrections.size();
    EXPECT_EQ(corrections, 4u);
    // two printed y lists keep sign differences; recorded, not matched
    std::vector<int> unmatched;
    for (const auto& r : c.rows)
        if (!r.y_match) unmatched.push_back(r.d);
    EXPECT_EQ(unmatched, (std::vector<int>{7, 9}));
}
