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

#include <qsatake/pfaffian.hpp>
#include <qsatake/quadric.hpp>
#include <qsatake/spinor.hpp>

#include "oracle/ptilde_spectral.hpp"

using namespace qsatake;

namespace {

Matrix<QPoly> random_so(int n, std::mt19937& rng) {
    const auto N = static_cast<std::size_t>(2 * n);
    std::uniform_int_distribution<int> c(-3, 3), deg(0, 1);
    Matrix<QPoly> a(N, N, QPoly("q"));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) a(i, j) = QPoly::monomial(Rational(c(rng)), static_cast<std::size_t>(deg(rng)), "q");
    Matrix<QPoly> x(N, N, QPoly("q"));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) x(i, j) = a(i, j) - a(N - 1 - j, N - 1 - i);
    return x;
}

SpinVector act(const Matrix<QPoly>& X, const SpinVector& v) { return spin_action(X, v); }

}  // namespace

TEST(Spinor, RepresentationProperty) {
    std::mt19937 rng(0);
    for (int n = 2; n <= 5; ++n)
        for (int rep = 0; rep < 6; ++rep) {
            auto X = random_so(n, rng), Y = random_so(n, rng);
            ASSERT_TRUE(is_antidiagonal_skew(X));
            Matrix<QPoly> br = X * Y - Y * X;
            for (unsigned mask = 0; mask < (1U << n); ++mask) {
                Subset S;
                for (int i = 1; i <= n; ++i)
                    if (mask >> (i - 1) & 1U) S.push_back(i);
                SpinVector v = SpinVector::basis(S);
                SpinVector lhs = act(br, v);
                SpinVector rhs = act(X, act(Y, v)) - act(Y, act(X, v));
                ASSERT_EQ(lhs, rhs) << "n=" << n;
            }
        }
}

TEST(Spinor, RejectsMatricesOutsideSo2n) {
    Matrix<QPoly> m(4, 4, QPoly("q"));
    m(0, 1) = QPoly::constant(Rational(1), "q");
    EXPECT_THROW(spin_action(m, SpinVector::basis({})), std::invalid_argument);
}

TEST(Spinor, CyclicElementCommutesWithYq) {
    for (int n = 3; n <= 6; ++n) {
        auto x = quadric_xq(n), y = spinor_yq(n);
        EXPECT_TRUE(is_antidiagonal_skew(y));
        EXPECT_EQ(x * y, y * x) << n;
    }
}

TEST(Spinor, PowerProductsMatchSpectralOracle) {
    for (int n = 3; n <= 6; ++n) {
        oracle::SpinorSpectralOracle o(n);
        for (int r = 1; 2 * r - 1 <= 2 * n - 3; ++r)
            for (const auto& lam : spinor_labels(n)) {
                double res = 0;
                auto expect = o.power_product(r, lam, res);
                ASSERT_LT(res, 1e-6);
                PartitionVector ev;
                for (const auto& [nu, c] : expect) {
                    ASSERT_GE(c.second, 0) << "degree mismatch";
                    ev.add(nu, q_monomial(c.first, static_cast<unsigned>(c.second)));
                }
                ASSERT_EQ(spinor_power_product(r, lam, n), ev) << "n=" << n << " r=" << r << " " << to_string(lam);
            }
    }
}

TEST(Spinor, SpectralProductOfLibraryAgreesWithSpinAction) {
    for (int n = 3; n <= 6; ++n) {
        auto d = spinor_spectral_data(n, 1.0);
        for (const auto& lam : spinor_labels(n)) {
            auto r = spinor_spectral_product({1}, lam, d);
            EXPECT_LT(r.residual, 1e-6);
            EXPECT_EQ(r.value, spinor_power_product(1, lam, n)) << to_string(lam);
        }
    }
}

TEST(Spinor, TopClassTwoTermFormula) {
    for (int n = 3; n <= 6; ++n)
        for (const auto& lam : spinor_labels(n)) {
            auto rep = spinor_tau_top_product(lam, n);
            EXPECT_TRUE(rep.agree) << "n=" << n << " " << to_string(lam) << ": " << pretty(rep.from_yq) << " vs " << pretty(rep.from_formula);
        }
}

TEST(Spinor, UMatrixIsSkewAndMatchesPtilde) {
    for (int n = 3; n <= 6; ++n)
        for (const auto& z : spinor_spectrum(n, 1.0)) {
            auto u = u_matrix(z);
            EXPECT_LT(u.skew_residual, 1e-9);
            EXPECT_LT(u.ptilde_residual, 1e-9);
            EXPECT_LT(u.hook_interior_residual, 1e-9);
        }
}

TEST(Spinor, WeightVectorsAreEigenvectors) {
    for (int n = 3; n <= 5; ++n) {
        std::vector<Subset> basis;
        CMatrix X = spin_action_numeric(quadric_xq(n), 1.0, &basis);
        for (const auto& z : spinor_spectrum(n, 1.0)) {
            auto v = spinor_weight_vector(z);
            CVector w(static_cast<Eigen::Index>(basis.size()));
            for (std::size_t i = 0; i < basis.size(); ++i) w(static_cast<Eigen::Index>(i)) = v.at(basis[i]);
            Complex lambda = 0;
            for (auto x : z) lambda += 0.5 * x;
            EXPECT_LT((X * w - lambda * w).norm(), 1e-8 * std::max(1.0, w.norm()));
        }
    }
}

TEST(Spinor, OracleSpectrumIsSimpleForOddRankPower) {
    // the P~ functions separate the spectrum, so the oracle's solve is well posed
    for (int n = 3; n <= 6; ++n) {
        oracle::SpinorSpectralOracle o(n);
        double res = 0;
        auto e = o.power_product(1, {}, res);
        ASSERT_EQ(e.size(), 1u);
        EXPECT_EQ(e.begin()->first, (oracle::Strict{1}));
    }
}
