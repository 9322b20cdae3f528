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

#ifndef QSATAKE_ORACLE_PRESENTATION_HPP
#define QSATAKE_ORACLE_PRESENTATION_HPP

// QH(G(a,b)) as Q[e_1..e_a, q] / (h_{b+1}, ..., h_{n-1}, h_n + (-1)^a q),
// products reduced by linear algebra degree by degree. Shares nothing with
// the Pieri / rim / wedge code except the exact rational solver.

#include <map>
#include <stdexcept>
#include <vector>

#include <qsatake/matrix.hpp>
#include <qsatake/partition.hpp>
#include <qsatake/schubert.hpp>

namespace oracle {

using qsatake::Partition;
using qsatake::Rational;

// Polynomial in e_1..e_a and q: exponent vector (size a + 1, q last) -> coefficient.
struct MPoly {
    std::map<std::vector<int>, Rational> t;

    void add(const std::vector<int>& m, const Rational& c) {
        if (c == 0) return;
        auto& r = t[m];
        r += c;
        if (r == 0) t.erase(m);
    }
    MPoly& operator+=(const MPoly& o) {
        for (const auto& [m, c] : o.t) add(m, c);
        return *this;
    }
    friend MPoly operator+(MPoly x, const MPoly& y) { return x += y; }
    friend MPoly operator-(MPoly x, const MPoly& y) {
        for (const auto& [m, c] : y.t) x.add(m, -c);
        return x;
    }
    friend MPoly operator*(const MPoly& x, const MPoly& y) {
        MPoly r;
        for (const auto& [m1, c1] : x.t)
            for (const auto& [m2, c2] : y.t) {
                std::vector<int> m(m1.size());
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
                r.add(m, c1 * c2);
            }
        return r;
    }
    friend MPoly operator*(const Rational& s, MPoly x) {
        MPoly r;
        for (const auto& [m, c] : x.t) r.add(m, s * c);
        return r;
    }
};

class Presentation {
   public:
    Presentation(int a, int b) : a_(a), b_(b), n_(a + b) {
        h_.push_back(constant(1));
        for (int k = 1; k <= n_; ++k) {
            MPoly s;
            for (int i = 1; i <= std::min(k, a_); ++i) {
                MPoly term = e(i) * h_[static_cast<std::size_t>(k - i)];
                s = (i % 2) ? s + term : s - term;
            }
            h_.push_back(s);
        }
        for (int k = b_ + 1; k < n_; ++k) gens_.push_back({h_[static_cast<std::size_t>(k)], k});
        MPoly top = h_[static_cast<std::size_t>(n_)];
        MPoly qq = var(a_);
        gens_.push_back({(a_ % 2 == 0) ? top + qq : top - qq, n_});
        basis_ = qsatake::partitions_in_box(a_, b_);
        for (const auto& l : basis_) schur_[l] = schur(l);
    }

    int n() const { return n_; }
    int degree(const std::vector<int>& m) const {
        int d = 0;
        for (int i = 0; i < a_; ++i) d += (i + 1) * m[static_cast<std::size_t>(i)];
        return d + n_ * m[static_cast<std::size_t>(a_)];
    }
    MPoly constant(long c) const {
        MPoly p;
        p.add(std::vector<int>(static_cast<std::size_t>(a_ + 1), 0), Rational(c));
        return p;
    }
    MPoly var(int i) const {
        std::vector<int> m(static_cast<std::size_t>(a_ + 1), 0);
        m[static_cast<std::size_t>(i)] = 1;
        MPoly p;
        p.add(m, 1);
        return p;
    }
    MPoly e(int k) const {
        if (k == 0) return constant(1);
        if (k < 0 || k > a_) return MPoly();
        return var(k - 1);
    }

    // dual Jacobi-Trudi: s_lambda = det(e_{lambda'_i - i + j})
    MPoly schur(const Partition& lam) const {
        Partition c = qsatake::conjugate(lam);
        const int L = static_cast<int>(c.size());
        if (L == 0) return constant(1);
        std::vector<std::vector<MPoly>> m(static_cast<std::size_t>(L), std::vector<MPoly>(static_cast<std::size_t>(L)));
        for (int i = 0; i < L; ++i)
            for (int j = 0; j < L; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e(c[static_cast<std::size_t>(i)] - i + j);
        return det(m);
    }

    // Newton: p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
    MPoly power_sum(int k) const {
        std::vector<MPoly> p{constant(0)};
        for (int j = 1; j <= k; ++j) {
            MPoly s = Rational((j % 2) ? j : -j) * e(j);
            for (int i = 1; i < j; ++i) {
                MPoly term = e(i) * p[static_cast<std::size_t>(j - i)];
                s = (i % 2) ? s + term : s - term;
            }
            p.push_back(s);
        }
        return p[static_cast<std::size_t>(k)];
    }

    // Schubert expansion of f (homogeneous); throws if f is not homogeneous.
    qsatake::PartitionVector expand(const MPoly& f) const {
        qsatake::PartitionVector out;
        if (f.t.empty()) return out;
        const int d = degree(f.t.begin()->first);
        for (const auto& [m, c] : f.t)
            if (degree(m) != d) throw std::invalid_argument("oracle: inhomogeneous polynomial");
        const auto& D = data(d);
        std::vector<Rational> rhs(D.monos.size(), Rational(0));
        for (const auto& [m, c] : f.t) rhs[D.index.at(m)] = c;
        auto sol = qsatake::solve(D.A, rhs);
        if (!sol) throw std::logic_error("oracle: reduction failed");
        for (std::size_t k = 0; k < D.targets.size(); ++k) {
            const Rational& c = (*sol)[D.ideal_cols + k];
            if (c != 0) out.add(D.targets[k].first, qsatake::QPoly::monomial(c, static_cast<std::size_t>(D.targets[k].second), "q"));
        }
        return out;
    }

    qsatake::PartitionVector multiply(const Partition& x, const Partition& y) const { return expand(schur_.at(x) * schur_.at(y)); }
    qsatake::PartitionVector power_sum_times(int l, const Partition& x) const { return expand(power_sum(l) * schur_.at(x)); }

   private:
    struct DegreeData {
        std::vector<std::vector<int>> monos;
        std::map<std::vector<int>, std::size_t> index;
        qsatake::QMatrix A;  // columns: ideal multiples, then q^k s_lambda
        std::size_t ideal_cols = 0;
        std::vector<std::pair<Partition, int>> targets;
    };

    static MPoly det(std::vector<std::vector<MPoly>> m) {
        const std::size_t L = m.size();
        if (L == 1) return m[0][0];
        MPoly s;
        for (std::size_t j = 0; j < L; ++j) {
            if (m[0][j].t.empty()) continue;
            std::vector<std::vector<MPoly>> minor;
            for (std::size_t i = 1; i < L; ++i) {
                std::vector<MPoly> row;
                for (std::size_t k = 0; k < L; ++k)
                    if (k != j) row.push_back(m[i][k]);
                minor.push_back(row);
            }
            MPoly t = m[0][j] * det(minor);
            s = (j % 2) ? s - t : s + t;
        }
        return s;
    }

    void monomials(int d, std::size_t i, std::vector<int>& cur, std::vector<std::vector<int>>& out) const {
        if (i == static_cast<std::size_t>(a_ + 1)) {
            if (degree(cur) == d) out.push_back(cur);
            return;
        }
        int w = (i == static_cast<std::size_t>(a_)) ? n_ : static_cast<int>(i) + 1;
        cur[i] = 0;
        const int base = degree(cur);
        for (int k = 0; base + k * w <= d; ++k) {
            cur[i] = k;
            monomials(d, i + 1, cur, out);
        }
        cur[i] = 0;
    }

    const DegreeData& data(int d) const {
        auto it = cache_.find(d);
        if (it != cache_.end()) return it->second;
        DegreeData D;
        std::vector<int> cur(static_cast<std::size_t>(a_ + 1), 0);
        monomials(d, 0, cur, D.monos);
        for (std::size_t k = 0; k < D.monos.size(); ++k) D.index[D.monos[k]] = k;
        std::vector<MPoly> cols;
        for (const auto& [g, dg] : gens_) {
            if (dg > d) continue;
            std::vector<std::vector<int>> mult;
            std::vector<int> c0(static_cast<std::size_t>(a_ + 1), 0);
            monomials(d - dg, 0, c0, mult);
            for (const auto& m : mult) {
                MPoly x;
                x.add(m, 1);
                cols.push_back(x * g);
            }
        }
        D.ideal_cols = cols.size();
        for (const auto& l : basis_) {
            int rest = d - qsatake::partition_size(l);
            if (rest < 0 || rest % n_) continue;
            int k = rest / n_;
            MPoly qk = constant(1);
            for (int j = 0; j < k; ++j) qk = qk * var(a_);
            cols.push_back(qk * schur_.at(l));
            D.targets.push_back({l, k});
        }
        D.A = qsatake::QMatrix(std::max<std::size_t>(D.monos.size(), 1), std::max<std::size_t>(cols.size(), 1), Rational(0));
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [m, v] : cols[c].t) D.A(D.index.at(m), c) = v;
        return cache_.emplace(d, std::move(D)).first->second;
    }

    int a_, b_, n_;
    std::vector<MPoly> h_;
    std::vector<std::pair<MPoly, int>> gens_;
    std::vector<Partition> basis_;
    std::map<Partition, MPoly> schur_;
    mutable std::map<int, DegreeData> cache_;
};

}  // namespace oracle

#endif
