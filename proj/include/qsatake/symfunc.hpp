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

#ifndef QSATAKE_SYMFUNC_HPP
#define QSATAKE_SYMFUNC_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "partition.hpp"
#include "pfaffian.hpp"

namespace qsatake {

enum class SymBasis { H, E };

/* Rational combination of monomials in h_1, h_2, ... (or e_1, e_2, ...).
   A monomial is its weakly decreasing index list; {} is the constant 1. */
class SymFunc {
   public:
    using Monomial = std::vector<int>;

    SymFunc() = default;
    SymFunc(long c) {  // NOLINT: constants convert implicitly, needed for generic ring code
        if (c != 0) terms_[{}] = Rational(c);
    }
    SymFunc(const Rational& c) {
        if (c != 0) terms_[{}] = c;
    }

    static SymFunc gen(SymBasis b, int k) {
        SymFunc f;
        f.basis_ = b;
        if (k == 0) f.terms_[{}] = 1;
        if (k > 0) f.terms_[{k}] = 1;
        return f;
    }
    static SymFunc h(int k) { return gen(SymBasis::H, k); }
    static SymFunc e(int k) { return gen(SymBasis::E, k); }

    SymBasis basis() const noexcept { return basis_; }
    // Constants carry no basis information; this only relabels them.
    SymFunc& relabel_constant(SymBasis b) {
        if (!is_constant()) throw std::logic_error("relabel of non-constant symmetric function");
        basis_ = b;
        return *this;
    }
    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

    SymFunc to_h() const;

    SymFunc operator-() const {
        SymFunc r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    SymFunc& operator+=(const SymFunc& o) {
        if (!align(o)) return *this += o.to_h();
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SymFunc& operator-=(const SymFunc& o) { return *this += -o; }
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(const Rational& s, SymFunc a) {
        if (s == 0) return SymFunc();
        for (auto& [m, c] : a.terms_) c *= s;
        return a;
    }
    friend SymFunc operator*(const SymFunc& a0, const SymFunc& b0) {
        SymFunc a = a0, b = b0;
        if (!a.align(b)) {
            a = a.to_h();
            b = b.to_h();
        }
        SymFunc r;
        r.basis_ = a.is_constant() ? b.basis_ : a.basis_;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                std::sort(m.rbegin(), m.rend());
                r.add_term(m, ca * cb);
            }
        return r;
    }
    SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }

    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        if (a.basis_ == b.basis_ || a.is_constant() || b.is_constant()) {
            if (a.basis_ == b.basis_ || (a.is_constant() && b.is_constant())) return a.terms_ == b.terms_;
        }
        return a.to_h().terms_ == b.to_h().terms_;
    }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    // Drops e-monomials containing e_k with k > n (e_k = 0 in n variables).
    SymFunc truncate_e(int n) const {
        if (basis_ != SymBasis::E) throw std::logic_error("truncate_e on h-basis function");
        SymFunc r;
        r.basis_ = SymBasis::E;
        for (const auto& [m, c] : terms_)
            if (m.empty() || m.front() <= n) r.terms_[m] = c;
        return r;
    }

    // Value at a point, given generator values g[k] = h_k or e_k (g[0] = 1).
    Complex eval_with(const std::vector<Complex>& g) const {
        Complex acc = 0;
        for (const auto& [m, c] : terms_) {
            Complex v = c.get_d();
            for (int k : m) v *= k < static_cast<int>(g.size()) ? g[static_cast<std::size_t>(k)] : Complex(0);
            acc += v;
        }
        return acc;
    }
    Complex eval(const std::vector<Complex>& z) const;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        const char* g = basis_ == SymBasis::H ? "h" : "e";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            bool neg = c < 0;
            Rational mag = neg ? Rational(-c) : c;
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            bool unit = mag == 1 && !m.empty();
            if (!unit) out += mag.get_str();
            std::size_t i = 0;
            while (i < m.size()) {
                std::size_t j = i;
                while (j < m.size() && m[j] == m[i]) ++j;
                out += std::string(g) + std::to_string(m[i]);
                if (j - i > 1) out += "^" + std::to_string(j - i);
                i = j;
            }
        }
        return out;
    }

   private:
    void add_term(const Monomial& m, const Rational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    // Same basis, or one side constant. Adopts the other basis when we are constant.
    bool align(const SymFunc& o) {
        if (basis_ == o.basis_ || o.is_constant()) return true;
        if (is_constant()) {
            basis_ = o.basis_;
            return true;
        }
        return false;
    }

    SymBasis basis_ = SymBasis::H;
    std::map<Monomial, Rational> terms_;
};

namespace detail {

// e_k in the h basis: e_k = sum_{i=1}^k (-1)^{i-1} h_i e_{k-i}.
inline const SymFunc& e_in_h(int k) {
    static std::deque<SymFunc> cache{SymFunc(1L)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= k) {
        int m = static_cast<int>(cache.size());
        SymFunc acc;
        for (int i = 1; i <= m; ++i) {
            SymFunc t = SymFunc::h(i) * cache[static_cast<std::size_t>(m - i)];
            if (i % 2 == 1)
                acc += t;
            else
                acc -= t;
        }
        cache.push_back(acc);
    }
    return cache[static_cast<std::size_t>(k)];
}

}  // namespace detail

inline SymFunc SymFunc::to_h() const {
    if (basis_ == SymBasis::H) return *this;
    SymFunc r;
    for (const auto& [m, c] : terms_) {
        SymFunc t(c);
        for (int k : m) t = t * detail::e_in_h(k);
        r += t;
    }
    r.basis_ = SymBasis::H;
    return r;
}

// e_k(z) for k = 0..K (zero beyond len(z)).
inline std::vector<Complex> elementary_values(const std::vector<Complex>& z, int K) {
    std::vector<Complex> e(static_cast<std::size_t>(std::max(K, 0) + 1), Complex(0));
    e[0] = 1;
    for (const auto& x : z)
        for (int k = std::min<int>(K, static_cast<int>(z.size())); k >= 1; --k) e[static_cast<std::size_t>(k)] += x * e[static_cast<std::size_t>(k - 1)];
    return e;
}

// h_k(z) for k = 0..K.
inline std::vector<Complex> complete_values(const std::vector<Complex>& z, int K) {
    std::vector<Complex> h(static_cast<std::size_t>(std::max(K, 0) + 1), Complex(0));
    h[0] = 1;
    for (const auto& x : z)
        for (int k = 1; k <= K; ++k) h[static_cast<std::size_t>(k)] += x * h[static_cast<std::size_t>(k - 1)];
    return h;
}

inline Complex SymFunc::eval(const std::vector<Complex>& z) const {
    int K = 0;
    for (const auto& [m, c] : terms_)
        if (!m.empty()) K = std::max(K, m.front());
    return eval_with(basis_ == SymBasis::H ? complete_values(z, K) : elementary_values(z, K));
}

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}).
inline SymFunc schur_in_h(const Partition& lam) {
    const std::size_t l = lam.size();
    Matrix<SymFunc> m(l, l, SymFunc());
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) m(i, j) = SymFunc::h(lam[i] - static_cast<int>(i) + static_cast<int>(j));
    return det_cofactor(m, SymFunc(1L));
}

// p_t = sum_{r+s=t} (-1)^s r e_s h_r, returned in the h basis.
inline SymFunc power_sum_in_eh(int t) {
    if (t < 1) throw std::invalid_argument("power sum index must be positive");
    SymFunc acc;
    for (int r = 1; r <= t; ++r) {
        int s = t - r;
        SymFunc term = Rational((s % 2 == 0) ? r : -r) * (detail::e_in_h(s) * SymFunc::h(r));
        acc += term;
    }
    return acc.to_h();
}

// p_mu = prod p_{mu_i}, h basis.
inline SymFunc power_sum_product(const Partition& mu) {
    SymFunc acc(1L);
    for (int k : mu) acc = acc * power_sum_in_eh(k);
    return acc;
}

/* Schur function at a point. Ratio of alternants when the coordinates are
   pairwise distinct (relative separation above 1e-9), Jacobi-Trudi otherwise. */
inline Complex schur_eval_jt(const Partition& lam, const std::vector<Complex>& z) {
    const int l = length(lam);
    if (l == 0) return 1;
    int K = lam.empty() ? 0 : lam[0] + l;
    auto h = complete_values(z, K);
    CMatrix m(l, l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int k = lam[static_cast<std::size_t>(i)] - i + j;
            m(i, j) = k < 0 ? Complex(0) : h[static_cast<std::size_t>(k)];
        }
    return m.determinant();
}

inline Complex schur_eval(const Partition& lam, const std::vector<Complex>& z) {
    const int a = static_cast<int>(z.size());
    if (length(lam) > a) return 0;
    if (lam.empty()) return 1;
    double scale = 1.0;
    for (const auto& x : z) scale = std::max(scale, std::abs(x));
    bool distinct = true;
    for (int i = 0; i < a && distinct; ++i)
        for (int j = i + 1; j < a; ++j)
            if (std::abs(z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]) < 1e-9 * scale) {
                distinct = false;
                break;
            }
    if (!distinct) return schur_eval_jt(lam, z);
    CMatrix num(a, a), den(a, a);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j) {
            num(i, j) = std::pow(z[static_cast<std::size_t>(i)], part(lam, j) + a - 1 - j);
            den(i, j) = std::pow(z[static_cast<std::size_t>(i)], a - 1 - j);
        }
    return num.determinant() / den.determinant();
}

inline Partition hook(int k, int j) {
    Partition p{k};
    for (int i = 0; i < j; ++i) p.push_back(1);
    return p;
}

// chi^lambda_mu by Murnaghan-Nakayama, stripping rims of size mu_1, mu_2, ...
inline long long mn_character(const Partition& lam, const Partition& mu) {
    if (partition_size(lam) != partition_size(mu)) throw std::invalid_argument("mn_character: size mismatch");
    static std::map<std::pair<Partition, Partition>, long long> memo;
    static std::mutex mtx;
    std::function<long long(const Partition&, std::size_t)> rec = [&](const Partition& l, std::size_t k) -> long long {
        if (k == mu.size()) return l.empty() ? 1 : 0;
        Partition rest(mu.begin() + static_cast<std::ptrdiff_t>(k), mu.end());
        {
            std::lock_guard<std::mutex> lock(mtx);
            auto it = memo.find({l, rest});
            if (it != memo.end()) return it->second;
        }
        long long acc = 0;
        for (const auto& r : remove_border_rims(l, mu[k])) acc += (r.height % 2 ? -1 : 1) * rec(r.shape, k + 1);
        std::lock_guard<std::mutex> lock(mtx);
        memo[{l, rest}] = acc;
        return acc;
    };
    return rec(lam, 0);
}

/* Skew table P~_{r,s} in n_vars variables, entries in the e basis:
   P~_0 = 1, P~_i = e_i / 2,
   P~_{r,s} = P~_r P~_s + 2 sum_{i=1}^{s-1} (-1)^i P~_{r+i} P~_{s-i} + (-1)^s P~_{r+s}   (r > s >= 1),
   extended skew-symmetrically, with P~_{r,0} = P~_r. */
class PtildeTable {
   public:
    PtildeTable(int n_vars, int bound) : n_(n_vars), bound_(bound) {
        if (bound < 1) throw std::invalid_argument("ptilde bound must be positive");
        auto P = [&](int i) -> SymFunc {
            if (i == 0) return SymFunc::e(0);
            if (i > n_) return SymFunc();
            return Rational(1, 2) * SymFunc::e(i);
        };
        for (int r = 0; r <= bound_; ++r)
            for (int s = 0; s < r; ++s) {
                SymFunc v;
                if (s == 0) {
                    v = P(r);
                } else {
                    v = P(r) * P(s);
                    for (int i = 1; i <= s - 1; ++i) {
                        SymFunc t = Rational(2) * (P(r + i) * P(s - i));
                        if (i % 2 == 0)
                            v += t;
                        else
                            v -= t;
                    }
                    if (s % 2 == 0)
                        v += P(r + s);
                    else
                        v -= P(r + s);
                }
                v = as_e(v);
                e_[{r, s}] = v;
                e_[{s, r}] = -v;
            }
        for (int r = 0; r <= bound_; ++r) e_[{r, r}] = as_e(SymFunc());
    }

    int n_vars() const noexcept { return n_; }
    int bound() const noexcept { return bound_; }
    const SymFunc& entry(int r, int s) const { return e_.at({r, s}); }

    Matrix<Complex> evaluate(const std::vector<Complex>& z) const {
        auto ev = elementary_values(z, 2 * bound_ + 1);
        Matrix<Complex> m(static_cast<std::size_t>(bound_ + 1), static_cast<std::size_t>(bound_ + 1), Complex(0));
        for (int r = 0; r <= bound_; ++r)
            for (int s = r + 1; s <= bound_; ++s) {
                Complex v = entry(r, s).eval_with(ev);
                m(static_cast<std::size_t>(r), static_cast<std::size_t>(s)) = v;
                m(static_cast<std::size_t>(s), static_cast<std::size_t>(r)) = -v;
            }
        return m;
    }

   private:
    static SymFunc as_e(SymFunc f) {
        if (f.basis() == SymBasis::E) return f;
        return f.relabel_constant(SymBasis::E);
    }

    int n_, bound_;
    std::map<std::pair<int, int>, SymFunc> e_;
};

inline PtildeTable ptilde_build(int n_vars, int bound) { return PtildeTable(n_vars, bound); }

inline std::vector<std::size_t> ptilde_indices(const StrictPartition& lam) {
    std::vector<std::size_t> idx;
    for (int x : lam) idx.push_back(static_cast<std::size_t>(x));
    if (idx.size() % 2) idx.push_back(0);
    return idx;
}

// Pf of the lambda-minor of P~(z); lambda padded with a zero part to even length.
inline Complex ptilde_eval(const PtildeTable& table, const StrictPartition& lam, const std::vector<Complex>& z) {
    for (int x : lam)
        if (x > table.bound()) throw std::out_of_range("ptilde part beyond table bound");
    return pfaffian_minor(table.evaluate(z), ptilde_indices(lam), Complex(1), false);
}

// Same, from an already evaluated table.
inline Complex ptilde_eval(const Matrix<Complex>& evaluated, const StrictPartition& lam) {
    return pfaffian_minor(evaluated, ptilde_indices(lam), Complex(1), false);
}

}  // namespace qsatake

#endif
