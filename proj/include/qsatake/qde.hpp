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

#ifndef QSATAKE_QDE_HPP
#define QSATAKE_QDE_HPP

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lindep.hpp"
#include "matrix.hpp"
#include "ore.hpp"
#include "partition.hpp"
#include "quadric.hpp"
#include "spinor.hpp"
#include "type_a.hpp"

namespace qsatake {

/* Space descriptors: "A:a,b" for G(a, a+b), "Q:n" for the quadric Q^{2n-2},
   "OG:n" for OG(n, 2n). */
struct SpaceSpec {
    char family = 'A';  // 'A', 'Q' or 'O'
    int a = 0, b = 0, n = 0;

    std::string to_string() const {
        if (family == 'A') return "A:" + std::to_string(a) + "," + std::to_string(b);
        if (family == 'Q') return "Q:" + std::to_string(n);
        return "OG:" + std::to_string(n);
    }
};

inline SpaceSpec parse_space(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("space descriptor needs a colon: " + text);
    const std::string fam = s.substr(0, colon), rest = s.substr(colon + 1);
    SpaceSpec sp;
    try {
        if (fam == "A") {
            auto comma = rest.find(',');
            if (comma == std::string::npos) throw std::invalid_argument("A needs a,b");
            sp.family = 'A';
            sp.a = std::stoi(rest.substr(0, comma));
            sp.b = std::stoi(rest.substr(comma + 1));
            if (sp.a < 1 || sp.b < 1) throw std::invalid_argument("A needs a, b >= 1");
        } else if (fam == "Q") {
            sp.family = 'Q';
            sp.n = std::stoi(rest);
            if (sp.n < 2) throw std::invalid_argument("Q needs n >= 2");
        } else if (fam == "OG") {
            sp.family = 'O';
            sp.n = std::stoi(rest);
            if (sp.n < 2) throw std::invalid_argument("OG needs n >= 2");
        } else {
            throw std::invalid_argument("unknown family " + fam);
        }
    } catch (const std::logic_error& e) {
        throw std::invalid_argument("bad space descriptor '" + text + "': " + e.what());
    }
    return sp;
}

// Matrix of * h on the Schubert basis, columns = input class, quantum parameter t.
struct ConnectionMatrix {
    Matrix<QPoly> m;
    std::vector<std::string> labels;

    std::size_t dim() const { return labels.size(); }
};

namespace detail {

inline Matrix<QPoly> rename(Matrix<QPoly> m, const std::string& var) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j).set_var(var);
    return m;
}

// by size, then lexicographically decreasing: (), (1), (2), (3), (2,1), (4), ...
inline bool size_then_revlex(const Partition& x, const Partition& y) {
    int sx = partition_size(x), sy = partition_size(y);
    if (sx != sy) return sx < sy;
    return x > y;
}

}  // namespace detail

inline std::vector<Partition> grassmann_order(int a, int b) {
    std::vector<Partition> v = partitions_in_box(a, b);
    std::sort(v.begin(), v.end(), detail::size_then_revlex);
    return v;
}

inline std::vector<StrictPartition> spinor_order(int n) {
    std::vector<StrictPartition> v = spinor_labels(n);
    std::sort(v.begin(), v.end(), detail::size_then_revlex);
    return v;
}

inline ConnectionMatrix hyperplane_matrix(const SpaceSpec& sp) {
    ConnectionMatrix c;
    if (sp.family == 'A') {
        GrassmannSpace g{sp.a, sp.b};
        auto order = grassmann_order(sp.a, sp.b);
        c.m = detail::rename(hyperplane_matrix_a(g, order), "t");
        for (const auto& l : order) c.labels.push_back(to_string(l));
    } else if (sp.family == 'Q') {
        c.m = detail::rename(quadric_hyperplane_matrix(sp.n), "t");
        for (const auto& s : quadric_slots(sp.n)) c.labels.push_back(slot_label(s));
    } else if (sp.family == 'O') {
        auto order = spinor_order(sp.n);
        c.m = detail::rename(spinor_matrix(quadric_xq(sp.n), sp.n, order), "t");
        for (const auto& l : order) c.labels.push_back(to_string(l));
    } else {
        throw std::invalid_argument("unsupported space");
    }
    return c;
}

struct MinimalOperatorResult {
    OreOperator op;
    std::size_t span_dim = 0;  // dimension spanned by the iterates before the dependence
};

/* v_0 = e_cyclic, v_{k+1} = t v_k' + M v_k; the first Q(t)-dependence
   sum_k c_k(t) v_k = 0 gives L = sum_k c_k(t) D^k with t on the left.
   Content removed; P_0 has positive leading coefficient.
   If the vector is not cyclic this throws, unless require_cyclic is false:
   then the operator of the generated submodule is returned (span_dim < dim). */
inline MinimalOperatorResult minimal_operator(const ConnectionMatrix& M, std::size_t cyclic = 0, bool require_cyclic = true) {
    const std::size_t N = M.dim();
    if (cyclic >= N && N > 0) throw std::invalid_argument("cyclic vector index out of range");
    MinimalOperatorResult res;
    if (N == 0) throw std::invalid_argument("empty connection matrix");
    std::vector<std::vector<QPoly>> vs;
    std::vector<QPoly> v(N, QPoly("t"));
    v[cyclic] = QPoly::constant(Rational(1), "t");
    vs.push_back(v);
    for (std::size_t k = 0; k < N; ++k) {
        std::vector<QPoly> w(N, QPoly("t"));
        const std::vector<QPoly>& cur = vs.back();
        for (std::size_t i = 0; i < N; ++i) {
            QPoly d = cur[i].derivative() * qpoly_var("t");
            for (std::size_t j = 0; j < N; ++j)
                if (!M.m(i, j).is_zero() && !cur[j].is_zero()) d += M.m(i, j) * cur[j];
            d.set_var("t");
            w[i] = d;
        }
        vs.push_back(w);
    }
    auto dep = minimal_dependence(vs);
    if (!dep) throw std::logic_error("no dependence among the iterates");
    res.span_dim = dep->size() - 1;
    if (require_cyclic && res.span_dim < N) throw std::invalid_argument("cyclic vector generates only a " + std::to_string(res.span_dim) + "-dimensional span");
    OreOperator::Terms terms;
    for (std::size_t k = 0; k < dep->size(); ++k) {
        const auto& c = (*dep)[k].coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            terms[static_cast<unsigned>(i)] += QPoly::monomial(c[i], k, "D");
        }
    }
    OreOperator L = normalize_content(OreOperator(std::move(terms)));
    res.op = L;
    return res;
}

struct StripResult {
    QPoly factor;  // monic, removed on the left
    OreOperator op;
};

/* P_i(D) -> P_i(D) prod_{j=1..i} (D + j)^e, then strip the largest left factor. */
inline StripResult multiply_and_strip(const OreOperator& L, unsigned e) {
    OreOperator::Terms terms;
    for (const auto& [i, p] : L.terms()) {
        QPoly f = p;
        for (unsigned j = 1; j <= i; ++j) f = f * QPoly({Rational(static_cast<long>(j)), Rational(1)}, "D").pow(e);
        terms[i] = f;
    }
    auto [c, rest] = ore_left_strip(OreOperator(std::move(terms)));
    return {c, rest};
}

inline StripResult lefschetz_transform(const OreOperator& L, unsigned codim, unsigned multiplicity = 1) {
    return multiply_and_strip(L, codim * multiplicity);
}

inline StripResult regularize(const OreOperator& L) { return multiply_and_strip(L, 1); }

// D^3 - t (2D+1)(17D^2+17D+5) + t^2 (D+1)^3
inline OreOperator apery_operator() {
    const QPoly D = qpoly_var("D");
    const QPoly one = QPoly::constant(Rational(1), "D");
    QPoly p1 = (Rational(2) * D + one) * (Rational(17) * D * D + Rational(17) * D + Rational(5) * one);
    QPoly p2 = (D + one).pow(3);
    OreOperator::Terms t;
    t[0] = D.pow(3);
    t[1] = -p1;
    t[2] = p2;
    return OreOperator(std::move(t));
}

// sum_j C_j(n) u_{n-j} = 0.
struct Recurrence {
    std::vector<QPoly> c;  // C_0 .. C_k in the variable n

    int order() const { return static_cast<int>(c.size()) - 1; }
    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j].is_zero()) continue;
            if (os.tellp() > 0) os << " + ";
            os << "(" << c[j].to_string() << ") u[n" << (j ? "-" + std::to_string(j) : "") << "]";
        }
        os << " = 0";
        return os.str();
    }
};

inline Recurrence operator_to_recurrence(const OreOperator& L) {
    if (L.is_zero()) throw std::invalid_argument("recurrence of zero operator");
    Recurrence r;
    r.c.assign(static_cast<std::size_t>(L.t_degree()) + 1, QPoly("n"));
    for (const auto& [i, p] : L.terms()) {
        QPoly s = p.shift(-Rational(static_cast<long>(i)));
        s.set_var("n");
        r.c[i] = s;
    }
    if (r.c[0].is_zero()) throw std::invalid_argument("recurrence with C_0 = 0");
    return r;
}

/* u_0..u_{N} from the given initial values; C_0(n) must not vanish for
   n >= initial.size(). */
inline std::vector<Rational> solve_recurrence(const Recurrence& r, std::vector<Rational> initial, std::size_t N) {
    std::vector<Rational> u = std::move(initial);
    for (std::size_t n = u.size(); n <= N; ++n) {
        Rational nn(static_cast<long>(n));
        Rational c0 = r.c[0](nn);
        if (c0 == 0) throw std::domain_error("recurrence leading coefficient vanishes at n = " + std::to_string(n));
        Rational s = 0;
        for (std::size_t j = 1; j < r.c.size(); ++j)
            if (n >= j) s += r.c[j](nn) * u[n - j];
        u.push_back(-s / c0);
    }
    u.resize(N + 1);
    return u;
}

/* Power series f with D f = M^T f and f(0) = e_cyclic, to order t^N (the
   solution vector dual to the cyclic element). Needs M(0) nilpotent with
   e_cyclic in ker M(0)^T. */
inline std::vector<std::vector<Rational>> connection_series(const ConnectionMatrix& M, std::size_t N, std::size_t cyclic = 0) {
    const std::size_t dim = M.dim();
    std::vector<QMatrix> parts;  // M = sum_k t^k parts[k]
    int deg = 0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) deg = std::max(deg, M.m(i, j).degree());
    for (int k = 0; k <= deg; ++k) {
        QMatrix P(dim, dim, Rational(0));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) P(i, j) = M.m(i, j).coeff(static_cast<std::size_t>(k));
        parts.push_back(P.transpose());
    }
    std::vector<std::vector<Rational>> f(N + 1, std::vector<Rational>(dim, Rational(0)));
    f[0][cyclic] = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < dim; ++j) s += parts[0](i, j) * f[0][j];
        if (s != 0) throw std::invalid_argument("cyclic vector is not a flat section at t = 0");
    }
    for (std::size_t n = 1; n <= N; ++n) {
        // (n - A_0) f_n = sum_{k>=1} A_k f_{n-k}
        QMatrix sys(dim, dim, Rational(0));
        std::vector<Rational> rhs(dim, Rational(0));
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) sys(i, j) = -parts[0](i, j);
            sys(i, i) += Rational(static_cast<long>(n));
            for (std::size_t k = 1; k < parts.size() && k <= n; ++k)
                for (std::size_t j = 0; j < dim; ++j) rhs[i] += parts[k](i, j) * f[n - k][j];
        }
        auto sol = solve(sys, rhs);
        if (!sol) throw std::logic_error("connection series: singular step");
        f[n] = *sol;
    }
    return f;
}

struct AperyData {
    std::vector<Integer> a;
    std::vector<Rational> b;
    bool binomial_identity = false;   // a_n = sum_k C(n,k)^2 C(n+k,k)^2
    bool denominators_divide = false; // den(b_n) | 12 lcm(1..n)^3
};

inline Integer binomial(long n, long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer lcm_upto(long n) {
    Integer l = 1;
    for (long k = 2; k <= n; ++k) {
        Integer kk = k;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), kk.get_mpz_t());
    }
    return l;
}

/* Exact solutions a (a_0 = 1, a_1 = 5) and b (b_0 = 0, b_1 = 1) of the
   recurrence of L, n = 0..N. Throws if some a_n is not an integer. */
inline AperyData apery_sequences(std::size_t N, const OreOperator& L = apery_operator()) {
    if (N < 1) throw std::invalid_argument("apery_sequences needs N >= 1");
    Recurrence r = operator_to_recurrence(L);
    auto a = solve_recurrence(r, {Rational(1), Rational(5)}, N);
    auto b = solve_recurrence(r, {Rational(0), Rational(1)}, N);
    AperyData d;
    d.binomial_identity = true;
    d.denominators_divide = true;
    for (std::size_t n = 0; n <= N; ++n) {
        if (a[n].get_den() != 1) throw std::logic_error("a_" + std::to_string(n) + " is not an integer");
        d.a.push_back(a[n].get_num());
        Integer s = 0;
        const long ln = static_cast<long>(n);
        for (long k = 0; k <= ln; ++k) {
            Integer c = binomial(ln, k) * binomial(ln + k, k);
            s += c * c;
        }
        if (s != d.a.back()) d.binomial_identity = false;
        if (n >= 1) {
            Integer l = lcm_upto(ln);
            Integer m = 12 * l * l * l;
            if (!mpz_divisible_p(m.get_mpz_t(), b[n].get_den().get_mpz_t())) d.denominators_divide = false;
        }
    }
    d.b = std::move(b);
    return d;
}

/* zeta(3) in [lo, hi] from 5/2 sum_{k>=1} (-1)^{k+1} / (k^3 C(2k,k)): an
   alternating series with decreasing terms, so consecutive partial sums
   bracket the value. Width below 10^-digits. */
struct Zeta3Enclosure {
    Rational lo, hi;
    std::size_t terms = 0;
};

inline Zeta3Enclosure zeta3_enclosure(unsigned digits) {
    Rational eps(Integer(1), Integer(1));
    {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
        eps = Rational(Integer(1), p);
    }
    Rational s = 0, prev = 0;
    for (long k = 1;; ++k) {
        Rational term(Integer(5), Integer(2) * Integer(k) * Integer(k) * Integer(k) * binomial(2 * k, k));
        term.canonicalize();
        prev = s;
        s += (k % 2 ? term : -term);
        if (term < eps) {
            Zeta3Enclosure z;
            z.lo = std::min(s, prev);
            z.hi = std::max(s, prev);
            z.terms = static_cast<std::size_t>(k);
            return z;
        }
    }
}

/* Enclosure from the defining series: S_K <= zeta(3) <= S_K + 1/(2K^2). */
inline Zeta3Enclosure zeta3_defining_enclosure(long K) {
    Rational s = 0;
    for (long k = 1; k <= K; ++k) s += Rational(Integer(1), Integer(k) * Integer(k) * Integer(k));
    Zeta3Enclosure z;
    z.lo = s;
    z.hi = s + Rational(Integer(1), Integer(2) * Integer(K) * Integer(K));
    z.terms = static_cast<std::size_t>(K);
    return z;
}

// Decimal expansion, truncated toward zero, with the given number of fractional digits.
inline std::string decimal_string(const Rational& x, unsigned digits) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
    Rational y = x < 0 ? -x : x;
    Integer scaled = (y.get_num() * p) / y.get_den();
    std::string s = scaled.get_str();
    if (s.size() <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
    s.insert(s.size() - digits, ".");
    return (x < 0 ? "-" : "") + s;
}

// Scientific notation with sig significant digits, computed exactly.
inline std::string scientific_string(const Rational& x, unsigned sig = 6) {
    if (x == 0) return "0";
    Rational y = x < 0 ? -x : x;
    long e = 0;
    Rational ten(10);
    while (y >= ten) {
        y /= ten;
        ++e;
    }
    while (y < 1) {
        y *= ten;
        --e;
    }
    std::string m = decimal_string(y, sig - 1);
    return (x < 0 ? "-" : "") + m + "e" + (e >= 0 ? "+" : "-") + (std::abs(e) < 10 ? "0" : "") + std::to_string(std::abs(e));
}

struct Zeta3Row {
    std::size_t n;
    Rational error_upper;  // |zeta(3) - 6 b_n / a_n| <= error_upper
    Rational error_lower;
    double ratio = 0;      // a_{n+1} / a_n (0 for the last row)
};

struct Zeta3Report {
    Zeta3Enclosure zeta;
    std::vector<Zeta3Row> rows;
    double alpha = 17 + 12 * std::sqrt(2.0);  // greatest root of x^2 - 34x + 1
};

/* |zeta(3) - 6 b_n/a_n| for n = 1..N with a rigorous enclosure of zeta(3)
   to `digits` digits (default chosen so the n = N error is resolved). */
inline Zeta3Report zeta3_report(std::size_t N, unsigned digits = 0) {
    if (N < 2) throw std::invalid_argument("zeta3_report needs N >= 2");
    AperyData d = apery_sequences(N + 1);
    if (digits == 0) digits = std::max(30u, static_cast<unsigned>(3.1 * static_cast<double>(N)) + 20u);
    Zeta3Report rep;
    rep.zeta = zeta3_enclosure(digits);
    for (std::size_t n = 1; n <= N; ++n) {
        Zeta3Row row;
        row.n = n;
        Rational approx = Rational(6) * d.b[n] / Rational(d.a[n]);
        Rational e1 = rep.zeta.lo - approx, e2 = rep.zeta.hi - approx;
        if (e1 < 0) e1 = -e1;
        if (e2 < 0) e2 = -e2;
        row.error_upper = std::max(e1, e2);
        bool straddle = (rep.zeta.lo - approx) * (rep.zeta.hi - approx) <= 0;
        row.error_lower = straddle ? Rational(0) : std::min(e1, e2);
        row.ratio = Rational(d.a[n + 1], d.a[n]).get_d();
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace qsatake

#endif
