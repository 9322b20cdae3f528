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

#ifndef QSATAKE_ORE_HPP
#define QSATAKE_ORE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <cctype>
#include <vector>

#include "poly.hpp"

namespace qsatake {

/* Element sum_i t^i P_i(D) of Q[t]<D>, D t = t (D + 1), with every power of t
   kept on the left. */
class OreOperator {
   public:
    using Terms = std::map<unsigned, QPoly>;

    OreOperator() = default;
    explicit OreOperator(Terms terms) : terms_(std::move(terms)) { normalize_storage(); }

    static OreOperator from_D(const QPoly& p, unsigned t_power = 0) {
        Terms m;
        m[t_power] = p;
        return OreOperator(std::move(m));
    }
    static OreOperator one() { return from_D(QPoly::constant(Rational(1), "D")); }
    static OreOperator D() { return from_D(qpoly_var("D")); }
    static OreOperator t() { return from_D(QPoly::constant(Rational(1), "D"), 1); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    QPoly coeff(unsigned i) const {
        auto it = terms_.find(i);
        return it == terms_.end() ? QPoly("D") : it->second;
    }
    int t_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first); }
    int D_degree() const {
        int d = -1;
        for (const auto& [i, p] : terms_) d = std::max(d, p.degree());
        return d;
    }

    OreOperator& operator+=(const OreOperator& o) {
        for (const auto& [i, p] : o.terms_) terms_[i] += p;
        normalize_storage();
        return *this;
    }
    OreOperator& operator-=(const OreOperator& o) {
        for (const auto& [i, p] : o.terms_) terms_[i] -= p;
        normalize_storage();
        return *this;
    }
    friend OreOperator operator+(OreOperator a, const OreOperator& b) { return a += b; }
    friend OreOperator operator-(OreOperator a, const OreOperator& b) { return a -= b; }
    friend OreOperator operator*(const Rational& s, OreOperator a) {
        for (auto& [i, p] : a.terms_) p *= s;
        a.normalize_storage();
        return a;
    }

    // (t^i P(D)) (t^j Q(D)) = t^(i+j) P(D + j) Q(D).
    friend OreOperator operator*(const OreOperator& a, const OreOperator& b) {
        Terms m;
        for (const auto& [i, p] : a.terms_)
            for (const auto& [j, q] : b.terms_) m[i + j] += p.shift(Rational(j)) * q;
        return OreOperator(std::move(m));
    }

    friend bool operator==(const OreOperator& a, const OreOperator& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const OreOperator& a, const OreOperator& b) { return !(a == b); }

    /* Action on a truncated power series sum_n a_n t^n: t^i P(D) t^n = P(n) t^(n+i).
       Coefficients beyond the input length are not computed. */
    std::vector<Rational> apply(const std::vector<Rational>& series) const {
        std::vector<Rational> out(series.size(), Rational(0));
        for (const auto& [i, p] : terms_)
            for (std::size_t n = 0; n + i < series.size(); ++n)
                if (series[n] != 0) out[n + i] += p(Rational(static_cast<long>(n))) * series[n];
        return out;
    }

    std::string to_string() const;

   private:
    void normalize_storage() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second.is_zero()) {
                it = terms_.erase(it);
            } else {
                it->second.set_var("D");
                ++it;
            }
        }
    }

    Terms terms_;
};

inline OreOperator ore_multiply(const OreOperator& a, const OreOperator& b) { return a * b; }

/* Largest monic c(D) with L = c(D) L'. Since c(D) t^i = t^i c(D + i), c must
   divide P_i(D - i) for every i, and the maximal choice is their gcd. */
inline std::pair<QPoly, OreOperator> ore_left_strip(const OreOperator& L) {
    if (L.is_zero()) throw std::invalid_argument("left strip of zero operator");
    QPoly c("D");
    for (const auto& [i, p] : L.terms()) c = poly_gcd(c, p.shift(-Rational(static_cast<long>(i))));
    OreOperator::Terms rest;
    for (const auto& [i, p] : L.terms()) rest[i] = exact_div(p, c.shift(Rational(static_cast<long>(i))));
    c.set_var("D");
    return {c, OreOperator(std::move(rest))};
}

/* Scale by a rational so that all coefficients are coprime integers and the
   leading coefficient of P_0 (or of the lowest present t-power) is positive. */
inline OreOperator normalize_content(const OreOperator& L) {
    if (L.is_zero()) return L;
    Integer num = 0, den = 1;
    for (const auto& [i, p] : L.terms())
        for (const auto& a : p.coeffs()) {
            if (a == 0) continue;
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), a.get_num().get_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get_den().get_mpz_t());
        }
    Rational s(den, num);
    s.canonicalize();
    if (L.terms().begin()->second.lead() < 0) s = -s;
    return s * L;
}

namespace detail {

// Integer-coefficient linear factors a D + b (from rational roots) and a cofactor.
inline std::pair<std::vector<std::pair<QPoly, unsigned>>, QPoly> split_rational_roots(QPoly p) {
    std::vector<std::pair<QPoly, unsigned>> lin;
    if (p.degree() <= 0) return {lin, p};
    auto count_root = [&](const Rational& r) {
        unsigned m = 0;
        QPoly f({-r, Rational(1)}, "D");
        while (p.degree() >= 1) {
            auto [q, rem] = divmod(p, f);
            if (!rem.is_zero()) break;
            p = q;
            ++m;
        }
        return m;
    };
    // root 0 first
    {
        unsigned m = 0;
        while (p.degree() >= 1 && p.coeff(0) == 0) {
            p = exact_div(p, qpoly_var("D"));
            ++m;
        }
        if (m) lin.push_back({qpoly_var("D"), m});
    }
    // candidates p/q with p | a0, q | an on the primitive integer polynomial
    QPoly prim = primitive_part(p);
    if (prim.degree() >= 1) {
        Integer a0 = abs(prim.coeff(0).get_num()), an = abs(prim.lead().get_num());
        std::vector<Integer> dn, dd;
        auto divisors = [](Integer x, std::vector<Integer>& out) {
            for (Integer d = 1; d * d <= x; ++d)
                if (x % d == 0) {
                    out.push_back(d);
                    if (d * d != x) out.push_back(x / d);
                }
        };
        if (a0 < 1000000 && an < 1000000) {
            divisors(a0, dn);
            divisors(an, dd);
            std::vector<Rational> cands;
            for (const auto& u : dn)
                for (const auto& v : dd)
                    for (int sgn : {1, -1}) {
                        Rational r(sgn * u, v);
                        r.canonicalize();
                        cands.push_back(r);
                    }
            std::sort(cands.begin(), cands.end(), [](const Rational& x, const Rational& y) { return abs(x) < abs(y) || (abs(x) == abs(y) && x > y); });
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            for (const auto& r : cands) {
                unsigned m = count_root(r);
                if (m) lin.push_back({primitive_part(QPoly({-r, Rational(1)}, "D")), m});
            }
        }
    }
    return {lin, p};
}

inline std::string factor_string(const QPoly& original) {
    if (original.is_zero()) return "0";
    auto [lin, rest] = split_rational_roots(original);
    QPoly prod = QPoly::constant(Rational(1), "D");
    for (const auto& [f, m] : lin) prod *= f.pow(m);
    QPoly cof = exact_div(original, prod);  // constant * irreducible-over-Q part
    Rational unit = content(cof);
    if (cof.lead() < 0) unit = -unit;
    QPoly core = cof * (Rational(1) / unit);
    std::string out;
    bool unit_shown = false;
    if (unit != 1) {
        if (unit == -1)
            out += "-";
        else {
            out += unit.get_str();
            unit_shown = true;
        }
    }
    std::vector<std::string> parts;
    auto wrap = [](const QPoly& f) {
        std::string s = f.to_string("D");
        if (f.degree() == 1 && f.coeff(0) == 0 && f.coeff(1) == 1) return s;
        return "(" + s + ")";
    };
    for (const auto& [f, m] : lin) parts.push_back(wrap(f) + (m > 1 ? "^" + std::to_string(m) : ""));
    if (core.degree() >= 1) parts.push_back(wrap(core));
    if (parts.empty()) {
        if (!unit_shown) out += "1";
        return out;
    }
    if (unit_shown) out += "*";
    for (const auto& s : parts) out += s;
    return out;
}

}  // namespace detail

/* Factored human-readable form, e.g. "D^3 - t(2D + 1)(17D^2 + 17D + 5) + t^2(D + 1)^3".
   Multiplication is juxtaposition; "*" is never needed between factors. */
inline std::string OreOperator::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [i, p] : terms_) {
        std::string f = detail::factor_string(p);
        bool neg = !f.empty() && f[0] == '-';
        if (neg) f = f.substr(1);
        std::string tpart = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
        std::string body;
        auto star = f.find('*');
        if (tpart.empty())
            body = f;
        else if (f == "1")
            body = tpart;
        else if (star != std::string::npos && std::isdigit(static_cast<unsigned char>(f[0])))
            body = f.substr(0, star) + tpart + f.substr(star + 1);  // numeric unit goes before t
        else if (std::isdigit(static_cast<unsigned char>(f[0])))
            body = f + tpart;
        else
            body = tpart + f;
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    // strip "*" used inside polynomial bodies for readability
    std::string clean;
    for (char ch : out)
        if (ch != '*') clean += ch;
    return clean;
}

}  // namespace qsatake

#endif
