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

#ifndef QSATAKE_POLY_HPP
#define QSATAKE_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <type_traits>
#include <vector>

#include "rational.hpp"

namespace qsatake {

/* Dense univariate polynomial, lowest degree first. The variable name is a
   tag only: it is checked where mixing would be a logic error (gcd) and
   otherwise propagated from whichever operand carries one. */
template <class R>
class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    explicit UniPoly(const char* var) : var_(var) {}
    // Integer constant, untagged; makes generic T(0) / T(1) work for polynomial entries.
    explicit UniPoly(int c) {
        if (c != 0) c_.push_back(R(c));
    }
    UniPoly(std::vector<R> c, std::string var = "") : c_(std::move(c)), var_(std::move(var)) { trim(); }
    UniPoly(std::initializer_list<R> c, std::string var = "") : c_(c), var_(std::move(var)) { trim(); }

    static UniPoly constant(const R& a, std::string var = "") { return UniPoly(std::vector<R>{a}, std::move(var)); }
    static UniPoly monomial(const R& a, std::size_t k, std::string var = "") {
        std::vector<R> c(k + 1, R(0));
        c[k] = a;
        return UniPoly(std::move(c), std::move(var));
    }
    // The polynomial x + a.
    static UniPoly linear(const R& a, std::string var = "") { return UniPoly(std::vector<R>{a, R(1)}, std::move(var)); }

    const std::vector<R>& coeffs() const noexcept { return c_; }
    const std::string& var() const noexcept { return var_; }
    void set_var(std::string v) { var_ = std::move(v); }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R(0); }
    const R& lead() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_constant() const noexcept { return c_.size() <= 1; }

    template <class T>
    T eval(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if constexpr (std::is_constructible_v<T, const R&>)
                acc = acc * x + T(*it);
            else
                acc = acc * x + T(to_double(*it));
        }
        return acc;
    }
    R operator()(const R& x) const { return eval<R>(x); }

    UniPoly operator-() const {
        UniPoly r(*this);
        for (auto& a : r.c_) a = -a;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) {
        adopt(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        adopt(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator*=(const R& a) {
        for (auto& x : c_) x *= a;
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const R& s) { return a *= s; }
    friend UniPoly operator*(const R& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly r(a.var_.empty() ? b.var_ : a.var_);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly pow(unsigned k) const {
        UniPoly r = constant(R(1), var_), b = *this;
        while (k) {
            if (k & 1U) r *= b;
            k >>= 1U;
            if (k) b *= b;
        }
        return r;
    }

    // p(x + a), by Horner in the shifted variable.
    UniPoly shift(const R& a) const {
        UniPoly r(var_);
        UniPoly lin = linear(a, var_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(*it, var_);
        return r;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly(var_);
        std::vector<R> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * R(static_cast<long>(i));
        return UniPoly(std::move(d), var_);
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        UniPoly r(*this);
        R inv = R(1) / lead();
        for (auto& a : r.c_) a *= inv;
        return r;
    }

    std::string to_string(const std::string& var = "") const;

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void adopt(const UniPoly& o) {
        if (var_.empty()) var_ = o.var_;
    }

    std::vector<R> c_;
    std::string var_;
};

using QPoly = UniPoly<Rational>;

inline QPoly qpoly_var(const std::string& var) { return QPoly::monomial(Rational(1), 1, var); }

// Euclidean division over a field: a = quo*b + rem.
template <class R>
std::pair<UniPoly<R>, UniPoly<R>> divmod(const UniPoly<R>& a, const UniPoly<R>& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<R> rem = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {UniPoly<R>(a.var()), a};
    std::vector<R> quo(static_cast<std::size_t>(da - db + 1), R(0));
    R inv = R(1) / b.lead();
    for (int k = da - db; k >= 0; --k) {
        R f = rem[static_cast<std::size_t>(k + db)] * inv;
        quo[static_cast<std::size_t>(k)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UniPoly<R>(std::move(quo), a.var()), UniPoly<R>(std::move(rem), a.var())};
}

// Exact quotient; throws if b does not divide a.
template <class R>
UniPoly<R> exact_div(const UniPoly<R>& a, const UniPoly<R>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial division not exact");
    return q;
}

// Monic gcd. gcd(0, b) = monic(b), gcd(0, 0) = 0.
template <class R>
UniPoly<R> poly_gcd(const UniPoly<R>& a, const UniPoly<R>& b) {
    if (!a.var().empty() && !b.var().empty() && a.var() != b.var()) throw std::invalid_argument("gcd of polynomials in different variables");
    UniPoly<R> x = a, y = b;
    while (!y.is_zero()) {
        auto r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

template <class R>
UniPoly<R> poly_gcd(const std::vector<UniPoly<R>>& ps) {
    UniPoly<R> g;
    for (const auto& p : ps) {
        if (g.is_zero()) g.set_var(p.var());
        g = poly_gcd(g, p);
    }
    return g;
}

/* Integer content of a rational polynomial: the positive rational c with
   p / c primitive in Z[x]. */
inline Rational content(const QPoly& p) {
    if (p.is_zero()) return Rational(1);
    Integer num = 0, den = 1;
    for (const auto& a : p.coeffs()) {
        if (a == 0) continue;
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), a.get_num().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get_den().get_mpz_t());
    }
    Rational c(num, den);
    c.canonicalize();
    return c;
}

inline QPoly primitive_part(const QPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / content(p));
}

namespace detail {

inline std::string coeff_str(const Rational& a) { return a.get_str(); }
template <class R>
std::string coeff_str(const R& a) {
    std::ostringstream os;
    os << a;
    return os.str();
}

}  // namespace detail

template <class R>
std::string UniPoly<R>::to_string(const std::string& var) const {
    const std::string v = !var.empty() ? var : (var_.empty() ? std::string("x") : var_);
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const R& a = c_[static_cast<std::size_t>(k)];
        if (a == 0) continue;
        bool neg = a < 0;
        R mag = neg ? R(-a) : a;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool unit = (mag == 1);
        if (k == 0 || !unit) out += detail::coeff_str(mag);
        if (k >= 1) {
            if (!unit) out += "*";
            out += v;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace qsatake

#endif
