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

#ifndef QSATAKE_LINDEP_HPP
#define QSATAKE_LINDEP_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poly.hpp"

namespace qsatake {

// Element of Q(t), kept reduced with a monic denominator.
class RatFunc {
   public:
    RatFunc() : num_("t"), den_(QPoly::constant(Rational(1), "t")) {}
    RatFunc(const QPoly& n) : num_(n), den_(QPoly::constant(Rational(1), "t")) { num_.set_var("t"); }
    RatFunc(const QPoly& n, const QPoly& d) : num_(n), den_(d) { reduce(); }

    const QPoly& num() const noexcept { return num_; }
    const QPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

   private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        num_.set_var("t");
        den_.set_var("t");
        if (num_.is_zero()) {
            den_ = QPoly::constant(Rational(1), "t");
            return;
        }
        QPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        Rational l = den_.lead();
        if (l != 1) {
            num_ *= Rational(1) / l;
            den_ *= Rational(1) / l;
        }
    }

    QPoly num_, den_;
};

/* First linear dependence among v_0, v_1, ... over Q(t), with the index k
   minimal. The returned coefficients c_0..c_k are coprime polynomials with
   integer coefficients and sum_i c_i v_i = 0; c_k is never zero.
   nullopt means the whole list is independent. */
inline std::optional<std::vector<QPoly>> minimal_dependence(const std::vector<std::vector<QPoly>>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("minimal_dependence of empty list");
    const std::size_t dim = vectors[0].size();
    for (const auto& v : vectors)
        if (v.size() != dim) throw std::invalid_argument("vectors of different dimensions");

    struct Row {
        std::vector<RatFunc> v;     // reduced vector
        std::vector<RatFunc> comb;  // as combination of the inputs
        std::size_t pivot;
    };
    std::vector<Row> basis;
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        Row cur;
        cur.v.reserve(dim);
        for (const auto& e : vectors[k]) cur.v.emplace_back(e);
        cur.comb.assign(k + 1, RatFunc());
        cur.comb[k] = RatFunc(QPoly::constant(Rational(1), "t"));
        for (const auto& b : basis) {
            if (cur.v[b.pivot].is_zero()) continue;
            RatFunc f = cur.v[b.pivot] / b.v[b.pivot];
            for (std::size_t j = 0; j < dim; ++j)
                if (!b.v[j].is_zero()) cur.v[j] = cur.v[j] - f * b.v[j];
            for (std::size_t j = 0; j < b.comb.size(); ++j)
                if (!b.comb[j].is_zero()) cur.comb[j] = cur.comb[j] - f * b.comb[j];
        }
        std::size_t p = 0;
        while (p < dim && cur.v[p].is_zero()) ++p;
        if (p < dim) {
            cur.pivot = p;
            basis.push_back(std::move(cur));
            continue;
        }
        // dependence: clear denominators, then remove the common polynomial factor
        QPoly l = QPoly::constant(Rational(1), "t");
        for (const auto& c : cur.comb) l = exact_div(l * c.den(), poly_gcd(l, c.den()));
        std::vector<QPoly> out;
        for (const auto& c : cur.comb) out.push_back(exact_div(l * c.num(), c.den()));
        QPoly g("t");
        for (const auto& c : out) g = poly_gcd(g, c);
        if (g.degree() > 0)
            for (auto& c : out) c = exact_div(c, g);
        Integer num = 0, den = 1;
        for (const auto& c : out)
            for (const auto& a : c.coeffs()) {
                if (a == 0) continue;
                mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), a.get_num().get_mpz_t());
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get_den().get_mpz_t());
            }
        Rational s(den, num);
        s.canonicalize();
        if (out.back().lead() < 0) s = -s;
        for (auto& c : out) {
            c *= s;
            c.set_var("t");
        }
        return out;
    }
    return std::nullopt;
}

}  // namespace qsatake

#endif
