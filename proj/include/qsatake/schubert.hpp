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

#ifndef QSATAKE_SCHUBERT_HPP
#define QSATAKE_SCHUBERT_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"
#include "poly.hpp"

namespace qsatake {

/* Finite map label -> polynomial in q. Zero coefficients are never stored,
   so == is structural equality. */
template <class Label>
class LabeledVector {
   public:
    using Map = std::map<Label, QPoly>;

    LabeledVector() = default;
    static LabeledVector basis(const Label& l, QPoly c = QPoly::constant(Rational(1), "q")) {
        LabeledVector v;
        v.add(l, c);
        return v;
    }

    const Map& coeffs() const noexcept { return m_; }
    bool is_zero() const noexcept { return m_.empty(); }
    QPoly coeff(const Label& l) const {
        auto it = m_.find(l);
        return it == m_.end() ? QPoly("q") : it->second;
    }

    void add(const Label& l, const QPoly& c) {
        if (c.is_zero()) return;
        auto it = m_.find(l);
        if (it == m_.end()) {
            QPoly cc = c;
            cc.set_var("q");
            m_.emplace(l, std::move(cc));
            return;
        }
        it->second += c;
        if (it->second.is_zero()) m_.erase(it);
    }
    LabeledVector& operator+=(const LabeledVector& o) {
        for (const auto& [l, c] : o.m_) add(l, c);
        return *this;
    }
    LabeledVector& operator-=(const LabeledVector& o) {
        for (const auto& [l, c] : o.m_) add(l, -c);
        return *this;
    }
    friend LabeledVector operator+(LabeledVector a, const LabeledVector& b) { return a += b; }
    friend LabeledVector operator-(LabeledVector a, const LabeledVector& b) { return a -= b; }
    friend LabeledVector operator*(const QPoly& s, const LabeledVector& v) {
        LabeledVector r;
        for (const auto& [l, c] : v.m_) r.add(l, s * c);
        return r;
    }
    friend LabeledVector operator*(const Rational& s, const LabeledVector& v) { return QPoly::constant(s, "q") * v; }
    friend bool operator==(const LabeledVector& a, const LabeledVector& b) { return a.m_ == b.m_; }
    friend bool operator!=(const LabeledVector& a, const LabeledVector& b) { return !(a == b); }

   private:
    Map m_;
};

using PartitionVector = LabeledVector<Partition>;

inline QPoly q_monomial(long c, unsigned k) { return QPoly::monomial(Rational(c), k, "q"); }

/* "(2,2) + q·()" style: larger classes first, coefficient 1 omitted,
   composite coefficients parenthesized. */
inline std::string pretty(const PartitionVector& v) {
    if (v.is_zero()) return "0";
    std::vector<std::pair<Partition, QPoly>> items(v.coeffs().begin(), v.coeffs().end());
    std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
        int sx = partition_size(x.first), sy = partition_size(y.first);
        if (sx != sy) return sx > sy;
        return x.first > y.first;
    });
    std::string out;
    for (const auto& [l, c] : items) {
        std::string cs = c.to_string("q");
        bool neg = false;
        std::size_t nterms = 0;
        for (const auto& a : c.coeffs())
            if (a != 0) ++nterms;
        if (nterms == 1 && cs[0] == '-') {
            neg = true;
            cs = cs.substr(1);
        }
        std::string body;
        if (cs == "1")
            body = to_string(l);
        else if (nterms > 1)
            body = "(" + cs + ")·" + to_string(l);
        else {
            cs.erase(std::remove(cs.begin(), cs.end(), '*'), cs.end());  // "2*q" -> "2q"
            body = cs + "·" + to_string(l);
        }
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

}  // namespace qsatake

#endif
