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

#ifndef QSATAKE_TYPE_A_HPP
#define QSATAKE_TYPE_A_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "partition.hpp"
#include "schubert.hpp"
#include "symfunc.hpp"

namespace qsatake {

// G(a, b): a-planes in C^(a+b); Schubert classes indexed by partitions in the a x b box.
struct GrassmannSpace {
    int a = 1, b = 1;
    GrassmannSpace() = default;
    GrassmannSpace(int a_, int b_) : a(a_), b(b_) {
        if (a < 1 || b < 1) throw std::invalid_argument("G(a,b) needs a, b >= 1");
    }
    int n() const noexcept { return a + b; }
    GrassmannSpace dual() const { return {b, a}; }
    std::vector<Partition> basis() const { return partitions_in_box(a, b); }
    // (-1)^(a-1): sign carried by q on the wrap-around of the cyclic shift.
    long wrap_sign() const noexcept { return (a % 2 == 1) ? 1 : -1; }
    friend bool operator==(const GrassmannSpace& x, const GrassmannSpace& y) { return x.a == y.a && x.b == y.b; }
};

struct SchubertVectorA {
    GrassmannSpace space;
    PartitionVector v;
    friend bool operator==(const SchubertVectorA& x, const SchubertVectorA& y) { return x.space == y.space && x.v == y.v; }
};
using WedgeVector = SchubertVectorA;

inline void check_in_box(const Partition& lam, const GrassmannSpace& sp) {
    if (!is_partition(lam) || !in_box(lam, sp.a, sp.b)) throw std::invalid_argument("partition " + to_string(lam) + " not in the " + std::to_string(sp.a) + "x" + std::to_string(sp.b) + " box");
}

inline PartitionVector transpose_labels(const PartitionVector& v) {
    PartitionVector r;
    for (const auto& [l, c] : v.coeffs()) r.add(conjugate(l), c);
    return r;
}

namespace detail {

// h_r * sigma_lambda for 0 <= r <= b: horizontal strips in the box, plus q-terms.
inline PartitionVector pieri_h(int r, const Partition& lam, const GrassmannSpace& sp) {
    const int a = sp.a, b = sp.b, n = sp.n();
    PartitionVector out;
    // classical: mu_1 <= b, lam_i <= mu_i <= lam_{i-1}
    Partition mu(static_cast<std::size_t>(a), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == a) {
            if (left == 0) {
                Partition m;
                for (int x : mu)
                    if (x > 0) m.push_back(x);
                out.add(m, q_monomial(1, 0));
            }
            return;
        }
        int lo = part(lam, i), hi = (i == 0) ? b : part(lam, i - 1);
        for (int v = lo; v <= hi && v - lo <= left; ++v) {
            mu[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - (v - lo));
        }
    };
    rec(0, r);
    // quantum: lambda with a rows; lam_i - 1 >= nu_i >= lam_{i+1} - 1
    const int target = partition_size(lam) + r - n;
    if (length(lam) == a && target >= 0) {
        Partition nu(static_cast<std::size_t>(a), 0);
        std::function<void(int, int)> qrec = [&](int i, int left) {
            if (i == a) {
                if (left == 0) {
                    Partition m;
                    for (int x : nu)
                        if (x > 0) m.push_back(x);
                    out.add(m, q_monomial(1, 1));
                }
                return;
            }
            int hi = part(lam, i) - 1, lo = std::max(0, part(lam, i + 1) - 1);
            for (int v = lo; v <= hi && v <= left; ++v) {
                nu[static_cast<std::size_t>(i)] = v;
                qrec(i + 1, left - v);
            }
        };
        qrec(0, target);
    }
    return out;
}

}  // namespace detail

/* Quantum Pieri: h_r * sigma_lambda (r <= b) or e_r * sigma_lambda (r <= a).
   The e-rule is the h-rule on the transposed Grassmannian G(b, a). */
inline SchubertVectorA quantum_pieri(char kind, int r, const Partition& lam, const GrassmannSpace& sp) {
    check_in_box(lam, sp);
    if (r < 0) throw std::invalid_argument("Pieri index must be non-negative");
    if (kind == 'h') {
        if (r > sp.b) throw std::invalid_argument("h_r Pieri needs r <= b");
        return {sp, detail::pieri_h(r, lam, sp)};
    }
    if (kind == 'e') {
        if (r > sp.a) throw std::invalid_argument("e_r Pieri needs r <= a");
        return {sp, transpose_labels(detail::pieri_h(r, conjugate(lam), sp.dual()))};
    }
    throw std::invalid_argument(std::string("unknown Pieri kind: ") + kind);
}

namespace detail {

inline PartitionVector apply_pieri(char kind, int r, const PartitionVector& v, const GrassmannSpace& sp) {
    PartitionVector out;
    for (const auto& [l, c] : v.coeffs()) out += c * quantum_pieri(kind, r, l, sp).v;
    return out;
}

// h_k * v for any k >= 0; for k > b uses h_k = sum_{i=1}^{a} (-1)^{i-1} e_i h_{k-i}.
inline PartitionVector apply_h(int k, const PartitionVector& v, const GrassmannSpace& sp) {
    if (k <= sp.b) return apply_pieri('h', k, v, sp);
    PartitionVector out;
    for (int i = 1; i <= std::min(k, sp.a); ++i) {
        PartitionVector t = apply_pieri('e', i, apply_h(k - i, v, sp), sp);
        if (i % 2 == 1)
            out += t;
        else
            out -= t;
    }
    return out;
}

}  // namespace detail

// Sch^q(f) * sigma_lambda, through the h-monomial expansion of f.
inline SchubertVectorA q_multiply_symfunc(const SymFunc& f, const Partition& lam, const GrassmannSpace& sp) {
    check_in_box(lam, sp);
    SymFunc fh = f.to_h();
    PartitionVector out;
    const auto start = PartitionVector::basis(lam);
    for (const auto& [mono, c] : fh.terms()) {
        PartitionVector cur = start;
        for (int k : mono) cur = detail::apply_h(k, cur, sp);
        out += c * cur;
    }
    return {sp, out};
}

/* p_l * sigma_lambda = sum (-1)^{ht(mu/lambda)} sigma_mu
                        + (-1)^{a-1} q sum (-1)^{ht(lambda/nu)} sigma_nu,
   over rims of size l added inside the box and rims of size n - l removed. */
inline SchubertVectorA power_sum_rim_product(int l, const Partition& lam, const GrassmannSpace& sp) {
    check_in_box(lam, sp);
    const int n = sp.n();
    if (l < 1 || l > n - 1) throw std::invalid_argument("rim rule needs 1 <= l <= n-1");
    PartitionVector out;
    for (const auto& r : add_border_rims(lam, l, std::make_pair(sp.a, sp.b))) out.add(r.shape, q_monomial(r.height % 2 ? -1 : 1, 0));
    for (const auto& r : remove_border_rims(lam, n - l)) {
        long s = sp.wrap_sign() * (r.height % 2 ? -1 : 1);
        out.add(r.shape, q_monomial(s, 1));
    }
    return {sp, out};
}

namespace detail {

inline std::vector<int> wedge_slots(const Partition& lam, int a) {
    std::vector<int> s(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) s[static_cast<std::size_t>(i)] = part(lam, i) + a - i;
    return s;
}

// Decreasing distinct slot list -> partition.
inline Partition slots_to_partition(const std::vector<int>& s) {
    const int a = static_cast<int>(s.size());
    Partition p;
    for (int i = 0; i < a; ++i) {
        int v = s[static_cast<std::size_t>(i)] - (a - i);
        if (v > 0) p.push_back(v);
    }
    return p;
}

}  // namespace detail

/* Derivation action on wedge^a C^n of the l-th power of the raising shift
   e_k -> e_{k+1}, e_n -> (-1)^{a-1} q e_1. With quantum = false the wrap term
   is dropped (the classical nilpotent x). */
inline WedgeVector wedge_power_action(int l, const WedgeVector& v, bool quantum = true) {
    const GrassmannSpace& sp = v.space;
    const int a = sp.a, n = sp.n();
    PartitionVector out;
    for (const auto& [lam, c] : v.v.coeffs()) {
        auto slots = detail::wedge_slots(lam, a);
        for (int i = 0; i < a; ++i) {
            int k = slots[static_cast<std::size_t>(i)];
            int target = k + l;
            unsigned wraps = 0;
            while (target > n) {
                target -= n;
                ++wraps;
            }
            if (wraps > 0 && !quantum) continue;
            bool clash = false;
            for (int j = 0; j < a; ++j)
                if (j != i && slots[static_cast<std::size_t>(j)] == target) clash = true;
            if (clash) continue;
            auto ns = slots;
            ns[static_cast<std::size_t>(i)] = target;
            // sort decreasing, tracking the permutation sign
            int sign = 1;
            for (std::size_t x = 0; x < ns.size(); ++x)
                for (std::size_t y = x + 1; y < ns.size(); ++y)
                    if (ns[x] < ns[y]) sign = -sign;
            std::sort(ns.rbegin(), ns.rend());
            long w = 1;
            for (unsigned t = 0; t < wraps; ++t) w *= sp.wrap_sign();
            out.add(detail::slots_to_partition(ns), c * q_monomial(sign * w, wraps));
        }
    }
    return {sp, out};
}

inline WedgeVector wedge_xq_power(int l, const WedgeVector& v) { return wedge_power_action(l, v, true); }

/* Classical product sigma_lambda . sigma_mu from the wedge action alone:
   sigma_lambda = sum_rho z_rho^{-1} chi^lambda_rho p_rho, and p_rho acts as the
   composite of the derivation actions of x^{rho_1}, x^{rho_2}, ... */
inline SchubertVectorA lr_by_composed_actions(const Partition& lam, const Partition& mu, const GrassmannSpace& sp) {
    check_in_box(lam, sp);
    check_in_box(mu, sp);
    const int d = partition_size(lam);
    PartitionVector out;
    if (d == 0) {
        out.add(mu, q_monomial(1, 0));
        return {sp, out};
    }
    for (const auto& rho : partitions_of(d)) {
        long long chi = mn_character(lam, rho);
        if (chi == 0) continue;
        WedgeVector cur{sp, PartitionVector::basis(mu)};
        for (int k : rho) cur = wedge_power_action(k, cur, false);
        Rational coef(static_cast<long>(chi), static_cast<long>(z_factor(rho)));
        coef.canonicalize();
        out += coef * cur.v;
    }
    return {sp, out};
}

/* Basis change check: e_lambda = sum_zeta s_lambda(zeta) f_zeta, where zeta runs over
   a-subsets of the n-th roots of (-1)^{a-1} q, f_zeta = prod_{i<j}(zeta_i - zeta_j)
   f_{zeta_1} ^ ... ^ f_{zeta_a}, and f_z = (1/n) sum_k z^{-(k-1)} e_k is the
   z-eigenvector of the raising shift. Returns the max coordinate residual. */
inline double satake_basis_change_check(const GrassmannSpace& sp, Complex q_value) {
    if (std::abs(q_value) == 0.0) throw std::invalid_argument("q must be nonzero");
    const int a = sp.a, n = sp.n();
    const Complex c = q_value * static_cast<double>(sp.wrap_sign());
    std::vector<Complex> roots;
    const double pi = std::acos(-1.0);
    const Complex r0 = std::pow(c, 1.0 / n);
    for (int k = 0; k < n; ++k) roots.push_back(r0 * std::polar(1.0, 2 * pi * k / n));
    // coordinates in the basis of increasing a-subsets of {0..n-1}
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int start) {
        if (static_cast<int>(cur.size()) == a) {
            subsets.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            gen(i + 1);
            cur.pop_back();
        }
    };
    gen(0);
    auto wedge = [&](const std::vector<CVector>& vs) {
        CMatrix m(a, n);
        for (int i = 0; i < a; ++i) m.row(i) = vs[static_cast<std::size_t>(i)].transpose();
        std::vector<Complex> coords;
        for (const auto& s : subsets) {
            CMatrix sub(a, a);
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < a; ++j) sub(i, j) = m(i, s[static_cast<std::size_t>(j)]);
            coords.push_back(a == 0 ? Complex(1) : sub.determinant());
        }
        return coords;
    };
    auto f_single = [&](Complex z) {
        CVector f(n);
        for (int k = 1; k <= n; ++k) f(k - 1) = std::pow(z, -(k - 1)) / static_cast<double>(n);
        return f;
    };
    // all unordered a-tuples of roots
    std::vector<std::vector<Complex>> tuples;
    std::vector<int> idx;
    std::function<void(int)> pick = [&](int start) {
        if (static_cast<int>(idx.size()) == a) {
            std::vector<Complex> t;
            for (int i : idx) t.push_back(roots[static_cast<std::size_t>(i)]);
            tuples.push_back(t);
            return;
        }
        for (int i = start; i < n; ++i) {
            idx.push_back(i);
            pick(i + 1);
            idx.pop_back();
        }
    };
    pick(0);
    std::vector<std::vector<Complex>> fz;
    for (const auto& t : tuples) {
        std::vector<CVector> vs;
        for (auto z : t) vs.push_back(f_single(z));
        auto w = wedge(vs);
        Complex vdm = 1;
        for (int i = 0; i < a; ++i)
            for (int j = i + 1; j < a; ++j) vdm *= t[static_cast<std::size_t>(i)] - t[static_cast<std::size_t>(j)];
        for (auto& x : w) x *= vdm;
        fz.push_back(w);
    }
    double worst = 0;
    for (const auto& lam : sp.basis()) {
        std::vector<CVector> es;
        for (int s : detail::wedge_slots(lam, a)) {
            CVector e = CVector::Zero(n);
            e(s - 1) = 1;
            es.push_back(e);
        }
        auto lhs = wedge(es);
        std::vector<Complex> rhs(subsets.size(), Complex(0));
        for (std::size_t t = 0; t < tuples.size(); ++t) {
            Complex s = schur_eval(lam, tuples[t]);
            for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += s * fz[t][k];
        }
        for (std::size_t k = 0; k < rhs.size(); ++k) worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
    }
    return worst;
}

/* Matrix of * sigma_(1) in the Schubert basis (columns = input class), q as a
   polynomial. */
inline Matrix<QPoly> hyperplane_matrix_a(const GrassmannSpace& sp, const std::vector<Partition>& order) {
    Matrix<QPoly> m(order.size(), order.size(), QPoly("q"));
    std::map<Partition, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (std::size_t j = 0; j < order.size(); ++j) {
        auto prod = quantum_pieri('h', 1, order[j], sp);
        for (const auto& [l, c] : prod.v.coeffs()) m(pos.at(l), j) = c;
    }
    return m;
}

}  // namespace qsatake

#endif
