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

#ifndef QSATAKE_LIE_HPP
#define QSATAKE_LIE_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace qsatake {

// Simple-root coordinates n_i(beta), 0-based storage of alpha_1..alpha_r.
using Root = std::vector<int>;
// Dynkin labels <nu, alpha_i^vee>.
using Weight = std::vector<int>;

inline int height(const Root& b) { return std::accumulate(b.begin(), b.end(), 0); }

/* Simply-laced root system with a chosen numbering of the simple roots.
   E6: 1-3-4-5-6 with 2 on 4. E7: 7-6-4-3-2-1 with 5 on 4. */
struct RootSystem {
    std::string label;
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<Root> positive;  // by height, then lexicographic
    std::map<Root, std::size_t> index;
    Root highest;

    int coxeter_number() const { return height(highest) + 1; }
    Root theta() const { return Root(static_cast<std::size_t>(rank), 1); }
    Root simple(int i) const {
        Root r(static_cast<std::size_t>(rank), 0);
        r.at(static_cast<std::size_t>(i - 1)) = 1;
        return r;
    }
    bool is_root(const Root& b) const { return index.count(b) > 0; }
    // (beta, alpha_i) for the symmetric form.
    int pair_simple(const Root& b, int i) const {
        int s = 0;
        for (int j = 0; j < rank; ++j) s += b[static_cast<std::size_t>(j)] * cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)];
        return s;
    }
    std::vector<Root> roots_of_height(int d) const {
        std::vector<Root> out;
        for (const auto& b : positive)
            if (height(b) == d) out.push_back(b);
        return out;
    }
    // Multiplicity of d as an exponent: #roots of height d minus #roots of height d+1.
    int exponent_multiplicity(int d) const {
        return static_cast<int>(roots_of_height(d).size()) - static_cast<int>(roots_of_height(d + 1).size());
    }
    std::vector<int> exponents() const {
        std::vector<int> e;
        for (int d = 1; d < coxeter_number(); ++d)
            for (int k = 0; k < exponent_multiplicity(d); ++k) e.push_back(d);
        return e;
    }
};

/* label: "E6", "E7", "A<r>", "D<r>". */
inline RootSystem build_root_system(const std::string& label) {
    RootSystem rs;
    rs.label = label;
    std::vector<std::pair<int, int>> edges;
    if (label == "E6") {
        rs.rank = 6;
        edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
    } else if (label == "E7") {
        rs.rank = 7;
        edges = {{7, 6}, {6, 4}, {4, 3}, {3, 2}, {2, 1}, {5, 4}};
    } else if (label.size() >= 2 && (label[0] == 'A' || label[0] == 'D') &&
               std::all_of(label.begin() + 1, label.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        rs.rank = std::stoi(label.substr(1));
        if (label[0] == 'A') {
            if (rs.rank < 1) throw std::invalid_argument("A_r needs r >= 1");
            for (int i = 1; i < rs.rank; ++i) edges.push_back({i, i + 1});
        } else {
            if (rs.rank < 4) throw std::invalid_argument("D_r needs r >= 4");
            for (int i = 1; i < rs.rank - 1; ++i) edges.push_back({i, i + 1});
            edges.push_back({rs.rank - 2, rs.rank});
        }
    } else {
        throw std::invalid_argument("unsupported root system: " + label);
    }
    const std::size_t r = static_cast<std::size_t>(rs.rank);
    rs.cartan.assign(r, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < r; ++i) rs.cartan[i][i] = 2;
    for (auto [a, b] : edges) {
        rs.cartan[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = -1;
        rs.cartan[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = -1;
    }
    // closure: beta + alpha_i is a root iff (beta, alpha_i) = -1 (simply laced)
    std::vector<Root> found;
    std::map<Root, bool> seen;
    std::deque<Root> todo;
    for (int i = 1; i <= rs.rank; ++i) {
        todo.push_back(rs.simple(i));
        seen[rs.simple(i)] = true;
    }
    while (!todo.empty()) {
        Root b = todo.front();
        todo.pop_front();
        found.push_back(b);
        for (int i = 1; i <= rs.rank; ++i) {
            if (rs.pair_simple(b, i) != -1) continue;
            Root c = b;
            c[static_cast<std::size_t>(i - 1)] += 1;
            if (!seen[c]) {
                seen[c] = true;
                todo.push_back(c);
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const Root& x, const Root& y) {
        if (height(x) != height(y)) return height(x) < height(y);
        return x < y;
    });
    rs.positive = found;
    for (std::size_t k = 0; k < found.size(); ++k) rs.index[found[k]] = k;
    rs.highest = found.back();
    return rs;
}

/* Integer matrices on a module; Lie algebra elements are stored through
   their action on a faithful minuscule module. */
using ModMat = Matrix<long>;

inline ModMat bracket(const ModMat& a, const ModMat& b) { return a * b - b * a; }

/* Weight basis of the minuscule module with highest weight omega_k:
   e_nu = X_{-alpha_i} e_{nu + alpha_i}, so every X_{-alpha_i} has entries 0/1
   and X_{alpha_i} is its transpose. */
struct MinusculeModule {
    const RootSystem* rs = nullptr;
    int fundamental = 1;
    std::vector<Weight> weights;  // weights[0] = omega
    std::vector<int> depth;       // height of omega - nu
    std::map<Weight, std::size_t> index;
    std::vector<ModMat> lower, raise, cartan;  // per simple root, 0-based

    std::size_t dim() const { return weights.size(); }
};

inline MinusculeModule minuscule_module(const RootSystem& rs, int k) {
    if (k < 1 || k > rs.rank) throw std::invalid_argument("fundamental weight index out of range");
    MinusculeModule m;
    m.rs = &rs;
    m.fundamental = k;
    Weight w(static_cast<std::size_t>(rs.rank), 0);
    w[static_cast<std::size_t>(k - 1)] = 1;
    m.weights.push_back(w);
    m.depth.push_back(0);
    m.index[w] = 0;
    for (std::size_t p = 0; p < m.weights.size(); ++p) {
        const Weight nu = m.weights[p];
        for (int i = 0; i < rs.rank; ++i) {
            int v = nu[static_cast<std::size_t>(i)];
            if (v < -1 || v > 1) throw std::invalid_argument("weight omega_" + std::to_string(k) + " of " + rs.label + " is not minuscule");
            if (v != 1) continue;
            Weight mu = nu;
            for (int j = 0; j < rs.rank; ++j) mu[static_cast<std::size_t>(j)] -= rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!m.index.count(mu)) {
                m.index[mu] = m.weights.size();
                m.weights.push_back(mu);
                m.depth.push_back(m.depth[p] + 1);
            }
        }
    }
    const std::size_t N = m.dim();
    for (int i = 0; i < rs.rank; ++i) {
        ModMat lo(N, N, 0);
        ModMat h(N, N, 0);
        for (std::size_t p = 0; p < N; ++p) {
            const Weight& nu = m.weights[p];
            h(p, p) = nu[static_cast<std::size_t>(i)];
            if (nu[static_cast<std::size_t>(i)] != 1) continue;
            Weight mu = nu;
            for (int j = 0; j < rs.rank; ++j) mu[static_cast<std::size_t>(j)] -= rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            lo(m.index.at(mu), p) = 1;
        }
        m.lower.push_back(lo);
        m.raise.push_back(lo.transpose());
        m.cartan.push_back(h);
    }
    return m;
}

/* Chevalley-Serre relations on the module: [X_i, X_{-j}] = delta_ij H_i,
   [H_i, X_{+-j}] = +-a_ij X_{+-j}, (ad X_{+-i})^{1-a_ij} X_{+-j} = 0. */
inline bool check_serre_relations(const MinusculeModule& m) {
    const RootSystem& rs = *m.rs;
    const std::size_t N = m.dim();
    const ModMat zero(N, N, 0);
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) {
            const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
            const long a = rs.cartan[ui][uj];
            if (bracket(m.raise[ui], m.lower[uj]) != (i == j ? m.cartan[ui] : zero)) return false;
            if (bracket(m.cartan[ui], m.raise[uj]) != a * m.raise[uj]) return false;
            if (bracket(m.cartan[ui], m.lower[uj]) != (-a) * m.lower[uj]) return false;
            if (i == j) continue;
            for (int sgn = 0; sgn < 2; ++sgn) {
                const auto& gens = sgn ? m.lower : m.raise;
                ModMat t = gens[uj];
                for (long k = 0; k < 1 - a; ++k) t = bracket(gens[ui], t);
                if (t != zero) return false;
            }
        }
    return true;
}

/* Root vectors by the inductive rule: for ht(beta) >= 2 take i maximal with
   beta - alpha_i a root and set X_beta = [X_{alpha_i}, X_{beta - alpha_i}];
   likewise X_{-beta} = [X_{-alpha_i}, X_{-(beta - alpha_i)}]. */
struct ChevalleyBasis {
    const RootSystem* rs = nullptr;
    const MinusculeModule* mod = nullptr;
    std::vector<ModMat> pos, neg;  // indexed like rs->positive
    std::vector<ModMat> h;         // H_i
    // a nonzero entry (row, col) of each X_beta / X_{-beta}, for decomposition
    std::vector<std::pair<std::size_t, std::size_t>> pos_probe, neg_probe;

    const ModMat& X(const Root& b, bool negative) const {
        auto k = rs->index.at(b);
        return negative ? neg[k] : pos[k];
    }
};

namespace detail {

inline std::pair<std::size_t, std::size_t> first_nonzero(const ModMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) return {i, j};
    throw std::logic_error("zero root vector");
}

}  // namespace detail

/* priority lists simple-root indices from "maximal" down; empty means
   r, r-1, ..., 1. */
inline ChevalleyBasis chevalley_basis(const MinusculeModule& m, std::vector<int> priority = {}) {
    const RootSystem& rs = *m.rs;
    if (priority.empty())
        for (int i = rs.rank; i >= 1; --i) priority.push_back(i);
    if (static_cast<int>(priority.size()) != rs.rank) throw std::invalid_argument("priority must list every simple root");
    ChevalleyBasis cb;
    cb.rs = &rs;
    cb.mod = &m;
    cb.h = m.cartan;
    cb.pos.resize(rs.positive.size());
    cb.neg.resize(rs.positive.size());
    for (std::size_t k = 0; k < rs.positive.size(); ++k) {
        const Root& b = rs.positive[k];
        if (height(b) == 1) {
            int i = static_cast<int>(std::find(b.begin(), b.end(), 1) - b.begin());
            cb.pos[k] = m.raise[static_cast<std::size_t>(i)];
            cb.neg[k] = m.lower[static_cast<std::size_t>(i)];
            continue;
        }
        int pick = -1;
        for (int i : priority) {
            Root c = b;
            c[static_cast<std::size_t>(i - 1)] -= 1;
            if (rs.is_root(c)) {
                pick = i;
                break;
            }
        }
        if (pick < 0) throw std::logic_error("root with no root below it");
        Root c = b;
        c[static_cast<std::size_t>(pick - 1)] -= 1;
        const auto kc = rs.index.at(c);
        const auto ui = static_cast<std::size_t>(pick - 1);
        cb.pos[k] = bracket(m.raise[ui], cb.pos[kc]);
        cb.neg[k] = bracket(m.lower[ui], cb.neg[kc]);
    }
    for (std::size_t k = 0; k < rs.positive.size(); ++k) {
        cb.pos_probe.push_back(detail::first_nonzero(cb.pos[k]));
        cb.neg_probe.push_back(detail::first_nonzero(cb.neg[k]));
    }
    return cb;
}

/* Coordinates of a Lie algebra element: positive roots, negative roots,
   then H_1..H_r. */
struct LieElement {
    std::map<Root, Rational> pos, neg;
    std::vector<Rational> h;

    bool is_zero() const {
        for (const auto& [b, c] : pos)
            if (c != 0) return false;
        for (const auto& [b, c] : neg)
            if (c != 0) return false;
        for (const auto& c : h)
            if (c != 0) return false;
        return true;
    }
};

// Rational module matrix of an element.
inline QMatrix to_module(const ChevalleyBasis& cb, const LieElement& e) {
    const std::size_t N = cb.mod->dim();
    QMatrix m(N, N, Rational(0));
    auto acc = [&](const ModMat& x, const Rational& c) {
        if (c == 0) return;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                if (x(i, j) != 0) m(i, j) += c * Rational(x(i, j));
    };
    for (const auto& [b, c] : e.pos) acc(cb.X(b, false), c);
    for (const auto& [b, c] : e.neg) acc(cb.X(b, true), c);
    for (std::size_t i = 0; i < e.h.size(); ++i) acc(cb.h[i], e.h[i]);
    return m;
}

/* Decompose a module matrix into the basis. Root parts are read at the probe
   entries; the Cartan part is solved from the diagonal. Throws if the matrix
   is not in the image (reconstruction mismatch). */
inline LieElement decompose(const ChevalleyBasis& cb, const QMatrix& m) {
    const RootSystem& rs = *cb.rs;
    LieElement e;
    for (std::size_t k = 0; k < rs.positive.size(); ++k) {
        auto [i, j] = cb.pos_probe[k];
        if (m(i, j) != 0) e.pos[rs.positive[k]] = m(i, j) / Rational(cb.pos[k](i, j));
        auto [a, b] = cb.neg_probe[k];
        if (m(a, b) != 0) e.neg[rs.positive[k]] = m(a, b) / Rational(cb.neg[k](a, b));
    }
    const std::size_t N = cb.mod->dim();
    QMatrix sys(N, static_cast<std::size_t>(rs.rank), Rational(0));
    std::vector<Rational> rhs(N);
    for (std::size_t p = 0; p < N; ++p) {
        rhs[p] = m(p, p);
        for (std::size_t i = 0; i < static_cast<std::size_t>(rs.rank); ++i) sys(p, i) = Rational(cb.h[i](p, p));
    }
    auto sol = solve(sys, rhs);
    if (!sol) throw std::invalid_argument("decompose: diagonal not in the Cartan span");
    e.h = *sol;
    if (to_module(cb, e) != m) throw std::invalid_argument("decompose: matrix is not in the Lie algebra span");
    return e;
}

inline LieElement chevalley_bracket(const ChevalleyBasis& cb, const LieElement& u, const LieElement& v) {
    QMatrix a = to_module(cb, u), b = to_module(cb, v);
    return decompose(cb, a * b - b * a);
}

// x = sum_i X_{-alpha_i}: principal nilpotent, lowering orientation.
inline LieElement principal_nilpotent(const RootSystem& rs) {
    LieElement x;
    for (int i = 1; i <= rs.rank; ++i) x.neg[rs.simple(i)] = 1;
    return x;
}

/* Kernel of ad(x) on span{X_{-beta} : ht(beta) = d}, as coefficient vectors
   over rs.roots_of_height(d). */
inline std::vector<std::vector<Rational>> centralizer_at_height(const ChevalleyBasis& cb, int d) {
    const RootSystem& rs = *cb.rs;
    const auto roots = rs.roots_of_height(d);
    if (roots.empty()) return {};
    const auto above = rs.roots_of_height(d + 1);
    const QMatrix xm = to_module(cb, principal_nilpotent(rs));
    QMatrix sys(std::max<std::size_t>(above.size(), 1), roots.size(), Rational(0));
    for (std::size_t c = 0; c < roots.size(); ++c) {
        LieElement y;
        y.neg[roots[c]] = 1;
        QMatrix ym = to_module(cb, y);
        LieElement br = decompose(cb, xm * ym - ym * xm);
        for (std::size_t r = 0; r < above.size(); ++r) {
            auto it = br.neg.find(above[r]);
            if (it != br.neg.end()) sys(r, c) = it->second;
        }
    }
    return nullspace(sys);
}

struct CentralizerElement {
    int d = 0;
    std::vector<std::pair<Root, Rational>> y;  // coefficients on X_{-beta}, ht beta = d
    std::vector<std::pair<Root, Rational>> z;  // coefficients on X_{beta}, ht beta = h - d
    Rational scale = 1;                        // factor applied to the raw kernel vector

    LieElement y_element() const {
        LieElement e;
        for (const auto& [b, c] : y) e.neg[b] = c;
        return e;
    }
};

// Integer content normalization: coprime integers, first nonzero positive.
inline std::vector<Rational> content_normalize(std::vector<Rational> v) {
    Integer g = 0, l = 1;
    for (const auto& c : v) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (g == 0) return v;
    Rational s(l, g);
    s.canonicalize();
    for (const auto& c : v)
        if (c != 0) {
            if (c < 0) s = -s;
            break;
        }
    for (auto& c : v) c *= s;
    return v;
}

/* One element per exponent (a basis of each height's kernel), content
   normalized. */
inline std::vector<CentralizerElement> centralizer_basis(const ChevalleyBasis& cb) {
    const RootSystem& rs = *cb.rs;
    std::vector<CentralizerElement> out;
    for (int d = 1; d < rs.coxeter_number(); ++d) {
        const auto roots = rs.roots_of_height(d);
        for (auto v : centralizer_at_height(cb, d)) {
            v = content_normalize(v);
            CentralizerElement e;
            e.d = d;
            for (std::size_t k = 0; k < roots.size(); ++k)
                if (v[k] != 0) e.y.emplace_back(roots[k], v[k]);
            out.push_back(e);
        }
    }
    return out;
}

/* q-correction: solve [x + q X_psi, y + q z] = 0 with z on positive roots of
   height h - d; fills e.z. Throws if there is no solution. */
inline void centralizer_q_correction(const ChevalleyBasis& cb, CentralizerElement& e) {
    const RootSystem& rs = *cb.rs;
    const int hd = rs.coxeter_number() - e.d;
    const auto roots = rs.roots_of_height(hd);
    LieElement psi;
    psi.pos[rs.highest] = 1;
    const QMatrix xm = to_module(cb, principal_nilpotent(rs)), pm = to_module(cb, psi), ym = to_module(cb, e.y_element());
    // [x, z] = -[X_psi, y] and [X_psi, z] = 0, as linear equations on module entries
    const QMatrix target = -(pm * ym - ym * pm);
    const std::size_t N = cb.mod->dim();
    QMatrix sys(2 * N * N, roots.size(), Rational(0));
    std::vector<Rational> rhs(2 * N * N, Rational(0));
    for (std::size_t c = 0; c < roots.size(); ++c) {
        LieElement z;
        z.pos[roots[c]] = 1;
        QMatrix zm = to_module(cb, z);
        QMatrix a = xm * zm - zm * xm, b = pm * zm - zm * pm;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                sys(i * N + j, c) = a(i, j);
                sys(N * N + i * N + j, c) = b(i, j);
            }
    }
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) rhs[i * N + j] = target(i, j);
    auto sol = solve(sys, rhs);
    if (!sol) throw std::logic_error("no q-correction for the centralizer element of height " + std::to_string(e.d));
    e.z.clear();
    for (std::size_t k = 0; k < roots.size(); ++k)
        if ((*sol)[k] != 0) e.z.emplace_back(roots[k], (*sol)[k]);
}

/* dim ker ad(x + q X_psi) on the whole algebra at a rational q. Equal to the
   rank exactly when x_q is regular. */
inline std::size_t xq_centralizer_dimension(const ChevalleyBasis& cb, const Rational& q) {
    const RootSystem& rs = *cb.rs;
    LieElement xq = principal_nilpotent(rs);
    xq.pos[rs.highest] = q;
    const QMatrix xm = to_module(cb, xq);
    std::vector<LieElement> basis;
    for (const auto& b : rs.positive) {
        LieElement e;
        e.pos[b] = 1;
        basis.push_back(e);
        LieElement f;
        f.neg[b] = 1;
        basis.push_back(f);
    }
    for (int i = 0; i < rs.rank; ++i) {
        LieElement e;
        e.h.assign(static_cast<std::size_t>(rs.rank), Rational(0));
        e.h[static_cast<std::size_t>(i)] = 1;
        basis.push_back(e);
    }
    const std::size_t R = rs.positive.size();
    QMatrix sys(2 * R + static_cast<std::size_t>(rs.rank), basis.size(), Rational(0));
    for (std::size_t c = 0; c < basis.size(); ++c) {
        QMatrix bm = to_module(cb, basis[c]);
        LieElement a = decompose(cb, xm * bm - bm * xm);
        for (const auto& [b, v] : a.pos) sys(rs.index.at(b), c) = v;
        for (const auto& [b, v] : a.neg) sys(R + rs.index.at(b), c) = v;
        for (std::size_t i = 0; i < a.h.size(); ++i) sys(2 * R + i, c) = a.h[i];
    }
    return basis.size() - rank(sys);
}

/* Greedy label of a weight: climb from nu to omega, at each step taking the
   smallest i with nu + alpha_i a weight; digits in climbing order, so the word
   s_{i_1} ... s_{i_k} applied to omega (rightmost first) gives nu. */
inline std::string weight_word(const MinusculeModule& m, std::size_t idx) {
    const RootSystem& rs = *m.rs;
    std::string w;
    Weight nu = m.weights.at(idx);
    while (m.index.at(nu) != 0) {
        bool moved = false;
        for (int i = 0; i < rs.rank; ++i) {
            if (nu[static_cast<std::size_t>(i)] != -1) continue;
            Weight up = nu;
            for (int j = 0; j < rs.rank; ++j) up[static_cast<std::size_t>(j)] += rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!m.index.count(up)) continue;
            w += std::to_string(i + 1);
            nu = up;
            moved = true;
            break;
        }
        if (!moved) throw std::logic_error("weight_word: stuck below omega");
    }
    return w.empty() ? "" : w;
}

/* Weight reached by a digit word (rank <= 9), applied rightmost first. Every
   step must lower the weight by a simple root; nullopt otherwise. */
inline std::optional<std::size_t> weight_of_word(const MinusculeModule& m, const std::string& word) {
    const RootSystem& rs = *m.rs;
    Weight nu = m.weights[0];
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (!std::isdigit(static_cast<unsigned char>(*it))) return std::nullopt;
        int i = *it - '0';
        if (i < 1 || i > rs.rank) return std::nullopt;
        if (nu[static_cast<std::size_t>(i - 1)] != 1) return std::nullopt;
        for (int j = 0; j < rs.rank; ++j) nu[static_cast<std::size_t>(j)] -= rs.cartan[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    auto f = m.index.find(nu);
    if (f == m.index.end()) return std::nullopt;
    return f->second;
}

// y(e_omega) on the weight basis: (weight index, coefficient).
inline std::vector<std::pair<std::size_t, Rational>> p_class_coefficients(const ChevalleyBasis& cb, const LieElement& y) {
    QMatrix ym = to_module(cb, y);
    std::vector<std::pair<std::size_t, Rational>> out;
    for (std::size_t i = 0; i < ym.rows(); ++i)
        if (ym(i, 0) != 0) out.emplace_back(i, ym(i, 0));
    return out;
}

/* Root expressions such as "theta-a2-a6", "psi-theta", "theta+2a4+a3":
   terms theta, psi or [k]a<i>, joined by + and -. */
inline Root parse_root_expression(const RootSystem& rs, const std::string& text) {
    Root r(static_cast<std::size_t>(rs.rank), 0);
    std::size_t p = 0;
    int sign = 1;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty root expression");
    while (p < s.size()) {
        if (s[p] == '+' || s[p] == '-') {
            sign = s[p] == '+' ? 1 : -1;
            ++p;
        }
        int k = 0;
        bool has_k = false;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
            k = 10 * k + (s[p] - '0');
            has_k = true;
            ++p;
        }
        if (!has_k) k = 1;
        Root term;
        if (s.compare(p, 5, "theta") == 0) {
            term = rs.theta();
            p += 5;
        } else if (s.compare(p, 3, "psi") == 0) {
            term = rs.highest;
            p += 3;
        } else if (p < s.size() && s[p] == 'a') {
            ++p;
            int i = 0;
            bool any = false;
            while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
                i = 10 * i + (s[p] - '0');
                any = true;
                ++p;
            }
            if (!any || i < 1 || i > rs.rank) throw std::invalid_argument("bad simple root in: " + text);
            term = rs.simple(i);
        } else {
            throw std::invalid_argument("cannot parse root expression: " + text);
        }
        for (std::size_t j = 0; j < r.size(); ++j) r[j] += sign * k * term[j];
        sign = 1;
    }
    if (!rs.is_root(r)) throw std::invalid_argument("not a positive root: " + text);
    return r;
}

}  // namespace qsatake

#endif
