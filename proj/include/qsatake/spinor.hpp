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

#ifndef QSATAKE_SPINOR_HPP
#define QSATAKE_SPINOR_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "partition.hpp"
#include "pfaffian.hpp"
#include "quadric.hpp"
#include "schubert.hpp"
#include "symfunc.hpp"

namespace qsatake {

/* Half-spin model: Lambda E_+ with E_+ = <e_1..e_n>. A basis vector is an
   increasing subset S of {1..n}, standing for e_{s_1} ^ ... ^ e_{s_k}. */
using Subset = std::vector<int>;
using SpinVector = LabeledVector<Subset>;

namespace detail {

// e_i ^ e_S, sign (-1)^{#{s in S : s < i}}.
inline std::optional<std::pair<Subset, int>> wedge_in(int i, const Subset& S) {
    if (std::find(S.begin(), S.end(), i) != S.end()) return std::nullopt;
    int below = 0;
    for (int s : S)
        if (s < i) ++below;
    Subset T = S;
    T.insert(std::upper_bound(T.begin(), T.end(), i), i);
    return std::make_pair(T, below % 2 ? -1 : 1);
}

// contraction iota_i e_S, sign (-1)^{position of i}.
inline std::optional<std::pair<Subset, int>> contract(int i, const Subset& S) {
    auto it = std::find(S.begin(), S.end(), i);
    if (it == S.end()) return std::nullopt;
    auto p = it - S.begin();
    Subset T = S;
    T.erase(T.begin() + p);
    return std::make_pair(T, p % 2 ? -1 : 1);
}

// c * op2(op1(S)) added to out.
template <class Op1, class Op2>
void apply_two(SpinVector& out, const QPoly& c, const Subset& S, Op1 op1, Op2 op2) {
    auto a = op1(S);
    if (!a) return;
    auto b = op2(a->first);
    if (!b) return;
    out.add(b->first, QPoly::constant(Rational(a->second * b->second), "q") * c);
}

}  // namespace detail

/* Clifford action of X in so_{2n} (antidiagonal-skew, basis e_{-n}..e_{-1},
   e_1..e_n) on Lambda E_+:
     gl block   X[i, j]   -> e_i iota_j - delta_ij / 2
     X[i, -j]  (i < j)    -> e_i e_j
     X[-i, j]  (i < j)    -> iota_i iota_j */
inline SpinVector spin_action(const Matrix<QPoly>& X, const SpinVector& v) {
    if (X.rows() % 2 != 0 || !is_antidiagonal_skew(X)) throw std::invalid_argument("spin_action needs X in so_2n (antidiagonal skew)");
    const int n = static_cast<int>(X.rows() / 2);
    auto at = [&](int i, int j) -> const QPoly& { return X(so_index(i, n), so_index(j, n)); };
    SpinVector out;
    for (const auto& [S, c] : v.coeffs()) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const QPoly& a = at(i, j);
                if (a.is_zero()) continue;
                detail::apply_two(
                    out, a * c, S, [&](const Subset& s) { return detail::contract(j, s); }, [&](const Subset& s) { return detail::wedge_in(i, s); });
                if (i == j) out.add(S, QPoly::constant(Rational(-1, 2), "q") * a * c);
            }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const QPoly& b = at(i, -j);
                if (!b.is_zero())
                    detail::apply_two(
                        out, b * c, S, [&](const Subset& s) { return detail::wedge_in(j, s); }, [&](const Subset& s) { return detail::wedge_in(i, s); });
                const QPoly& d = at(-i, j);
                if (!d.is_zero())
                    detail::apply_two(
                        out, d * c, S, [&](const Subset& s) { return detail::contract(j, s); }, [&](const Subset& s) { return detail::contract(i, s); });
            }
    }
    return out;
}

// Strict partitions with parts < n: the Schubert labels of OG(n, 2n).
inline std::vector<StrictPartition> spinor_labels(int n) { return strict_partitions_upto(n - 1); }

// lambda = (n - m : m in S, m < n), decreasing.
inline StrictPartition label_of_subset(const Subset& S, int n) {
    StrictPartition l;
    for (int m : S)
        if (m < n) l.push_back(n - m);
    std::sort(l.rbegin(), l.rend());
    return l;
}

// Inverse of label_of_subset on even subsets.
inline Subset subset_of_label(const StrictPartition& lam, int n) {
    if (!is_strict(lam) || (!lam.empty() && lam[0] >= n)) throw std::invalid_argument("not a spinor label for n=" + std::to_string(n) + ": " + to_string(lam));
    Subset S;
    for (int x : lam) S.push_back(n - x);
    if (S.size() % 2) S.push_back(n);
    std::sort(S.begin(), S.end());
    return S;
}

// q = 0 part of x_q: the principal nilpotent x.
inline Matrix<QPoly> classical_part(const Matrix<QPoly>& m) {
    Matrix<QPoly> r(m.rows(), m.cols(), QPoly("q"));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = QPoly::constant(m(i, j).coeff(0), "q");
    return r;
}

/* Signs c_lambda with tau_lambda <-> c_lambda e_{S(lambda)}: walking up the
   Hasse diagram from the empty partition, each classical edge of x_q gets
   coefficient +1. */
inline const std::map<StrictPartition, int>& spinor_normalization(int n) {
    static std::mutex mu;
    static std::map<int, std::map<StrictPartition, int>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const auto x = classical_part(quadric_xq(n));
    std::map<StrictPartition, int> c;
    c[{}] = 1;
    std::vector<StrictPartition> stack{{}};
    while (!stack.empty()) {
        StrictPartition a = stack.back();
        stack.pop_back();
        auto img = spin_action(x, SpinVector::basis(subset_of_label(a, n)));
        for (const auto& [S, v] : img.coeffs()) {
            StrictPartition b = label_of_subset(S, n);
            if (c.count(b) || partition_size(b) != partition_size(a) + 1) continue;
            Rational r = v.coeff(0);
            if (r != 1 && r != -1) throw std::logic_error("spinor normalization: non-unit Hasse edge");
            c[b] = c[a] * (r > 0 ? 1 : -1);
            stack.push_back(b);
        }
    }
    if (c.size() != spinor_labels(n).size()) throw std::logic_error("spinor normalization: Hasse walk incomplete");
    return cache.emplace(n, std::move(c)).first->second;
}

// Action of X on Schubert-labelled vectors, through the normalized basis.
inline PartitionVector spinor_apply(const Matrix<QPoly>& X, const PartitionVector& tau, int n) {
    const auto& c = spinor_normalization(n);
    SpinVector v;
    for (const auto& [l, a] : tau.coeffs()) v.add(subset_of_label(l, n), Rational(c.at(l)) * a);
    PartitionVector out;
    const SpinVector w = spin_action(X, v);
    for (const auto& [S, a] : w.coeffs()) {
        if (S.size() % 2) throw std::logic_error("spin action left the even half-spin space");
        StrictPartition l = label_of_subset(S, n);
        out.add(l, Rational(c.at(l)) * a);
    }
    return out;
}

// Matrix of X on the even half (rows/cols in spinor_labels order).
inline Matrix<QPoly> spinor_matrix(const Matrix<QPoly>& X, int n, const std::vector<StrictPartition>& order) {
    std::map<StrictPartition, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    Matrix<QPoly> m(order.size(), order.size(), QPoly("q"));
    for (std::size_t j = 0; j < order.size(); ++j) {
        const PartitionVector img = spinor_apply(X, PartitionVector::basis(order[j]), n);
        for (const auto& [l, a] : img.coeffs()) m(pos.at(l), j) = a;
    }
    return m;
}

inline Matrix<QPoly> qpoly_identity(std::size_t N) { return Matrix<QPoly>::identity(N, QPoly::constant(Rational(1), "q"), QPoly("q")); }

// p_{2r-1} * tau_lambda as the action of x_q^{2r-1}.
inline PartitionVector spinor_power_product(int r, const StrictPartition& lam, int n) {
    if (r < 1 || 2 * r - 1 > 2 * n - 3) throw std::invalid_argument("spinor_power_product needs 1 <= 2r-1 <= 2n-3");
    const auto x = quadric_xq(n);
    Matrix<QPoly> p = x;
    for (int k = 1; k < 2 * r - 1; ++k) p = p * x;
    return spinor_apply(p, PartitionVector::basis(lam), n);
}

/* y_q = (q e_{-1} - e_1) (e_{-n} + e_n)^T + (e_{-n} + e_n) (e_{-1} - q e_1)^T:
   commutes with x_q and completes x_q, x_q^3, ... to the centralizer. */
inline Matrix<QPoly> spinor_yq(int n) {
    const std::size_t N = static_cast<std::size_t>(2 * n);
    const QPoly one = QPoly::constant(Rational(1), "q"), q = QPoly::monomial(Rational(1), 1, "q"), zero("q");
    std::vector<QPoly> a(N, zero), b(N, zero), c(N, zero);
    a[so_index(-1, n)] = q;
    a[so_index(1, n)] = -one;
    b[so_index(-n, n)] = one;
    b[so_index(n, n)] = one;
    c[so_index(-1, n)] = one;
    c[so_index(1, n)] = -q;
    Matrix<QPoly> y(N, N, zero);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) y(i, j) = a[i] * b[j] + b[i] * c[j];
    return y;
}

struct TauTopReport {
    PartitionVector from_yq;     // (-1)^{n+1} y_q acting on tau_lambda
    PartitionVector from_formula;  // tau_{(n-1, lambda)} + q tau_{lambda / (n-1)}
    bool agree = false;
};

/* tau_{n-1} * tau_lambda two ways. The identification of tau_{n-1} with y_q
   carries the sign (-1)^{n+1}. */
inline TauTopReport spinor_tau_top_product(const StrictPartition& lam, int n) {
    subset_of_label(lam, n);
    TauTopReport rep;
    PartitionVector y = spinor_apply(spinor_yq(n), PartitionVector::basis(lam), n);
    rep.from_yq = (n % 2 == 1 ? Rational(1) : Rational(-1)) * y;
    if (!lam.empty() && lam[0] == n - 1) {
        StrictPartition rest(lam.begin() + 1, lam.end());
        rep.from_formula.add(rest, q_monomial(1, 1));
    } else {
        StrictPartition top{n - 1};
        top.insert(top.end(), lam.begin(), lam.end());
        rep.from_formula.add(top, q_monomial(1, 0));
    }
    rep.agree = rep.from_yq == rep.from_formula;
    return rep;
}

/* Spectrum: zeta = (zeta_1..zeta_{n-1}) with zeta_i^2 running over the
   (n-1)-th roots of (-1)^n 4q, all 2^{n-1} sign choices. */
inline std::vector<std::vector<Complex>> spinor_spectrum(int n, Complex q) {
    if (n < 2) throw std::invalid_argument("spinor spectrum needs n >= 2");
    const int m = n - 1;
    const double pi = std::acos(-1.0);
    const Complex c = static_cast<double>(n % 2 == 0 ? 4 : -4) * q;
    const Complex r0 = std::pow(c, 1.0 / m);
    std::vector<Complex> sq;
    for (int k = 0; k < m; ++k) sq.push_back(std::sqrt(r0 * std::polar(1.0, 2 * pi * k / m)));
    std::vector<std::vector<Complex>> pts;
    for (unsigned mask = 0; mask < (1U << m); ++mask) {
        std::vector<Complex> z(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) z[static_cast<std::size_t>(k)] = (mask >> k & 1U) ? -sq[static_cast<std::size_t>(k)] : sq[static_cast<std::size_t>(k)];
        pts.push_back(z);
    }
    return pts;
}

// c(zeta) = prod zeta_i prod_{j<k} (zeta_j + zeta_k)
inline Complex spinor_norm_constant(const std::vector<Complex>& z) {
    Complex c = 1;
    for (std::size_t i = 0; i < z.size(); ++i) {
        c *= z[i];
        for (std::size_t j = i + 1; j < z.size(); ++j) c *= z[i] + z[j];
    }
    return c;
}

inline StrictPartition strict_complement(const StrictPartition& lam, int n) {
    StrictPartition c;
    for (int v = n - 1; v >= 1; --v)
        if (std::find(lam.begin(), lam.end(), v) == lam.end()) c.push_back(v);
    return c;
}

// Evaluated P~ tables, one per spectrum point.
struct SpinorSpectralData {
    int n;
    Complex q;
    std::vector<std::vector<Complex>> points;
    std::vector<Matrix<Complex>> tables;
    std::vector<Complex> norms;
};

inline SpinorSpectralData spinor_spectral_data(int n, Complex q) {
    if (std::abs(q) == 0.0) throw std::invalid_argument("spinor spectral data needs q != 0");
    SpinorSpectralData d{n, q, spinor_spectrum(n, q), {}, {}};
    PtildeTable t(n - 1, n);
    for (const auto& z : d.points) {
        d.tables.push_back(t.evaluate(z));
        d.norms.push_back(spinor_norm_constant(z));
    }
    return d;
}

struct SpinorProductResult {
    PartitionVector value;
    double residual = 0;
};

/* tau_lambda * tau_mu from the P~ spectral values: multiply pointwise,
   expand with sum_nu P~_nu(z) P~_{nu^c}(w) = delta c(z), restore q-powers
   from deg q = 2n-2, round. */
inline SpinorProductResult spinor_spectral_product(const StrictPartition& lam, const StrictPartition& mu, const SpinorSpectralData& d) {
    const int n = d.n;
    SpinorProductResult res;
    const int deg = partition_size(lam) + partition_size(mu);
    for (const auto& nu : spinor_labels(n)) {
        Complex s = 0;
        const StrictPartition nc = strict_complement(nu, n);
        for (std::size_t k = 0; k < d.points.size(); ++k)
            s += ptilde_eval(d.tables[k], lam) * ptilde_eval(d.tables[k], mu) * ptilde_eval(d.tables[k], nc) / d.norms[k];
        const int gap = deg - partition_size(nu);
        if (gap < 0 || gap % (2 * n - 2) != 0) {
            res.residual = std::max(res.residual, std::abs(s));
            continue;
        }
        const unsigned e = static_cast<unsigned>(gap / (2 * n - 2));
        Complex w = s / std::pow(d.q, static_cast<int>(e));
        long r = std::lround(w.real());
        res.residual = std::max(res.residual, std::abs(w - Complex(static_cast<double>(r), 0)));
        if (r != 0) res.value.add(nu, q_monomial(r, e));
    }
    return res;
}

inline SpinorProductResult spinor_spectral_product(const StrictPartition& lam, const StrictPartition& mu, int n, Complex q = 1.0) {
    return spinor_spectral_product(lam, mu, spinor_spectral_data(n, q));
}

/* u(zeta) = A_-^{-1} A_+ where the rows of A_- | A_+ are f_{zeta_1}, ...,
   f_{zeta_{n-1}}, f_{0_eps} in the coordinates e_{-1}..e_{-n} | e_1..e_n.
   eps is chosen so that A_- is invertible: zeta_1...zeta_{n-1} = (-1)^{n-1} 2 eps q^{1/2}. */
struct UMatrixReport {
    CMatrix u;
    int eps = 1;
    double skew_residual = 0;
    double hook_interior_residual = 0;  // vs the hook formula at -zeta, 1 < i, j < n
    double hook_edge_residual = 0;      // same on rows/columns 1 and n
    double ptilde_residual = 0;         // vs u_{ij} = P~_{j-1,i-1}(-zeta)
};

inline int spinor_eps(const std::vector<Complex>& z, Complex q) {
    const int n = static_cast<int>(z.size()) + 1;
    Complex p = 1;
    for (auto x : z) p *= x;
    Complex r = p / (static_cast<double>(n % 2 == 0 ? -2 : 2) * std::sqrt(q));
    return r.real() >= 0 ? 1 : -1;
}

inline UMatrixReport u_matrix(const std::vector<Complex>& z, Complex q = 1.0) {
    const int n = static_cast<int>(z.size()) + 1;
    const Eigen::Index N = n;
    UMatrixReport rep;
    rep.eps = spinor_eps(z, q);
    CMatrix Am = CMatrix::Zero(N, N), Ap = CMatrix::Zero(N, N);
    for (Eigen::Index i = 0; i + 1 < N; ++i) {
        const Complex zi = z[static_cast<std::size_t>(i)];
        // e_{-k} at column k-1, e_k at column k-1
        for (int k = 2; k <= n; ++k) Am(i, k - 1) = std::pow(zi, n - k);
        Am(i, 0) = 0.5 * std::pow(zi, n - 1);
        for (int m = 1; m <= n - 1; ++m) Ap(i, n - m - 1) = -2.0 * std::pow(-zi, -m);
        Ap(i, n - 1) = -1.0;
    }
    const Complex sq = std::sqrt(q);
    Am(N - 1, 0) = q;
    Am(N - 1, N - 1) = static_cast<double>(rep.eps) * sq;
    Ap(N - 1, 0) = -1.0;
    Ap(N - 1, N - 1) = static_cast<double>(rep.eps) * sq;
    rep.u = Am.fullPivLu().solve(Ap);
    rep.skew_residual = (rep.u + rep.u.transpose()).cwiseAbs().maxCoeff();

    std::vector<Complex> mz;
    for (auto x : z) mz.push_back(-x);
    auto hookv = [&](int a, int b) -> Complex {
        if (a <= 0 || b < 0) return 0;
        return schur_eval(hook(a, b), mz);
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Complex h = (hookv(j - 1, i - 1) - hookv(j, i - 2)) / 4.0;
            double d = std::abs(rep.u(i - 1, j - 1) - h);
            bool edge = i == 1 || j == 1 || i == n || j == n;
            if (edge)
                rep.hook_edge_residual = std::max(rep.hook_edge_residual, d);
            else
                rep.hook_interior_residual = std::max(rep.hook_interior_residual, d);
        }
    PtildeTable t(n - 1, n);
    auto T = t.evaluate(mz);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rep.ptilde_residual = std::max(rep.ptilde_residual, std::abs(rep.u(i, j) - T(static_cast<std::size_t>(j), static_cast<std::size_t>(i))));
    return rep;
}

/* v_{F(zeta)} = sum_S Pf_S(u^T) e_S over even subsets S of {1..n}, in the
   raw (unnormalized) spin basis. */
inline std::map<Subset, Complex> spinor_weight_vector(const std::vector<Complex>& z, Complex q = 1.0) {
    const int n = static_cast<int>(z.size()) + 1;
    CMatrix u = u_matrix(z, q).u;
    Matrix<Complex> ut(static_cast<std::size_t>(n), static_cast<std::size_t>(n), Complex(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ut(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = u(j, i);
    std::map<Subset, Complex> v;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        Subset S;
        std::vector<std::size_t> idx;
        for (int i = 1; i <= n; ++i)
            if (mask >> (i - 1) & 1U) {
                S.push_back(i);
                idx.push_back(static_cast<std::size_t>(i - 1));
            }
        if (S.size() % 2) continue;
        v[S] = pfaffian_minor(ut, idx, Complex(1), false);
    }
    return v;
}

// Numeric matrix of spin_action(X) on even subsets, evaluated at q.
inline CMatrix spin_action_numeric(const Matrix<QPoly>& X, Complex q, std::vector<Subset>* basis_out = nullptr) {
    const int n = static_cast<int>(X.rows() / 2);
    std::vector<Subset> basis;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        Subset S;
        for (int i = 1; i <= n; ++i)
            if (mask >> (i - 1) & 1U) S.push_back(i);
        if (S.size() % 2 == 0) basis.push_back(S);
    }
    std::map<Subset, Eigen::Index> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = static_cast<Eigen::Index>(i);
    const Eigen::Index N = static_cast<Eigen::Index>(basis.size());
    CMatrix m = CMatrix::Zero(N, N);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const SpinVector img = spin_action(X, SpinVector::basis(basis[j]));
        for (const auto& [S, c] : img.coeffs()) m(pos.at(S), static_cast<Eigen::Index>(j)) = c.eval<Complex>(q);
    }
    if (basis_out) *basis_out = basis;
    return m;
}

}  // namespace qsatake

#endif
