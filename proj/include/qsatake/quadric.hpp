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

#ifndef QSATAKE_QUADRIC_HPP
#define QSATAKE_QUADRIC_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"

namespace qsatake {

/* Even quadric Q^{2n-2}. Vector basis of C^{2n}: e_{-n},...,e_{-1},e_1,...,e_n
   at positions 0..2n-1. */
inline std::size_t so_index(int k, int n) {
    if (k == 0 || k > n || k < -n) throw std::out_of_range("so_index: bad label " + std::to_string(k));
    return static_cast<std::size_t>(k > 0 ? n + k - 1 : n + k);
}

// x^T reflected in the antidiagonal equals -x.
template <class T>
bool is_antidiagonal_skew(const Matrix<T>& m) {
    const std::size_t N = m.rows();
    if (m.cols() != N) return false;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (!(m(i, j) == -m(N - 1 - j, N - 1 - i))) return false;
    return true;
}

// The cyclic element x_q in so_{2n}, entries polynomials in q.
inline Matrix<QPoly> quadric_xq(int n) {
    if (n < 2) throw std::invalid_argument("quadric_xq needs n >= 2");
    const std::size_t N = static_cast<std::size_t>(2 * n);
    const std::size_t un = static_cast<std::size_t>(n);
    Matrix<QPoly> m(N, N, QPoly("q"));
    auto c = [](long v) { return QPoly::constant(Rational(v), "q"); };
    const QPoly q = QPoly::monomial(Rational(1), 1, "q");
    for (std::size_t i = 0; i + 1 < un; ++i) m(i, i + 1) = c(1);
    for (std::size_t i = un + 1; i + 1 < N; ++i) m(i, i + 1) = c(-1);
    m(un - 2, un) = q;
    m(un - 1, un + 1) = -q;
    m(un, un + 1) = c(-1);
    m(N - 2, 0) = c(1);
    m(N - 1, 1) = c(-1);
    return m;
}

inline CMatrix eval_matrix(const Matrix<QPoly>& m, Complex q) {
    CMatrix r(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).template eval<Complex>(q);
    return r;
}

/* Schubert slots, in order: s0..s_{n-2}, s_{n-1}+, s_{n-1}-, s_n..s_{2n-2}. */
struct QuadricSlot {
    int k;     // codimension
    int ruling;  // +1 / -1 for the two middle classes, 0 otherwise
};

inline std::vector<QuadricSlot> quadric_slots(int n) {
    std::vector<QuadricSlot> s;
    for (int k = 0; k <= n - 2; ++k) s.push_back({k, 0});
    s.push_back({n - 1, 1});
    s.push_back({n - 1, -1});
    for (int k = n; k <= 2 * n - 2; ++k) s.push_back({k, 0});
    return s;
}

inline std::string slot_label(const QuadricSlot& s) {
    std::string l = "s" + std::to_string(s.k);
    if (s.ruling > 0) l += "+";
    if (s.ruling < 0) l += "-";
    return l;
}

inline std::size_t slot_position(int n, const std::string& label) {
    auto slots = quadric_slots(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slot_label(slots[i]) == label) return i;
    throw std::invalid_argument("no quadric class " + label + " for n=" + std::to_string(n));
}

class QuadricClass {
   public:
    explicit QuadricClass(int n) : n_(n), c_(static_cast<std::size_t>(2 * n), QPoly("q")) {
        if (n < 2) throw std::invalid_argument("quadric needs n >= 2");
    }
    static QuadricClass basis(int n, std::size_t slot) {
        QuadricClass c(n);
        c.c_.at(slot) = QPoly::constant(Rational(1), "q");
        return c;
    }
    static QuadricClass basis(int n, const std::string& label) { return basis(n, slot_position(n, label)); }

    int n() const noexcept { return n_; }
    const std::vector<QPoly>& coeffs() const noexcept { return c_; }
    QPoly& operator[](std::size_t i) { return c_.at(i); }
    const QPoly& operator[](std::size_t i) const { return c_.at(i); }
    friend bool operator==(const QuadricClass& a, const QuadricClass& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

    std::string to_string() const {
        auto slots = quadric_slots(n_);
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            std::string cs = c_[i].to_string("q");
            if (!out.empty()) out += " + ";
            out += (cs == "1" ? "" : "(" + cs + ")·") + slot_label(slots[i]);
        }
        return out.empty() ? "0" : out;
    }

   private:
    int n_;
    std::vector<QPoly> c_;
};

/* Spectrum point: a root zeta of zeta^{2n-2} = c, or one of the two zero points. */
struct QuadricPoint {
    int zero_sign = 0;  // +1 for 0_+, -1 for 0_-, 0 for a nonzero root
    Complex z{0, 0};
};

// Roots of zeta^{2n-2} = c followed by 0_+, 0_-.
inline std::vector<QuadricPoint> quadric_spectrum(int n, Complex c) {
    const int m = 2 * n - 2;
    const double pi = std::acos(-1.0);
    std::vector<QuadricPoint> pts;
    Complex r0 = std::pow(c, 1.0 / m);
    for (int k = 0; k < m; ++k) pts.push_back({0, r0 * std::polar(1.0, 2 * pi * k / m)});
    pts.push_back({1, 0});
    pts.push_back({-1, 0});
    return pts;
}

/* Value of a Schubert slot at a spectrum point, from the idempotent table.
   As printed, the middle classes take the values +-q^{1/2} at 0_+-. That is a
   ring homomorphism only for even n: h s_{2n-3} = s_{2n-2} + q forces the
   point class to be -q at 0_+-, and for odd n the middle classes square to
   the point class. With ring = true the values are +-((-1)^n q)^{1/2}, which
   makes every point a character of the quantum ring. */
inline Complex quadric_table_value(int n, const QuadricSlot& s, const QuadricPoint& p, Complex q, bool ring = false) {
    const Complex sq = std::sqrt(q);
    if (p.zero_sign != 0) {
        if (s.ruling != 0) return static_cast<double>(s.ruling * p.zero_sign) * ((ring && n % 2 == 1) ? Complex(0, 1) * sq : sq);
        if (s.k == 0) return 1;
        if (s.k == 2 * n - 2) return -q;
        return 0;
    }
    const Complex z = p.z;
    if (s.ruling != 0) return 0.5 * std::pow(z, n - 1);
    if (s.k == 0) return 1;
    if (s.k < n - 1) return std::pow(z, s.k);
    if (s.k == 2 * n - 2) return q;
    return 0.5 * std::pow(z, s.k);
}

// Rows = Schubert slots, columns = spectrum points.
inline CMatrix quadric_schubert_matrix(int n, const std::vector<QuadricPoint>& pts, Complex q, bool ring = false) {
    auto slots = quadric_slots(n);
    CMatrix S(static_cast<Eigen::Index>(slots.size()), static_cast<Eigen::Index>(pts.size()));
    for (std::size_t i = 0; i < slots.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) S(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = quadric_table_value(n, slots[i], pts[j], q, ring);
    return S;
}

// Spectral function on the product spectrum zeta^{2n-2} = 4q.
inline std::vector<Complex> quadric_spectral(const QuadricClass& c, Complex q) {
    if (std::abs(q) == 0.0) throw std::invalid_argument("quadric_spectral needs q != 0");
    const int n = c.n();
    auto pts = quadric_spectrum(n, 4.0 * q);
    auto slots = quadric_slots(n);
    std::vector<Complex> out(pts.size(), 0);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (c[i].is_zero()) continue;
        Complex a = c[i].eval<Complex>(q);
        for (std::size_t j = 0; j < pts.size(); ++j) out[j] += a * quadric_table_value(n, slots[i], pts[j], q, true);
    }
    return out;
}

struct QuadricProductResult {
    QuadricClass value;
    double residual;  // distance to the integer lattice before rounding
};

namespace detail {

inline std::vector<long> quadric_basis_product(int n, std::size_t i, std::size_t j, Complex q, double& residual) {
    auto slots = quadric_slots(n);
    auto pts = quadric_spectrum(n, 4.0 * q);
    CMatrix S = quadric_schubert_matrix(n, pts, q, true);
    CVector f(S.cols());
    for (Eigen::Index k = 0; k < S.cols(); ++k) f(k) = S(static_cast<Eigen::Index>(i), k) * S(static_cast<Eigen::Index>(j), k);
    // f = S^T x
    CVector x = S.transpose().fullPivLu().solve(f);
    const int deg = slots[i].k + slots[j].k;
    std::vector<long> out(slots.size(), 0);
    for (std::size_t t = 0; t < slots.size(); ++t) {
        Complex v = x(static_cast<Eigen::Index>(t));
        int d = deg - slots[t].k;
        if (d < 0 || d % (2 * n - 2) != 0) {
            residual = std::max(residual, std::abs(v));
            continue;
        }
        Complex w = v / std::pow(q, d / (2 * n - 2));
        long r = std::lround(w.real());
        residual = std::max(residual, std::abs(w - Complex(static_cast<double>(r), 0)));
        out[t] = r;
    }
    return out;
}

}  // namespace detail

/* Quantum product by the idempotent calculus: multiply spectral values, solve
   back against the Schubert table, restore the q-power from the grading
   deg q = 2n-2 and round to integers. */
inline QuadricProductResult quadric_qproduct(const QuadricClass& a, const QuadricClass& b, Complex q = 1.0) {
    if (a.n() != b.n()) throw std::invalid_argument("quadric_qproduct: different n");
    if (std::abs(q) == 0.0) throw std::invalid_argument("quadric_qproduct needs q != 0");
    const int n = a.n();
    QuadricClass out(n);
    double residual = 0;
    const std::size_t N = a.coeffs().size();
    for (std::size_t i = 0; i < N; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < N; ++j) {
            if (b[j].is_zero()) continue;
            auto prod = detail::quadric_basis_product(n, i, j, q, residual);
            const int deg = quadric_slots(n)[i].k + quadric_slots(n)[j].k;
            for (std::size_t t = 0; t < N; ++t) {
                if (prod[t] == 0) continue;
                unsigned e = static_cast<unsigned>((deg - quadric_slots(n)[t].k) / (2 * n - 2));
                out[t] += a[i] * b[j] * QPoly::monomial(Rational(prod[t]), e, "q");
            }
        }
    }
    return {out, residual};
}

/* Eigenvectors of x_q: f_zeta for zeta^{2n-2} = (-1)^n 4q and the kernel
   vectors f_{0+-} = q e_{-1} - e_1 +- sqrt(q)(e_n + e_{-n}). Columns of the
   returned matrix, in quadric_spectrum order. */
inline CMatrix quadric_eigenvectors(int n, Complex q, std::vector<QuadricPoint>* points = nullptr) {
    auto pts = quadric_spectrum(n, static_cast<double>(n % 2 == 0 ? 4 : -4) * q);
    const Eigen::Index N = 2 * n;
    CMatrix F = CMatrix::Zero(N, static_cast<Eigen::Index>(pts.size()));
    auto at = [&](int k) { return static_cast<Eigen::Index>(so_index(k, n)); };
    const Complex sq = std::sqrt(q);
    for (std::size_t c = 0; c < pts.size(); ++c) {
        const Eigen::Index col = static_cast<Eigen::Index>(c);
        if (pts[c].zero_sign != 0) {
            const double s = pts[c].zero_sign;
            F(at(-1), col) = q;
            F(at(1), col) = -1.0;
            F(at(n), col) += s * sq;
            F(at(-n), col) += s * sq;
            continue;
        }
        const Complex z = pts[c].z;
        for (int k = 0; k <= n - 2; ++k) F(at(-n + k), col) = std::pow(z, k);
        F(at(-1), col) = 0.5 * std::pow(z, n - 1);
        F(at(n), col) += -1.0;
        for (int m = 1; m <= n - 1; ++m) F(at(n - m), col) += -2.0 * std::pow(-z, -m);
    }
    if (points) *points = pts;
    return F;
}

// max |x_q f - lambda f| over the eigenbasis.
inline double quadric_eigen_residual(int n, Complex q) {
    std::vector<QuadricPoint> pts;
    CMatrix F = quadric_eigenvectors(n, q, &pts);
    CMatrix X = eval_matrix(quadric_xq(n), q);
    double worst = 0;
    for (std::size_t c = 0; c < pts.size(); ++c) {
        const Eigen::Index col = static_cast<Eigen::Index>(c);
        CVector r = X * F.col(col) - pts[c].z * F.col(col);
        worst = std::max(worst, r.cwiseAbs().maxCoeff());
    }
    return worst;
}

/* Basis vector row -> Schubert row matched by the inverse check:
   e_{-n} <-> s0, e_n <-> s_{2n-2}, the rest in reversed order, except that for
   even n the two rulings are not exchanged (e_{-1} <-> s_{n-1}+). */
inline std::vector<std::size_t> quadric_row_bijection(int n) {
    const std::size_t N = static_cast<std::size_t>(2 * n);
    std::vector<std::size_t> m(N);
    m[0] = 0;
    m[N - 1] = N - 1;
    for (std::size_t i = 1; i + 1 < N; ++i) m[i] = N - 1 - i;
    if (n % 2 == 0) std::swap(m[static_cast<std::size_t>(n - 1)], m[static_cast<std::size_t>(n)]);
    return m;
}

struct QuadricInverseReport {
    double residual = 0;        // entries after column scaling and row signs
    double sign_defect = 0;     // max distance of a row factor from +-1
    std::vector<int> row_signs;
};

/* Compare the transposed inverse of the eigenvector matrix with the Schubert
   table evaluated on the same points. Column scalars are fixed by the
   e_{-n} <-> s0 row; every other row must then agree up to a sign. */
inline QuadricInverseReport quadric_satake_inverse_check(int n, Complex q = 1.0) {
    if (std::abs(q) == 0.0) throw std::invalid_argument("inverse check needs q != 0");
    std::vector<QuadricPoint> pts;
    CMatrix F = quadric_eigenvectors(n, q, &pts);
    CMatrix G = F.inverse().transpose();
    CMatrix S = quadric_schubert_matrix(n, pts, q);
    const Eigen::Index N = G.rows();
    CVector c(N);
    for (Eigen::Index j = 0; j < N; ++j) c(j) = G(0, j) / S(0, j);
    auto bij = quadric_row_bijection(n);
    QuadricInverseReport rep;
    for (Eigen::Index b = 0; b < N; ++b) {
        const Eigen::Index s = static_cast<Eigen::Index>(bij[static_cast<std::size_t>(b)]);
        // least-squares row factor
        Complex num = 0;
        double den = 0;
        for (Eigen::Index j = 0; j < N; ++j) {
            Complex t = S(s, j) * c(j);
            num += std::conj(t) * G(b, j);
            den += std::norm(t);
        }
        Complex f = den > 0 ? num / den : Complex(0);
        int sign = f.real() >= 0 ? 1 : -1;
        rep.row_signs.push_back(sign);
        rep.sign_defect = std::max(rep.sign_defect, std::abs(f - Complex(sign, 0)));
        for (Eigen::Index j = 0; j < N; ++j) rep.residual = std::max(rep.residual, std::abs(G(b, j) - static_cast<double>(sign) * S(s, j) * c(j)));
    }
    return rep;
}

// s1; for n = 2 the hyperplane class is s1+ + s1-.
inline QuadricClass quadric_hyperplane(int n) {
    if (n > 2) return QuadricClass::basis(n, 1);
    QuadricClass h = QuadricClass::basis(n, 1);
    h[2] = QPoly::constant(Rational(1), "q");
    return h;
}

// Matrix of * s1 on the Schubert basis (columns = input class), exact in q.
inline Matrix<QPoly> quadric_hyperplane_matrix(int n) {
    const std::size_t N = static_cast<std::size_t>(2 * n);
    Matrix<QPoly> m(N, N, QPoly("q"));
    QuadricClass h = quadric_hyperplane(n);
    for (std::size_t j = 0; j < N; ++j) {
        auto r = quadric_qproduct(h, QuadricClass::basis(n, j));
        for (std::size_t i = 0; i < N; ++i) m(i, j) = r.value[i];
    }
    return m;
}

}  // namespace qsatake

#endif
