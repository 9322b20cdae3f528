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

#ifndef QSATAKE_MATRIX_HPP
#define QSATAKE_MATRIX_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace qsatake {

// Dense row-major matrix over a commutative ring T.
template <class T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, const T& fill = T(0)) : r_(r), c_(c), a_(r * c, fill) {}

    static Matrix identity(std::size_t n, const T& one = T(1), const T& zero = T(0)) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const noexcept { return r_; }
    std::size_t cols() const noexcept { return c_; }
    bool square() const noexcept { return r_ == c_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Matrix transpose() const {
        Matrix t(c_, r_, zero_like());
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.a_) x = -x;
        return a;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch in product");
        Matrix m(a.r_, b.c_, a.zero_like());
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (x == T(0)) continue;
                for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend Matrix operator*(const T& s, Matrix a) {
        for (auto& x : a.a_) x = s * x;
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != c_) throw std::invalid_argument("vector length mismatch");
        std::vector<T> out(r_, zero_like());
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        Matrix m(rs.size(), cs.size(), zero_like());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
        return m;
    }

   private:
    // Zero in the same ring as our entries (keeps polynomial variable tags).
    T zero_like() const { return a_.empty() ? T(0) : a_[0] - a_[0]; }
    void check_same(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;

template <class T>
Matrix<T> matrix_power(const Matrix<T>& m, unsigned k, const T& one = T(1), const T& zero = T(0)) {
    Matrix<T> r = Matrix<T>::identity(m.rows(), one, zero);
    for (unsigned i = 0; i < k; ++i) r = r * m;
    return r;
}

/* Determinant by cofactor expansion along the first row. Only for rings
   without division and small sizes (symmetric-function determinants). */
template <class T>
T det_cofactor(const Matrix<T>& m, const T& one = T(1)) {
    const std::size_t n = m.rows();
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return one;
    if (n == 1) return m(0, 0);
    T acc = one - one;
    std::vector<std::size_t> rest(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) rest[i] = i + 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == T(0)) continue;
        std::vector<std::size_t> cs;
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) cs.push_back(k);
        T minor = det_cofactor(m.submatrix(rest, cs), one);
        if (j % 2 == 0)
            acc += m(0, j) * minor;
        else
            acc -= m(0, j) * minor;
    }
    return acc;
}

// Gaussian elimination over Q.
inline Rational det(QMatrix m) {
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

inline std::size_t rank(QMatrix m) { return rref(m).size(); }

// Basis of the right kernel {v : m v = 0}.
inline std::vector<std::vector<Rational>> nullspace(QMatrix m) {
    auto piv = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve m x = b; nullopt if inconsistent. Picks the solution with free variables zero.
inline std::optional<std::vector<Rational>> solve(const QMatrix& m, const std::vector<Rational>& b) {
    QMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    std::vector<Rational> x(m.cols(), Rational(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.cols());
    return x;
}

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline CMatrix to_complex(const QMatrix& m) {
    CMatrix c(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = Complex(m(i, j).get_d(), 0.0);
    return c;
}

}  // namespace qsatake

#endif
