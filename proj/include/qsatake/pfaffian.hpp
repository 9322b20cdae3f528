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

#ifndef QSATAKE_PFAFFIAN_HPP
#define QSATAKE_PFAFFIAN_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"

namespace qsatake {

namespace detail {

template <class T>
T pfaffian_rec(const Matrix<T>& a, const std::vector<std::size_t>& idx, const T& one) {
    if (idx.empty()) return one;
    T acc = one - one;
    const std::size_t i0 = idx[0];
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const T& x = a(i0, idx[k]);
        if (x == T(0)) continue;
        rest.clear();
        for (std::size_t m = 1; m < idx.size(); ++m)
            if (m != k) rest.push_back(idx[m]);
        T sub = pfaffian_rec(a, rest, one);
        // sign (-1)^(k-1) for the k-th remaining index
        if (k % 2 == 1)
            acc += x * sub;
        else
            acc -= x * sub;
    }
    return acc;
}

}  // namespace detail

template <class T>
bool is_skew(const Matrix<T>& a) {
    if (!a.square()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            if (!(a(i, j) == -a(j, i))) return false;
    return true;
}

/* Pfaffian of the principal submatrix on row_set, by expansion along the
   first selected row. Pf of the empty set is 1; Pf([[0,1],[-1,0]]) = 1.
   Skew-symmetry is checked on the whole matrix unless check_skew is false
   (numeric callers whose inputs are skew by construction). */
template <class T>
T pfaffian_minor(const Matrix<T>& a, const std::vector<std::size_t>& row_set, const T& one = T(1), bool check_skew = true) {
    if (row_set.size() % 2 != 0) throw std::invalid_argument("pfaffian of odd-sized index set");
    if (check_skew && !is_skew(a)) throw std::invalid_argument("pfaffian of non-skew matrix");
    for (auto i : row_set)
        if (i >= a.rows()) throw std::out_of_range("pfaffian index out of range");
    return detail::pfaffian_rec(a, row_set, one);
}

template <class T>
T pfaffian(const Matrix<T>& a, const T& one = T(1)) {
    std::vector<std::size_t> all(a.rows());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return pfaffian_minor(a, all, one);
}

}  // namespace qsatake

#endif
