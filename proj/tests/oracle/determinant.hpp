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

#ifndef QSATAKE_ORACLE_DETERMINANT_HPP
#define QSATAKE_ORACLE_DETERMINANT_HPP

// Leibniz-free determinant: cofactor expansion with memo on column subsets.

#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline mpq_class determinant(const std::vector<std::vector<mpq_class>>& a) {
    const std::size_t n = a.size();
    std::map<unsigned long, mpq_class> memo;  // used columns -> minor on remaining rows
    auto rec = [&](auto&& self, std::size_t r, unsigned long used) -> mpq_class {
        if (r == n) return 1;
        auto it = memo.find(used);
        if (it != memo.end()) return it->second;
        mpq_class s = 0;
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (used >> c & 1UL) continue;
            if (a[r][c] != 0) s += sign * a[r][c] * self(self, r + 1, used | (1UL << c));
            sign = -sign;
        }
        memo[used] = s;
        return s;
    };
    return rec(rec, 0, 0);
}

}  // namespace oracle

#endif
