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

#ifndef QSATAKE_ORACLE_RIMS_HPP
#define QSATAKE_ORACLE_RIMS_HPP

// Border rims by brute force: every mu of the right size containing lambda,
// tested cell by cell.

#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Shape = std::vector<int>;

inline std::vector<Shape> shapes_of(int n, int max_part) {
    std::vector<Shape> out;
    Shape cur;
    auto rec = [&](auto&& self, int rest, int mx) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rest, mx); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, max_part);
    return out;
}

inline int row(const Shape& s, std::size_t i) { return i < s.size() ? s[i] : 0; }

inline bool contains(const Shape& big, const Shape& small) {
    if (small.size() > big.size()) return false;
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

// cells of mu / lambda, connected through edges, with no 2x2 square;
// returns rows - 1, or -1 if not a rim
inline int rim_height(const Shape& mu, const Shape& lam) {
    std::set<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (int j = row(lam, i); j < mu[i]; ++j) cells.insert({static_cast<int>(i), j});
    if (cells.empty()) return -1;
    for (const auto& [i, j] : cells)
        if (cells.count({i + 1, j}) && cells.count({i, j + 1}) && cells.count({i + 1, j + 1})) return -1;
    std::set<std::pair<int, int>> seen{*cells.begin()};
    std::vector<std::pair<int, int>> stack{*cells.begin()};
    while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        for (auto nb : {std::pair{i + 1, j}, std::pair{i - 1, j}, std::pair{i, j + 1}, std::pair{i, j - 1}})
            if (cells.count(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
    if (seen.size() != cells.size()) return -1;
    std::set<int> rows;
    for (const auto& c : cells) rows.insert(c.first);
    return static_cast<int>(rows.size()) - 1;
}

// (mu, height) for rims of size k added to lambda; box (a rows, b columns) if a > 0
inline std::vector<std::pair<Shape, int>> rims_added(const Shape& lam, int k, int a = 0, int b = 0) {
    int size = 0;
    for (int x : lam) size += x;
    std::vector<std::pair<Shape, int>> out;
    for (const auto& mu : shapes_of(size + k, size + k)) {
        if (a > 0 && (static_cast<int>(mu.size()) > a || mu[0] > b)) continue;
        if (!contains(mu, lam)) continue;
        int h = rim_height(mu, lam);
        if (h >= 0) out.push_back({mu, h});
    }
    return out;
}

inline std::vector<std::pair<Shape, int>> rims_removed(const Shape& lam, int k) {
    int size = 0;
    for (int x : lam) size += x;
    std::vector<std::pair<Shape, int>> out;
    if (k > size) return out;
    std::vector<Shape> cands = size == k ? std::vector<Shape>{Shape{}} : shapes_of(size - k, size);
    for (const auto& nu : cands) {
        if (!contains(lam, nu)) continue;
        int h = rim_height(lam, nu);
        if (h >= 0) out.push_back({nu, h});
    }
    return out;
}

}  // namespace oracle

#endif
