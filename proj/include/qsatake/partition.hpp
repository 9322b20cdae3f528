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

#ifndef QSATAKE_PARTITION_HPP
#define QSATAKE_PARTITION_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qsatake {

// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;
// Strictly decreasing positive parts.
using StrictPartition = std::vector<int>;

inline int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }
inline int length(const Partition& p) { return static_cast<int>(p.size()); }
inline int part(const Partition& p, int i) { return i < length(p) ? p[static_cast<std::size_t>(i)] : 0; }

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}
inline bool is_strict(const Partition& p) {
    if (!is_partition(p)) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] == p[i + 1]) return false;
    return true;
}

inline Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int j = 1; j <= p[0]; ++j) {
        int cnt = 0;
        for (int x : p)
            if (x >= j) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

inline bool contains(const Partition& big, const Partition& small) {
    if (small.size() > big.size()) return false;
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

inline bool in_box(const Partition& p, int a, int b) { return length(p) <= a && (p.empty() || p[0] <= b); }

inline std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

// "(4,3,1)", "()", "4,3,1", whitespace-insensitive. Zero parts are dropped.
inline Partition parse_partition(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw std::invalid_argument("unbalanced parenthesis in partition: " + text);
        s = s.substr(1, s.size() - 2);
    }
    Partition p;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find(',', pos);
        if (end == std::string::npos) end = s.size();
        std::string tok = s.substr(pos, end - pos);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("bad partition part at position " + std::to_string(pos) + ": " + text);
        int v = std::stoi(tok);
        if (v > 0) p.push_back(v);
        pos = end + 1;
    }
    if (!is_partition(p)) throw std::invalid_argument("parts not weakly decreasing: " + text);
    return p;
}

// All partitions inside the a x b box, by size then reverse-lex.
inline std::vector<Partition> partitions_in_box(int a, int b) {
    std::vector<Partition> out;
    std::function<void(Partition&, int, int)> rec = [&](Partition& cur, int rows_left, int max_part) {
        out.push_back(cur);
        if (rows_left == 0) return;
        for (int v = 1; v <= max_part; ++v) {
            cur.push_back(v);
            rec(cur, rows_left - 1, v);
            cur.pop_back();
        }
    };
    Partition cur;
    rec(cur, a, b);
    std::stable_sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
        if (partition_size(x) != partition_size(y)) return partition_size(x) < partition_size(y);
        return x > y;
    });
    return out;
}

inline std::vector<Partition> partitions_of(int n, int max_part = -1) {
    if (max_part < 0) max_part = n;
    std::vector<Partition> out;
    std::function<void(Partition&, int, int)> rec = [&](Partition& cur, int rest, int mx) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = std::min(rest, mx); v >= 1; --v) {
            cur.push_back(v);
            rec(cur, rest - v, v);
            cur.pop_back();
        }
    };
    Partition cur;
    rec(cur, n, max_part);
    return out;
}

// Strict partitions with parts in {1..m}, by size then reverse-lex.
inline std::vector<StrictPartition> strict_partitions_upto(int m) {
    std::vector<StrictPartition> out;
    for (unsigned mask = 0; mask < (1U << m); ++mask) {
        StrictPartition s;
        for (int v = m; v >= 1; --v)
            if (mask & (1U << (v - 1))) s.push_back(v);
        out.push_back(s);
    }
    std::stable_sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
        if (partition_size(x) != partition_size(y)) return partition_size(x) < partition_size(y);
        return x > y;
    });
    return out;
}

/* Rim operations via beta-numbers: with L rows, beta_i = lambda_i + L - i.
   Adding a border rim of size r moves one bead from beta to beta + r onto an
   empty slot; the height is the number of beads jumped over. */
struct RimResult {
    Partition shape;
    int height;
    friend bool operator==(const RimResult& x, const RimResult& y) { return x.shape == y.shape && x.height == y.height; }
    friend bool operator<(const RimResult& x, const RimResult& y) { return std::tie(x.shape, x.height) < std::tie(y.shape, y.height); }
};

namespace detail {

inline Partition from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    const int L = static_cast<int>(beta.size());
    Partition p;
    for (int i = 0; i < L; ++i) {
        int v = beta[static_cast<std::size_t>(i)] - (L - 1 - i);
        if (v > 0) p.push_back(v);
    }
    return p;
}

}  // namespace detail

// box = (a, b): rows <= a, columns <= b. nullopt for unbounded.
inline std::vector<RimResult> add_border_rims(const Partition& lam, int rim, std::optional<std::pair<int, int>> box = std::nullopt) {
    if (rim < 1) throw std::invalid_argument("rim size must be positive");
    const int L = length(lam) + rim;
    std::vector<int> beta(static_cast<std::size_t>(L));
    std::set<int> occ;
    for (int i = 0; i < L; ++i) {
        beta[static_cast<std::size_t>(i)] = part(lam, i) + L - 1 - i;
        occ.insert(beta[static_cast<std::size_t>(i)]);
    }
    std::vector<RimResult> out;
    for (int i = 0; i < L; ++i) {
        int b = beta[static_cast<std::size_t>(i)];
        if (occ.count(b + rim)) continue;
        int h = 0;
        for (int x = b + 1; x < b + rim; ++x) h += static_cast<int>(occ.count(x));
        auto nb = beta;
        nb[static_cast<std::size_t>(i)] = b + rim;
        Partition mu = detail::from_beta(nb);
        if (box && !in_box(mu, box->first, box->second)) continue;
        out.push_back({mu, h});
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<RimResult> remove_border_rims(const Partition& lam, int rim) {
    if (rim < 1) throw std::invalid_argument("rim size must be positive");
    const int L = length(lam);
    std::vector<int> beta(static_cast<std::size_t>(L));
    std::set<int> occ;
    for (int i = 0; i < L; ++i) {
        beta[static_cast<std::size_t>(i)] = part(lam, i) + L - 1 - i;
        occ.insert(beta[static_cast<std::size_t>(i)]);
    }
    std::vector<RimResult> out;
    for (int i = 0; i < L; ++i) {
        int b = beta[static_cast<std::size_t>(i)];
        if (b - rim < 0 || occ.count(b - rim)) continue;
        int h = 0;
        for (int x = b - rim + 1; x < b; ++x) h += static_cast<int>(occ.count(x));
        auto nb = beta;
        nb[static_cast<std::size_t>(i)] = b - rim;
        out.push_back({detail::from_beta(nb), h});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Horizontal strip test: mu / lam has at most one box per column.
inline bool is_horizontal_strip(const Partition& mu, const Partition& lam) {
    if (!contains(mu, lam)) return false;
    for (int i = 0; i < length(mu); ++i)
        if (part(mu, i + 1) > part(lam, i)) return false;
    return true;
}

// z_mu = prod_i i^{m_i} m_i!
inline long long z_factor(const Partition& mu) {
    long long z = 1;
    std::size_t i = 0;
    while (i < mu.size()) {
        std::size_t j = i;
        while (j < mu.size() && mu[j] == mu[i]) ++j;
        long long m = static_cast<long long>(j - i);
        for (long long k = 1; k <= m; ++k) z *= k * mu[i];
        i = j;
    }
    return z;
}

}  // namespace qsatake

#endif
