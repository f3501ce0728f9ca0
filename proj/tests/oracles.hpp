/*
 Copyright 2026 The birkhoff-lab Authors
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

// Independent reference implementations. They share only the value type
// and the transition matrix with the library; everything else is brute force.

#pragma once

#include "birkhoff/core.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using birkhoff::FieldValue;
using birkhoff::Rational;
using birkhoff::Word;
using Matrix = std::vector<std::vector<int>>;

inline char sym(int s) { return birkhoff::symbol_char(s); }
inline int idx(char c) { return birkhoff::symbol_index(c); }

inline bool cyclic_ok(const Matrix& A, const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!A[idx(w[i])][idx(w[(i + 1) % w.size()])]) return false;
    return true;
}

inline bool linear_ok(const Matrix& A, const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!A[idx(w[i])][idx(w[i + 1])]) return false;
    return true;
}

inline Word min_rotation(const Word& w) {
    Word best = w;
    for (std::size_t r = 1; r < w.size(); ++r) best = std::min(best, w.substr(r) + w.substr(0, r));
    return best;
}

inline bool primitive(const Word& w) {
    for (std::size_t d = 1; d < w.size(); ++d) {
        if (w.size() % d) continue;
        bool periodic = true;
        for (std::size_t i = d; i < w.size() && periodic; ++i) periodic = w[i] == w[i - d];
        if (periodic) return false;
    }
    return true;
}

/// All words of length len over the alphabet, odometer order.
inline std::vector<Word> all_words(int alphabet, int len) {
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(len), sym(0));
    std::vector<int> digits(static_cast<std::size_t>(len), 0);
    while (true) {
        for (int i = 0; i < len; ++i) w[static_cast<std::size_t>(i)] = sym(digits[static_cast<std::size_t>(i)]);
        out.push_back(w);
        int i = len - 1;
        while (i >= 0 && ++digits[static_cast<std::size_t>(i)] == alphabet) digits[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
    }
    return out;
}

/// Canonical primitive orbits sorted by (period, word).
inline std::vector<Word> orbits(const Matrix& A, int n_max) {
    std::vector<Word> out;
    const int n = static_cast<int>(A.size());
    for (int len = 1; len <= n_max; ++len) {
        std::set<Word> seen;
        for (const auto& w : all_words(n, len))
            if (cyclic_ok(A, w) && primitive(w)) seen.insert(min_rotation(w));
        out.insert(out.end(), seen.begin(), seen.end());
    }
    return out;
}

inline FieldValue cyclic_sum(const Word& w, const std::map<Word, FieldValue>& f, int window) {
    FieldValue s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        Word win;
        for (int j = 0; j < window; ++j) win.push_back(w[(i + static_cast<std::size_t>(j)) % w.size()]);
        s += f.at(win);
    }
    return s;
}

/// Transitive closure by repeated squaring-free relaxation.
inline bool strongly_connected(const Matrix& A) {
    const std::size_t n = A.size();
    std::vector<std::vector<bool>> R(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) R[i][j] = A[i][j] != 0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (R[i][k] && R[k][j]) R[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!R[i][j]) return false;
    return true;
}

/// Higher-block graph built from scratch: vertices = admissible words of
/// length W-1, edge u->v when u+v.back() is admissible.
struct Graph {
    std::vector<Word> vertices;
    std::vector<std::vector<std::pair<int, Word>>> out;  // (head, edge word)
};

inline Graph higher_block(const Matrix& A, int W) {
    Graph g;
    for (const auto& w : all_words(static_cast<int>(A.size()), W - 1))
        if (linear_ok(A, w)) g.vertices.push_back(w);
    std::map<Word, int> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = static_cast<int>(i);
    g.out.resize(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (int s = 0; s < static_cast<int>(A.size()); ++s) {
            Word e = g.vertices[i] + sym(s);
            if (!linear_ok(A, e)) continue;
            g.out[i].push_back({index.at(e.substr(1)), e});
        }
    return g;
}

/// Simple cycles by DFS from each start vertex s over vertices >= s. Returns
/// nullopt when more than `cap` cycles exist.
inline std::optional<std::vector<Word>> simple_cycles(const Graph& g, std::size_t cap) {
    std::vector<Word> cycles;
    const int V = static_cast<int>(g.vertices.size());
    std::vector<char> on_path(static_cast<std::size_t>(V), 0);
    Word path;
    bool overflow = false;
    std::function<void(int, int)> dfs = [&](int s, int v) {
        for (const auto& [h, e] : g.out[static_cast<std::size_t>(v)]) {
            if (overflow) return;
            if (h < s) continue;
            if (h == s) {
                cycles.push_back(path + e.front());
                if (cycles.size() > cap) overflow = true;
            } else if (!on_path[static_cast<std::size_t>(h)]) {
                on_path[static_cast<std::size_t>(h)] = 1;
                path.push_back(e.front());
                dfs(s, h);
                path.pop_back();
                on_path[static_cast<std::size_t>(h)] = 0;
            }
        }
    };
    for (int s = 0; s < V && !overflow; ++s) {
        on_path[static_cast<std::size_t>(s)] = 1;
        dfs(s, s);
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    if (overflow) return std::nullopt;
    return cycles;
}

/// Minimum mean over closed walks of length <= V, by exhaustive walk-weight
/// tables from every start vertex. Every closed walk splits into simple cycles,
/// so this equals the minimum simple-cycle mean.
inline FieldValue closed_walk_min_mean(const Graph& g, const std::map<Word, FieldValue>& f, int window, bool maximize) {
    const std::size_t V = g.vertices.size();
    std::optional<FieldValue> best;
    for (std::size_t s = 0; s < V; ++s) {
        std::vector<std::optional<FieldValue>> cur(V), next(V);
        cur[s] = FieldValue(0);
        for (std::size_t len = 1; len <= V; ++len) {
            std::fill(next.begin(), next.end(), std::nullopt);
            for (std::size_t v = 0; v < V; ++v) {
                if (!cur[v]) continue;
                for (const auto& [h, e] : g.out[v]) {
                    FieldValue w = *cur[v] + f.at(e.substr(0, static_cast<std::size_t>(window)));
                    auto& slot = next[static_cast<std::size_t>(h)];
                    if (!slot || (maximize ? w > *slot : w < *slot)) slot = w;
                }
            }
            cur.swap(next);
            if (cur[s]) {
                FieldValue mean = *cur[s] / FieldValue(static_cast<long>(len));
                if (!best || (maximize ? mean > *best : mean < *best)) best = mean;
            }
        }
    }
    return *best;
}

/// min |k a + l b| > 0 over 0 < |k|, |l| <= K (rational a, b).
inline Rational lattice_min(const Rational& a, const Rational& b, int K) {
    std::optional<Rational> best;
    for (int k = -K; k <= K; ++k)
        for (int l = -K; l <= K; ++l) {
            if (k == 0 && l == 0) continue;
            Rational v = a * k + b * l;
            if (v < 0) v = -v;
            if (v == 0) continue;
            if (!best || v < *best) best = v;
        }
    return *best;
}

}  // namespace oracle
