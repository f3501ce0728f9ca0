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

#include "birkhoff/gluing.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <thread>

namespace birkhoff {

namespace {

Word cyclic_window(std::string_view word, std::size_t start, std::size_t w) {
    Word out(w, '0');
    for (std::size_t j = 0; j < w; ++j) out[j] = word[(start + j) % word.size()];
    return out;
}

// Block containing a window start, with the periodic word it follows.
struct Block {
    std::size_t begin;
    std::size_t end;
    std::string_view period;
    int part;
};

std::vector<Block> blocks_of(const GluedOrbit& z) {
    const std::size_t tp = z.p.word().size();
    const std::size_t tq = z.q.word().size();
    const std::size_t pa = static_cast<std::size_t>(z.m) * tp;
    const std::size_t qs = z.q_start();
    const std::size_t half = static_cast<std::size_t>(z.n) * tq;
    const std::size_t pb = z.p_tail_start();
    return {{0, pa, z.p.word(), 0},
            {qs, qs + half, z.q.word(), 1},
            {qs + half, qs + 2 * half, z.q.word(), 2},
            {pb, pb + pa, z.p.word(), 3}};
}

// Calls on_block(part, i, actual, reference, distance_to_block_end) for block
// windows and on_bridge(i, actual) for windows starting in a bridge.
// The q block halves share one periodic phase origin.
template <class OnBlock, class OnBridge>
void walk_windows(const GluedOrbit& z, std::size_t w, OnBlock on_block, OnBridge on_bridge) {
    auto blocks = blocks_of(z);
    const std::size_t qs = z.q_start();
    auto in_bridge = [&](std::size_t i) {
        return (i >= blocks[0].end && i < qs) || (i >= blocks[2].end && i < blocks[3].begin);
    };
    for (std::size_t i = 0; i < z.word.size(); ++i) {
        Word actual = cyclic_window(z.word, i, w);
        if (in_bridge(i)) {
            on_bridge(i, actual);
            continue;
        }
        for (const auto& b : blocks) {
            if (i < b.begin || i >= b.end) continue;
            std::size_t origin = (b.part == 1 || b.part == 2) ? qs : b.begin;
            std::size_t phase = (i - origin) % b.period.size();
            std::size_t block_end = b.part == 1 ? blocks[2].end : b.end;
            Word reference = cyclic_window(b.period, phase, w);
            on_block(b.part, i, actual, reference, block_end - i);
            break;
        }
    }
}

}  // namespace

Word bridge_between(const Sft& sft, char last, char first, int max_len) {
    const int n = sft.alphabet_size();
    int a = symbol_index(last), b = symbol_index(first);
    if (a < 0 || a >= n || b < 0 || b >= n) throw Error(ErrorCode::InvalidInput, "bridge endpoint outside the alphabet");
    if (sft.allowed(a, b)) return {};
    if (max_len <= 0) max_len = n;
    // BFS over intermediate symbols; parent[s] is the previous symbol on the path.
    std::vector<int> parent(static_cast<std::size_t>(n), -2), depth(static_cast<std::size_t>(n), 0);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        if (sft.allowed(a, s)) {
            parent[static_cast<std::size_t>(s)] = -1;
            depth[static_cast<std::size_t>(s)] = 1;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        if (depth[static_cast<std::size_t>(s)] > max_len) break;
        if (sft.allowed(s, b)) {
            Word out;
            for (int x = s; x != -1; x = parent[static_cast<std::size_t>(x)]) out.push_back(symbol_char(x));
            std::reverse(out.begin(), out.end());
            return out;
        }
        for (int t = 0; t < n; ++t) {
            if (sft.allowed(s, t) && parent[static_cast<std::size_t>(t)] == -2) {
                parent[static_cast<std::size_t>(t)] = s;
                depth[static_cast<std::size_t>(t)] = depth[static_cast<std::size_t>(s)] + 1;
                queue.push_back(t);
            }
        }
    }
    throw Error(ErrorCode::Internal, "no bridge of length ≤ " + std::to_string(max_len) + " in a strongly connected shift");
}

Word bridge_word(const Sft& sft, const PeriodicOrbit& from, const PeriodicOrbit& to, int max_len) {
    return bridge_between(sft, from.word().back(), to.word().front(), max_len);
}

GluedOrbit glue_orbits(const Sft& sft, const PeriodicOrbit& p, const PeriodicOrbit& q, int m, int n) {
    if (m < 1 || n < 1) throw Error(ErrorCode::PreconditionFailed, "m, n ≥ 1 required");
    if (p == q) throw Error(ErrorCode::PreconditionFailed, "p and q must be distinct orbits");
    GluedOrbit z{p, q, bridge_word(sft, p, q), bridge_word(sft, q, p), m, n, {}, 0, false};
    for (int i = 0; i < m; ++i) z.word += p.word();
    z.word += z.bridge_in;
    for (int i = 0; i < 2 * n; ++i) z.word += q.word();
    z.word += z.bridge_out;
    for (int i = 0; i < m; ++i) z.word += p.word();
    if (!sft.cyclically_admissible(z.word)) throw Error(ErrorCode::Internal, "glued word is not admissible");
    z.total_period = z.word.size();
    z.primitive = is_primitive(z.word);
    return z;
}

bool stabilized(const PeriodicOrbit& p, const PeriodicOrbit& q, int m, int n, int window) {
    return static_cast<long>(m) * p.period() >= window && static_cast<long>(n) * q.period() >= window;
}

CorrectionTerm correction_H(const GluedOrbit& z, const Observable& f) {
    if (!f.is_exact()) throw Error(ErrorCode::InvalidInput, "exact correction term requires an exact-mode observable");
    if (!stabilized(z.p, z.q, z.m, z.n, f.window()))
        throw Error(ErrorCode::StabilizationNotReached,
                    "m tau_p ≥ w and n tau_q ≥ w required (m = " + std::to_string(z.m) + ", n = " +
                        std::to_string(z.n) + ", w = " + std::to_string(f.window()) + ")");
    CorrectionTerm out;
    const auto w = static_cast<std::size_t>(f.window());
    walk_windows(
        z, w,
        [&](int part, std::size_t, const Word& actual, const Word& reference, std::size_t) {
            if (actual != reference) out.parts[static_cast<std::size_t>(part)] += f.value(actual) - f.value(reference);
        },
        [&](std::size_t, const Word& actual) { out.bridges += f.value(actual); });
    for (const auto& h : out.parts) out.H += h;
    return out;
}

CorrectionTerm correction_H(const Sft& sft, const Observable& f, const PeriodicOrbit& p, const PeriodicOrbit& q,
                            int m, int n) {
    if (!stabilized(p, q, m, n, f.window()))
        throw Error(ErrorCode::StabilizationNotReached,
                    "m tau_p ≥ w and n tau_q ≥ w required (m = " + std::to_string(m) + ", n = " + std::to_string(n) +
                        ", w = " + std::to_string(f.window()) + ")");
    return correction_H(glue_orbits(sft, p, q, m, n), f);
}

bool GluingTable::exact_in_regime() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const GluingRow& r) { return r.status != RowStatus::Stabilized || r.residual.is_zero(); });
}

GluingTable verify_gluing_estimate(const Sft& sft, const Observable& f, const PeriodicOrbit& p,
                                   const PeriodicOrbit& q, const Rational& beta, int n_lo, int n_hi,
                                   unsigned threads) {
    if (n_lo < 1 || n_hi < n_lo) throw Error(ErrorCode::InvalidInput, "1 ≤ n_lo ≤ n_hi required");
    if (beta <= 0) throw Error(ErrorCode::InvalidInput, "beta > 0 required");
    const int w = f.window();
    GluingTable table;
    table.Sp = birkhoff_sum(p, f);
    table.Sq = birkhoff_sum(q, f);
    int m_star = (w + p.period() - 1) / p.period();
    int n_star = (w + q.period() - 1) / q.period();
    table.H = correction_H(sft, f, p, q, m_star, n_star).H;

    table.rows.resize(static_cast<std::size_t>(n_hi - n_lo + 1));
    auto fill = [&](std::size_t idx) {
        GluingRow& row = table.rows[idx];
        row.n = n_lo + static_cast<int>(idx);
        Rational bn = beta * row.n;
        Integer m;
        mpz_fdiv_q(m.get_mpz_t(), bn.get_num_mpz_t(), bn.get_den_mpz_t());
        row.m = static_cast<int>(m.get_si());
        if (row.m < 1) return;
        auto z = glue_orbits(sft, p, q, row.m, row.n);
        row.status = stabilized(p, q, row.m, row.n, w) ? RowStatus::Stabilized : RowStatus::PreStabilization;
        row.S = cyclic_sum(z.word, f);
        FieldValue bridges;
        for (std::size_t i = 0; i < z.bridge_in.size(); ++i)
            bridges += f.value(cyclic_window(z.word, static_cast<std::size_t>(row.m) * p.word().size() + i,
                                             static_cast<std::size_t>(w)));
        for (std::size_t i = 0; i < z.bridge_out.size(); ++i)
            bridges += f.value(cyclic_window(z.word, z.p_tail_start() - z.bridge_out.size() + i,
                                             static_cast<std::size_t>(w)));
        row.predicted = FieldValue(2L * row.m) * table.Sp + FieldValue(2L * row.n) * table.Sq + table.H + bridges;
        row.residual = row.S - row.predicted;
    };
    unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(table.rows.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < table.rows.size(); ++i) fill(i);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < table.rows.size(); i += workers) fill(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    return table;
}

double window_distance(std::string_view u, std::string_view v) {
    double d = 0.0, scale = 1.0;
    for (std::size_t k = 0; k < u.size() && k < v.size(); ++k, scale /= 2)
        if (u[k] != v[k]) d += scale;
    return d;
}

double lipschitz_constant(const Sft& sft, const Observable& f) {
    auto words = sft.admissible_words(f.window());
    double C = 0.0;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            C = std::max(C, std::fabs(f.float_value(words[i]) - f.float_value(words[j])) /
                                window_distance(words[i], words[j]));
    return C;
}

FloatGluingTable verify_gluing_estimate_float(const Sft& sft, const Observable& f, const PeriodicOrbit& p,
                                              const PeriodicOrbit& q, const Rational& beta, int n_lo, int n_hi,
                                              int depth) {
    if (n_lo < 1 || n_hi < n_lo) throw Error(ErrorCode::InvalidInput, "1 ≤ n_lo ≤ n_hi required");
    if (depth < 0) throw Error(ErrorCode::InvalidInput, "depth ≥ 0 required");
    constexpr double u = std::numeric_limits<double>::epsilon();
    FloatGluingTable table;
    table.lipschitz = lipschitz_constant(sft, f);
    table.depth = depth;
    const auto w = static_cast<std::size_t>(f.window());
    auto Sp = cyclic_sum_float(p.word(), f);
    auto Sq = cyclic_sum_float(q.word(), f);
    const double tail = 4.0 * table.lipschitz * std::ldexp(1.0, 1 - depth);
    for (int n = n_lo; n <= n_hi; ++n) {
        Rational bn = beta * n;
        Integer mz;
        mpz_fdiv_q(mz.get_mpz_t(), bn.get_num_mpz_t(), bn.get_den_mpz_t());
        int m = static_cast<int>(mz.get_si());
        if (m < 1 || !stabilized(p, q, m, n, f.window())) continue;
        auto z = glue_orbits(sft, p, q, m, n);
        auto S = cyclic_sum_float(z.word, f);
        double H = 0.0, bridges = 0.0, mass = 0.0;
        std::size_t terms = 0;
        walk_windows(
            z, w,
            [&](int, std::size_t, const Word& actual, const Word& reference, std::size_t to_end) {
                if (to_end > static_cast<std::size_t>(depth) || actual == reference) return;
                double dv = f.float_value(actual) - f.float_value(reference);
                H += dv;
                mass += std::fabs(dv);
                terms += 2;
            },
            [&](std::size_t, const Word& actual) {
                double v = f.float_value(actual);
                bridges += v;
                mass += std::fabs(v);
                ++terms;
            });
        FloatGluingRow row;
        row.n = n;
        row.m = m;
        row.S = S.value;
        row.predicted = 2.0 * m * Sp.value + 2.0 * n * Sq.value + H + bridges;
        row.residual = row.S - row.predicted;
        row.tail_bound = tail;
        // Summation error of each piece plus the final combination.
        double combined = std::fabs(2.0 * m * Sp.value) + std::fabs(2.0 * n * Sq.value) + std::fabs(H) +
                          std::fabs(bridges) + std::fabs(row.S);
        row.rounding_bound = S.error_bound + 2.0 * m * Sp.error_bound + 2.0 * n * Sq.error_bound +
                             static_cast<double>(terms + 1) * u * mass + 8.0 * u * combined;
        table.rows.push_back(row);
    }
    return table;
}

HitResult hit_target(const Sft& sft, const Observable& f, const FieldValue& A, const Rational& eps, int horizon,
                     const EnumerationOptions& options) {
    if (!f.is_exact()) throw Error(ErrorCode::InvalidInput, "targeting requires an exact-mode observable");
    if (A.sign() <= 0) throw Error(ErrorCode::PreconditionFailed, "target A > 0 required");
    if (eps <= 0) throw Error(ErrorCode::PreconditionFailed, "eps > 0 required");
    auto report = spectrum(sft, f, horizon, options);
    for (const auto& e : report.entries)
        if (e.sum.sign() < 0)
            throw Error(ErrorCode::PreconditionFailed, "spectrum is not concentrated on [0, +inf): S(" +
                                                           e.orbit.word() + ") < 0");
    const FieldValue E(eps, Rational(0), A.radicand());
    const FieldValue lo = A - FieldValue(2) * E, hi = A + FieldValue(2) * E;
    const FieldValue fifth = E / FieldValue(5);
    const int w = f.window();

    std::vector<const SpectrumEntry*> small;
    bool zero_seen = false;
    for (const auto& e : report.entries) {
        if (e.sum.is_zero()) zero_seen = true;
        else if (e.sum < E / FieldValue(10)) small.push_back(&e);
    }

    for (std::size_t iq = 0; iq < small.size(); ++iq) {
        for (std::size_t ip = 0; ip < small.size(); ++ip) {
            if (ip == iq) continue;
            const auto& q = *small[iq];
            const auto& p = *small[ip];
            Integer n0z;
            {
                FieldValue ratio = A / (FieldValue(2) * q.sum);
                n0z = ratio.floor();
            }
            if (n0z < 1 || n0z * q.orbit.period() < w || n0z > std::numeric_limits<int>::max() / 4) continue;
            int n0 = static_cast<int>(n0z.get_si());
            FieldValue r = A - FieldValue(2L * n0) * q.sum;
            int m0 = std::max(1, (w + p.orbit.period() - 1) / p.orbit.period());
            while (FieldValue(2L * m0) * p.sum < r + fifth) ++m0;
            FieldValue deterministic = FieldValue(2L * n0) * q.sum + FieldValue(2L * m0) * p.sum;
            if (!(A + fifth <= deterministic && deterministic < A + FieldValue(2) * fifth)) continue;
            auto z = glue_orbits(sft, p.orbit, q.orbit, m0, n0);
            if (!z.primitive) continue;
            auto corr = correction_H(z, f);
            FieldValue S = cyclic_sum(z.word, f);
            if (S != deterministic + corr.H + corr.bridges)
                throw Error(ErrorCode::Internal, "glued sum disagrees with its decomposition");
            if (!(lo < S && S < hi)) continue;
            HitResult out{HitMethod::Glued, PeriodicOrbit::from_word(sft, z.word), z.word, S, horizon,
                          p.orbit, q.orbit, m0, n0, deterministic, corr.H, corr.bridges};
            return out;
        }
    }
    if (zero_seen) {
        for (const auto& e : report.entries) {
            if (lo < e.sum && e.sum < hi) {
                HitResult out{HitMethod::Direct, e.orbit, e.orbit.word(), e.sum, horizon,
                              std::nullopt, std::nullopt, 0, 0, FieldValue(0), FieldValue(0), FieldValue(0)};
                return out;
            }
        }
    }
    throw Error(ErrorCode::NotFound, "no orbit with S in (A - 2 eps, A + 2 eps) witnessed up to period " +
                                         std::to_string(horizon) +
                                         (zero_seen ? "" : "; 0 is not in the spectrum at this horizon"));
}

}  // namespace birkhoff
