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

#include "birkhoff/meanpath.hpp"

#include <algorithm>

namespace birkhoff {

namespace {

struct KarpTable {
    std::vector<std::vector<std::optional<FieldValue>>> dist;  // [k][v]
    std::vector<std::vector<std::size_t>> pred;                // edge into v at step k
};

KarpTable karp_table(const DeBruijnGraph& g, const std::vector<FieldValue>& weights) {
    const std::size_t V = g.vertices.size();
    KarpTable t;
    t.dist.assign(V + 1, std::vector<std::optional<FieldValue>>(V));
    t.pred.assign(V + 1, std::vector<std::size_t>(V, 0));
    for (std::size_t v = 0; v < V; ++v) t.dist[0][v] = FieldValue(0);
    for (std::size_t k = 1; k <= V; ++k) {
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            const auto& edge = g.edges[e];
            const auto& from = t.dist[k - 1][edge.tail];
            if (!from) continue;
            FieldValue cand = *from + weights[e];
            auto& slot = t.dist[k][edge.head];
            // Strict improvement only: ties keep the lexicographically smaller edge.
            if (!slot || cand < *slot) {
                slot = std::move(cand);
                t.pred[k][edge.head] = e;
            }
        }
    }
    return t;
}

// Lowest simple cycle on the length-V walk ending at v. Every cycle on that
// walk has the optimal mean.
std::vector<std::size_t> cycle_on_walk(const DeBruijnGraph& g, const KarpTable& t, std::size_t v) {
    const std::size_t V = g.vertices.size();
    std::vector<std::size_t> walk_edges(V);  // walk_edges[k-1] enters step k
    std::vector<std::size_t> walk_vertices(V + 1);
    walk_vertices[V] = v;
    std::size_t cur = v;
    for (std::size_t k = V; k >= 1; --k) {
        std::size_t e = t.pred[k][cur];
        walk_edges[k - 1] = e;
        cur = g.edges[e].tail;
        walk_vertices[k - 1] = cur;
    }
    // First closing position j with its most recent earlier occurrence i.
    std::vector<long> last_seen(V, -1);
    for (std::size_t j = 0; j <= V; ++j) {
        auto x = walk_vertices[j];
        if (last_seen[x] >= 0) {
            auto i = static_cast<std::size_t>(last_seen[x]);
            return {walk_edges.begin() + static_cast<long>(i), walk_edges.begin() + static_cast<long>(j)};
        }
        last_seen[x] = static_cast<long>(j);
    }
    throw Error(ErrorCode::Internal, "length-V walk without a repeated vertex");
}

}  // namespace

MeanCycleResult extremal_mean_cycle(const Sft& sft, const Observable& f, Extremum mode) {
    if (!f.is_exact()) throw Error(ErrorCode::InvalidInput, "extremal mean cycle requires an exact-mode observable");
    auto g = DeBruijnGraph::build(sft, f.window());
    auto weights = edge_weights(g, f);
    if (mode == Extremum::Max)
        for (auto& w : weights) w = -w;
    const std::size_t V = g.vertices.size();
    auto t = karp_table(g, weights);

    std::optional<FieldValue> best;
    std::size_t best_vertex = 0;
    for (std::size_t v = 0; v < V; ++v) {
        if (!t.dist[V][v]) continue;
        std::optional<FieldValue> worst;
        for (std::size_t k = 0; k < V; ++k) {
            if (!t.dist[k][v]) continue;
            FieldValue ratio = (*t.dist[V][v] - *t.dist[k][v]) / FieldValue(static_cast<long>(V - k));
            if (!worst || ratio > *worst) worst = std::move(ratio);
        }
        if (worst && (!best || *worst < *best)) {
            best = std::move(worst);
            best_vertex = v;
        }
    }
    if (!best) throw Error(ErrorCode::Internal, "no cycle in the higher-block graph");

    auto cycle = cycle_on_walk(g, t, best_vertex);
    auto orbit = PeriodicOrbit::from_word(sft, g.cycle_word(cycle));
    FieldValue value = mode == Extremum::Max ? -*best : *best;
    FieldValue check = birkhoff_sum(orbit, f) / FieldValue(orbit.period());
    if (check != value) throw Error(ErrorCode::Internal, "mean-cycle witness does not reproduce the optimum");
    return {std::move(value), std::move(orbit)};
}

AverageDensity average_spectrum_density(const Sft& sft, const Observable& f, int n_max, int bins,
                                        const EnumerationOptions& options) {
    if (bins < 1) throw Error(ErrorCode::InvalidInput, "bins ≥ 1 required");
    AverageDensity out;
    out.m = extremal_mean_cycle(sft, f, Extremum::Min).value;
    out.M = extremal_mean_cycle(sft, f, Extremum::Max).value;
    auto report = spectrum(sft, f, n_max, options);
    out.orbit_count = report.entries.size();
    std::vector<FieldValue> averages;
    for (const auto& e : report.entries) averages.push_back(e.average);
    std::sort(averages.begin(), averages.end());
    averages.erase(std::unique(averages.begin(), averages.end()), averages.end());
    if (out.m == out.M) {
        out.degenerate = true;
        out.probe.lo = out.m;
        out.probe.hi = out.M;
        out.probe.edges = {out.m, out.M};
        out.probe.counts = {averages.size()};
        out.probe.hits = averages.size();
        out.probe.widest_gap = {out.m, out.m};
        return out;
    }
    out.probe = density_probe(averages, out.m, out.M, bins, false);
    return out;
}

MeanGapWitness mean_gap_certificate(const Sft& sft, const Observable& f, const FieldValue& a, const FieldValue& b,
                                    int period_cap, const EnumerationOptions& options) {
    auto m = extremal_mean_cycle(sft, f, Extremum::Min).value;
    auto M = extremal_mean_cycle(sft, f, Extremum::Max).value;
    if (!(m <= a && a < b && b <= M))
        throw Error(ErrorCode::PreconditionFailed, "mean gap search requires m(f) <= a < b <= M(f); here m(f) = " +
                                                       m.to_string() + ", M(f) = " + M.to_string());
    for (int n = 1; n <= period_cap; ++n) {
        for (auto& o : orbits_of_period(sft, n, options)) {
            FieldValue avg = birkhoff_sum(o, f) / FieldValue(n);
            if (a < avg && avg < b) return {std::move(o), std::move(avg), n};
        }
    }
    throw Error(ErrorCode::BudgetExceeded, "no orbit average in (" + a.to_string() + ", " + b.to_string() +
                                               ") up to period " + std::to_string(period_cap));
}

}  // namespace birkhoff
