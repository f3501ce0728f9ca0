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

#include "birkhoff/livsic.hpp"

#include <algorithm>
#include <deque>

namespace birkhoff {

namespace {

ViolatingCycle violating_cycle(const Sft& sft, const Observable& f) {
    auto hi = extremal_mean_cycle(sft, f, Extremum::Max);
    if (hi.value.sign() > 0) {
        FieldValue s = birkhoff_sum(hi.witness, f);
        return {std::move(hi.witness), std::move(s)};
    }
    auto lo = extremal_mean_cycle(sft, f, Extremum::Min);
    if (lo.value.sign() < 0) {
        FieldValue s = birkhoff_sum(lo.witness, f);
        return {std::move(lo.witness), std::move(s)};
    }
    throw Error(ErrorCode::Internal, "tree integration failed but every cycle mean is zero");
}

}  // namespace

CoboundaryResult solve_coboundary(const Sft& sft, const Observable& f) {
    if (!f.is_exact()) throw Error(ErrorCode::InvalidInput, "coboundary solving requires an exact-mode observable");
    auto g = DeBruijnGraph::build(sft, f.window());
    auto weights = edge_weights(g, f);
    const std::size_t V = g.vertices.size();

    std::vector<std::optional<FieldValue>> u(V);
    std::vector<std::vector<std::size_t>> incident(V);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        incident[g.edges[e].tail].push_back(e);
        if (g.edges[e].head != g.edges[e].tail) incident[g.edges[e].head].push_back(e);
    }
    for (auto& list : incident) std::sort(list.begin(), list.end());

    u[0] = FieldValue(0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto e : incident[v]) {
            const auto& edge = g.edges[e];
            if (!u[edge.head]) {
                u[edge.head] = *u[edge.tail] + weights[e];
                queue.push_back(edge.head);
            } else if (!u[edge.tail]) {
                u[edge.tail] = *u[edge.head] - weights[e];
                queue.push_back(edge.tail);
            }
        }
    }

    bool ok = true;
    for (std::size_t e = 0; e < g.edges.size() && ok; ++e) {
        const auto& edge = g.edges[e];
        if (!u[edge.head] || !u[edge.tail]) throw Error(ErrorCode::Internal, "higher-block graph is disconnected");
        ok = weights[e] == *u[edge.head] - *u[edge.tail];
    }

    CoboundaryResult out;
    if (!ok) {
        out.violation = violating_cycle(sft, f);
        return out;
    }
    CoboundaryCertificate cert;
    cert.block = g.block;
    for (std::size_t v = 0; v < V; ++v) cert.potential.emplace(g.vertices[v], *u[v]);
    cert.verified = verify_certificate(sft, f, cert);
    if (!cert.verified) throw Error(ErrorCode::Internal, "certificate failed its own verification");
    out.certificate = std::move(cert);
    return out;
}

bool verify_certificate(const Sft& sft, const Observable& f, const CoboundaryCertificate& cert) {
    int W = std::max(f.window(), 2);
    if (cert.block != W) return false;
    for (const auto& word : sft.admissible_words(W)) {
        auto tail = cert.potential.find(word.substr(0, word.size() - 1));
        auto head = cert.potential.find(word.substr(1));
        if (tail == cert.potential.end() || head == cert.potential.end()) return false;
        FieldValue fe = f.value(std::string_view(word).substr(0, static_cast<std::size_t>(f.window())));
        if (fe != head->second - tail->second) return false;
    }
    return true;
}

ConstantCohomology cohomologous_to_constant(const Sft& sft, const Observable& f) {
    ConstantCohomology out;
    auto lo = extremal_mean_cycle(sft, f, Extremum::Min);
    auto hi = extremal_mean_cycle(sft, f, Extremum::Max);
    if (lo.value != hi.value) {
        out.low = std::move(lo);
        out.high = std::move(hi);
        return out;
    }
    out.constant = lo.value;
    auto solved = solve_coboundary(sft, f.shifted(out.constant));
    if (!solved.certificate) throw Error(ErrorCode::Internal, "equal cycle means but f - c is not a coboundary");
    out.cohomologous = true;
    out.certificate = std::move(solved.certificate);
    return out;
}

BoundednessVerdict bounded_spectrum_verdict(const Sft& sft, const Observable& f, int n_max,
                                            const EnumerationOptions& options) {
    BoundednessVerdict out;
    auto solved = solve_coboundary(sft, f);
    out.coboundary = solved.is_coboundary();
    out.certificate = std::move(solved.certificate);
    out.violation = std::move(solved.violation);
    out.growth = spectrum(sft, f, n_max, options).growth;
    return out;
}

SmallSumsResult small_sums_check(const Sft& sft, const Observable& f, const FieldValue& epsilon, int period_cap,
                                 const EnumerationOptions& options) {
    if (!epsilon.is_rational() || epsilon.sign() <= 0 || epsilon > FieldValue(1))
        throw Error(ErrorCode::InvalidInput, "epsilon must be a rational in (0, 1]");
    if (period_cap < 1) throw Error(ErrorCode::InvalidInput, "period cap ≥ 1 required");
    SmallSumsResult out;
    auto orbits = enumerate_primitive_orbits(sft, period_cap, options);
    std::vector<FieldValue> sums;
    sums.reserve(orbits.size());
    for (const auto& o : orbits) sums.push_back(birkhoff_sum(o, f));

    for (long j = 1;; ++j) {
        FieldValue eps_j = epsilon / FieldValue(j * j);
        int n = 0;
        while (n < period_cap && FieldValue((n + 1L) * (n + 1L)) * eps_j <= FieldValue(1)) ++n;
        out.schedule.push_back({eps_j, n});
        for (std::size_t i = 0; i < orbits.size() && orbits[i].period() <= n; ++i) {
            if (sums[i].abs() > eps_j) {
                out.consistent = false;
                out.violation = orbits[i];
                out.violation_sum = sums[i];
                out.violation_epsilon = eps_j;
                return out;
            }
        }
        if (n >= period_cap) break;
    }
    out.coboundary_confirmed = solve_coboundary(sft, f).is_coboundary();
    return out;
}

}  // namespace birkhoff
