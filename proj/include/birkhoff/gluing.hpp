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

#pragma once

#include "birkhoff/orbits.hpp"

#include <array>
#include <cmath>

namespace birkhoff {

/// Shortest word B with last -> B -> first admissible; empty when the
/// junction itself is allowed.
Word bridge_between(const Sft& sft, char last, char first, int max_len = 0);
Word bridge_word(const Sft& sft, const PeriodicOrbit& from, const PeriodicOrbit& to, int max_len = 0);

/// Cyclic word p^m B1 q^(2n) B2 p^m.
struct GluedOrbit {
    PeriodicOrbit p;
    PeriodicOrbit q;
    Word bridge_in;   // B1, p -> q
    Word bridge_out;  // B2, q -> p
    int m = 0;
    int n = 0;
    Word word;
    std::size_t total_period = 0;
    bool primitive = false;

    std::size_t q_start() const { return static_cast<std::size_t>(m) * p.word().size() + bridge_in.size(); }
    std::size_t p_tail_start() const { return q_start() + 2 * static_cast<std::size_t>(n) * q.word().size() + bridge_out.size(); }
};

GluedOrbit glue_orbits(const Sft& sft, const PeriodicOrbit& p, const PeriodicOrbit& q, int m, int n);

struct CorrectionTerm {
    FieldValue H;
    std::array<FieldValue, 4> parts;  // first p block, first and second halves of the q block, last p block
    FieldValue bridges;               // sums over windows starting inside B1 and B2
};

/// Windows starting in the p/q blocks compared against the periodic
/// reference window at the same phase; the sum of the differences is H.
CorrectionTerm correction_H(const Sft& sft, const Observable& f, const PeriodicOrbit& p, const PeriodicOrbit& q,
                            int m, int n);
CorrectionTerm correction_H(const GluedOrbit& z, const Observable& f);

/// True when m tau_p >= w and n tau_q >= w.
bool stabilized(const PeriodicOrbit& p, const PeriodicOrbit& q, int m, int n, int window);

enum class RowStatus { Stabilized, PreStabilization, Degenerate };

struct GluingRow {
    int n = 0;
    int m = 0;
    RowStatus status = RowStatus::Degenerate;  // Degenerate: m = 0, nothing glued
    FieldValue S;
    FieldValue predicted;  // 2m S(p) + 2n S(q) + H + bridges
    FieldValue residual;
};

struct GluingTable {
    FieldValue H;  // value in the stabilization regime
    FieldValue Sp;
    FieldValue Sq;
    std::vector<GluingRow> rows;
    bool exact_in_regime() const;
};

GluingTable verify_gluing_estimate(const Sft& sft, const Observable& f, const PeriodicOrbit& p,
                                   const PeriodicOrbit& q, const Rational& beta, int n_lo, int n_hi,
                                   unsigned threads = 1);

/// Float-mode pathway: H truncated to corrections within `depth` symbols of
/// each junction, with the omitted tail bounded by a Lipschitz estimate.
struct FloatGluingRow {
    int n = 0;
    int m = 0;
    double S = 0.0;
    double predicted = 0.0;
    double residual = 0.0;
    double tail_bound = 0.0;      // 4 sides * C * 2^(1 - depth)
    double rounding_bound = 0.0;
    bool within_bound() const { return std::fabs(residual) <= tail_bound + rounding_bound; }
};

struct FloatGluingTable {
    double lipschitz = 0.0;  // C = max |f(u) - f(v)| / d(u, v) over admissible windows
    int depth = 0;
    std::vector<FloatGluingRow> rows;
};

/// d(u, v) = sum_k 2^-k [u_k != v_k] over a window.
double window_distance(std::string_view u, std::string_view v);
double lipschitz_constant(const Sft& sft, const Observable& f);

FloatGluingTable verify_gluing_estimate_float(const Sft& sft, const Observable& f, const PeriodicOrbit& p,
                                              const PeriodicOrbit& q, const Rational& beta, int n_lo, int n_hi,
                                              int depth);

enum class HitMethod { Glued, Direct };

struct HitResult {
    HitMethod method = HitMethod::Glued;
    PeriodicOrbit orbit;  // primitive root of the glued word, or the direct witness
    Word word;            // the glued cyclic word itself
    FieldValue S;
    int horizon = 0;
    // Glued path only.
    std::optional<PeriodicOrbit> p;
    std::optional<PeriodicOrbit> q;
    int m0 = 0;
    int n0 = 0;
    FieldValue deterministic;  // 2 m0 S(p) + 2 n0 S(q)
    FieldValue H;
    FieldValue bridges;
};

/// Orbit with S in (A - 2 eps, A + 2 eps). Small positive sums (below eps/10)
/// at the horizon feed the glued construction. Without them, but with 0 in
/// the spectrum, a direct search over the horizon is reported instead.
HitResult hit_target(const Sft& sft, const Observable& f, const FieldValue& A, const Rational& eps, int horizon = 16,
                     const EnumerationOptions& options = {});

}  // namespace birkhoff
