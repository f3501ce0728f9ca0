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

#include "birkhoff/core.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace birkhoff {

struct EnumerationOptions {
    std::size_t orbit_cap = 10'000'000;
    unsigned threads = 1;
};

/// All primitive admissible cyclic words of period <= n_max, canonical
/// rotation, sorted by (period, word). Throws BudgetExceeded past the cap.
std::vector<PeriodicOrbit> enumerate_primitive_orbits(const Sft& sft, int n_max,
                                                      const EnumerationOptions& options = {});

/// Primitive orbits of period exactly n.
std::vector<PeriodicOrbit> orbits_of_period(const Sft& sft, int n, const EnumerationOptions& options = {});

/// Sum of f over the m cyclic windows of a cyclic word (windows wrap).
/// The word need not be primitive, which is how powers are evaluated.
FieldValue cyclic_sum(std::string_view cyclic_word, const Observable& f);
FieldValue birkhoff_sum(const PeriodicOrbit& orbit, const Observable& f);

/// Float-mode sum with a bound on accumulated rounding error.
struct FloatSum {
    double value = 0.0;
    double error_bound = 0.0;
};
FloatSum cyclic_sum_float(std::string_view cyclic_word, const Observable& f);

struct SpectrumEntry {
    PeriodicOrbit orbit;
    FieldValue sum;
    FieldValue average;
};

struct GrowthPoint {
    int period = 0;
    FieldValue max_abs;      // max |S| over primitive orbits of this period
    FieldValue running_max;  // max |S| over primitive orbits of period <= this
    std::size_t orbit_count = 0;
};

struct SpectrumReport {
    int period_bound = 0;
    std::vector<SpectrumEntry> entries;     // sorted by (period, word)
    std::vector<FieldValue> distinct_values;  // ascending
    std::vector<GrowthPoint> growth;        // one point per period 1..period_bound
};

SpectrumReport spectrum(const Sft& sft, const Observable& f, int n_max, const EnumerationOptions& options = {});
/// Assembles a report from precomputed orbits (used by the flow reduction and tests).
SpectrumReport make_report(const std::vector<PeriodicOrbit>& orbits, const Observable& f, int n_max);

/// Necklace identity: sum_{d | n} d * #primitive(d) == trace(A^n), exact.
struct TraceCheck {
    int period = 0;
    Integer necklace_side;
    Integer trace;
    bool ok() const { return necklace_side == trace; }
};
std::vector<TraceCheck> trace_check(const Sft& sft, const SpectrumReport& report);
Integer transition_trace(const Sft& sft, int n);

enum class Verdict { Dispersed, Concentrated };

struct Classification {
    Verdict verdict = Verdict::Concentrated;
    std::optional<PeriodicOrbit> positive_witness;
    std::optional<PeriodicOrbit> negative_witness;
    int sign = 0;  // concentrated: +1 all sums >= 0, -1 all <= 0, 0 all zero
    int horizon = 0;
    bool definitive = false;  // only dispersed verdicts are definitive
};

Classification classify_observable(const SpectrumReport& report);

enum class ArithmeticKind { Arithmetic, NonArithmetic, Inconclusive };

struct ArithmeticVerdict {
    ArithmeticKind kind = ArithmeticKind::Inconclusive;
    FieldValue generator;  // largest c > 0 with every sum in cZ; 0 for the all-zero spectrum
    bool zero_generator = false;
    std::optional<PeriodicOrbit> witness_a;  // non-arithmetic: S(a)/S(b) irrational
    std::optional<PeriodicOrbit> witness_b;
    int horizon = 0;
    bool definitive = false;
};

ArithmeticVerdict arithmetic_test(const SpectrumReport& report);

std::vector<GrowthPoint> spectrum_growth(const SpectrumReport& report);

struct Gap {
    FieldValue lo;
    FieldValue hi;
    FieldValue width() const { return hi - lo; }
};

struct DensityProbe {
    FieldValue lo;
    FieldValue hi;
    bool open = false;
    std::vector<FieldValue> edges;        // bins + 1 edges
    std::vector<std::size_t> counts;     // distinct values per bin
    std::size_t hits = 0;
    Gap widest_gap;                      // widest sub-interval containing no value
};

/// Bins are [e_i, e_{i+1}) with the last bin closed; `open` drops values
/// equal to lo or hi.
DensityProbe density_probe(const std::vector<FieldValue>& values, const FieldValue& lo, const FieldValue& hi,
                           int bins, bool open = false);
DensityProbe density_probe(const SpectrumReport& report, const FieldValue& lo, const FieldValue& hi, int bins,
                           bool open = false);

struct FlowEntry {
    PeriodicOrbit orbit;
    FieldValue flow_period;  // Birkhoff sum of the roof
    FieldValue integral;     // Birkhoff sum of the fiber-integrated observable
};

std::vector<FlowEntry> flow_spectrum(const Sft& sft, const Observable& f_reduced, const Roof& roof, int n_max,
                                     const EnumerationOptions& options = {});

// ---------------------------------------------------------------------------
// Higher-block (de Bruijn) presentation

/// Vertices are admissible words of length W-1, edges admissible words of
/// length W, with W = max(window, 2) so that SFT adjacency is encoded even
/// for window-1 observables. Both lists are lexicographically sorted.
struct DeBruijnGraph {
    struct Edge {
        std::size_t tail = 0;
        std::size_t head = 0;
        Word word;
    };

    int block = 2;  // W
    std::vector<Word> vertices;
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> out_edges;
    std::vector<std::vector<std::size_t>> in_edges;

    static DeBruijnGraph build(const Sft& sft, int window);
    std::size_t vertex_index(std::string_view word) const;

    /// Symbol word of a closed walk given by its edges.
    Word cycle_word(const std::vector<std::size_t>& edge_cycle) const;
};

/// Exact edge weights: f evaluated on the first `window` symbols of each edge word.
std::vector<FieldValue> edge_weights(const DeBruijnGraph& g, const Observable& f);

}  // namespace birkhoff
