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

namespace birkhoff {

enum class Extremum { Min, Max };

struct MeanCycleResult {
    FieldValue value;
    PeriodicOrbit witness;
};

/// Exact minimum (or maximum) cycle mean of the higher-block graph, which is
/// m(f) (or M(f)) for a locally constant f. Karp's recurrence over walk
/// lengths 0..V; the witness is a simple cycle, so its period is <= V.
MeanCycleResult extremal_mean_cycle(const Sft& sft, const Observable& f, Extremum mode);

struct AverageDensity {
    FieldValue m;
    FieldValue M;
    bool degenerate = false;  // m == M: a single bin holding every average
    DensityProbe probe;
    std::size_t orbit_count = 0;
};

/// Histogram of S/tau over primitive orbits of period <= n_max across [m(f), M(f)].
AverageDensity average_spectrum_density(const Sft& sft, const Observable& f, int n_max, int bins,
                                        const EnumerationOptions& options = {});

struct MeanGapWitness {
    PeriodicOrbit orbit;
    FieldValue average;
    int periods_searched = 0;
};

/// First orbit (by period, then word) whose average lies in the open
/// interval (a, b). Requires m(f) <= a < b <= M(f); periods are searched up
/// to period_cap, after which BudgetExceeded is thrown.
MeanGapWitness mean_gap_certificate(const Sft& sft, const Observable& f, const FieldValue& a, const FieldValue& b,
                                    int period_cap = 40, const EnumerationOptions& options = {});

}  // namespace birkhoff
