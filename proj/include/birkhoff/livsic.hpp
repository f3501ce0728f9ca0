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

#include "birkhoff/meanpath.hpp"

#include <map>

namespace birkhoff {

/// Transfer function on higher-block vertices: f(e) = u(head) - u(tail) for
/// every edge. The root (lexicographically least vertex) carries u = 0.
struct CoboundaryCertificate {
    int block = 2;
    std::map<Word, FieldValue> potential;
    bool verified = false;
};

struct ViolatingCycle {
    PeriodicOrbit orbit;
    FieldValue sum;
};

struct CoboundaryResult {
    std::optional<CoboundaryCertificate> certificate;
    std::optional<ViolatingCycle> violation;
    bool is_coboundary() const { return certificate.has_value(); }
};

CoboundaryResult solve_coboundary(const Sft& sft, const Observable& f);

/// Independent edge-by-edge check of a certificate against f.
bool verify_certificate(const Sft& sft, const Observable& f, const CoboundaryCertificate& cert);

struct ConstantCohomology {
    bool cohomologous = false;
    FieldValue constant;
    std::optional<CoboundaryCertificate> certificate;
    // When not cohomologous: cycles with distinct averages.
    std::optional<MeanCycleResult> low;
    std::optional<MeanCycleResult> high;
};

ConstantCohomology cohomologous_to_constant(const Sft& sft, const Observable& f);

struct BoundednessVerdict {
    bool coboundary = false;
    std::optional<CoboundaryCertificate> certificate;
    std::optional<ViolatingCycle> violation;
    std::vector<GrowthPoint> growth;
};

BoundednessVerdict bounded_spectrum_verdict(const Sft& sft, const Observable& f, int n_max,
                                            const EnumerationOptions& options = {});

struct SmallSumsStep {
    FieldValue epsilon;
    int period_bound = 0;  // largest n with n^2 * epsilon <= 1, capped
};

struct SmallSumsResult {
    bool consistent = true;
    std::vector<SmallSumsStep> schedule;
    // First failing step and the first orbit (by period, word) violating it.
    std::optional<PeriodicOrbit> violation;
    FieldValue violation_sum;
    FieldValue violation_epsilon;
    bool coboundary_confirmed = false;
};

/// Checks |S(p)| <= eps_j for every orbit with tau_p <= eps_j^{-1/2}, along
/// the schedule eps_j = eps / j^2, until the period bound reaches period_cap.
/// A consistent run is cross-checked against solve_coboundary.
SmallSumsResult small_sums_check(const Sft& sft, const Observable& f, const FieldValue& epsilon, int period_cap = 12,
                                 const EnumerationOptions& options = {});

}  // namespace birkhoff
