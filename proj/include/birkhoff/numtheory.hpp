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

#include <cstdint>
#include <functional>

namespace birkhoff {

/// a/b = l/k in lowest terms, k > 0.
struct RationalRelation {
    Integer l;
    Integer k;
};

RationalRelation rational_relation(const FieldValue& a, const FieldValue& b);

/// inf { |k a + l b| > 0 : k, l in Z } = |b / k| for a/b = l/k.
FieldValue lattice_gap(const FieldValue& a, const FieldValue& b);

struct IndependenceResult {
    bool independent = false;
    std::vector<Integer> denominators;  // k_n
    std::vector<FieldValue> gaps;       // |b / k_n|
    bool gaps_monotone = false;         // gaps non-increasing along the prefix
    // Dependent case: a_n = c * s_n, b = c * t with c = |b / K!|.
    Integer K;
    FieldValue scale;
    std::vector<Integer> s;
    Integer t;
};

/// Denominators count as unbounded on a finite prefix when the maximum over
/// its second half exceeds the maximum over its first half.
IndependenceResult asymptotic_independence(const std::vector<FieldValue>& seq, const FieldValue& b);

/// Rationals of (0, 1) in Stern-Brocot breadth-first order: 1/2, 1/3, 2/3, 1/4, 2/5, ...
class SternBrocot {
public:
    Rational next();

private:
    std::vector<Rational> level_;
    std::vector<Rational> frontier_{Rational(0), Rational(1)};
    std::size_t pos_ = 0;
};

/// Rational beta in (0, 1) with (a beta + b) / c_k irrational for every k.
Rational find_beta(const FieldValue& a, const FieldValue& b, const std::vector<FieldValue>& c_list,
                   std::size_t candidate_cap = 100'000);

using IntegerSet = std::vector<std::int64_t>;  // sorted, duplicate-free

struct PigeonholeResult {
    std::size_t index = 0;  // 0-based
    std::int64_t count = 0;
    Rational density;  // count / N
    Rational bound;    // (N - n0 + 1) / (m N)
};

PigeonholeResult pigeonhole_density(const std::vector<IntegerSet>& sets, std::int64_t n0, std::int64_t N);

/// First n in A (ascending) with frac(slope * n + theta) in [gamma/4, 1 - gamma/4].
std::int64_t equidist_witness(const FieldValue& slope, const FieldValue& theta, const IntegerSet& A,
                              const Rational& gamma);

/// Empirical density |T ∩ [1, max T]| / max T; 0 for an empty set.
Rational empirical_density(const IntegerSet& T);

using LatticeTable = std::function<Integer(std::int64_t n, const Integer& m)>;

struct DispersionWitness {
    std::int64_t n = 0;
    Integer m;           // floor(beta n)
    FieldValue residual; // c G(n, m) - (a m + b n) - A
};

DispersionWitness dispersion_witness(const FieldValue& a, const FieldValue& b, const FieldValue& c,
                                     const Rational& beta, const LatticeTable& G, const IntegerSet& T,
                                     const FieldValue& A, const FieldValue& delta);

struct NonArithmeticShift {
    FieldValue beta;
    PeriodicOrbit first;
    PeriodicOrbit second;
    FieldValue u;  // tau_1 (A_1 - beta)
    FieldValue v;  // tau_2 (A_2 - beta)
};

/// beta in the open interval (lo, hi) making the shifted sums u, v of two
/// orbits with distinct averages rationally independent. Rational beta are
/// tried first; when both averages are rational, candidates
/// lo + (hi - lo) frac(q alpha), q = 1, 2, ... are used instead.
NonArithmeticShift find_nonarithmetic_beta(const SpectrumReport& report, const FieldValue& lo, const FieldValue& hi,
                                           std::size_t candidate_cap = 10'000);

}  // namespace birkhoff
