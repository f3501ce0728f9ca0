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

#include "birkhoff/numtheory.hpp"

#include <algorithm>

namespace birkhoff {

namespace {

FieldValue field(const Rational& q, std::uint32_t radicand) { return FieldValue(q, Rational(0), radicand); }

Integer factorial(const Integer& K) {
    Integer out = 1;
    for (Integer i = 2; i <= K; ++i) out *= i;
    return out;
}

}  // namespace

RationalRelation rational_relation(const FieldValue& a, const FieldValue& b) {
    auto d = ratio_is_rational(a, b);
    if (!d.rational) throw Error(ErrorCode::IrrationalRatio, "a/b is irrational: " + a.to_string() + " / " + b.to_string());
    return {d.witness->get_num(), d.witness->get_den()};
}

FieldValue lattice_gap(const FieldValue& a, const FieldValue& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "b ≠ 0 required");
    auto rel = rational_relation(a, b);
    return (b / FieldValue(Rational(rel.k), Rational(0), b.radicand())).abs();
}

IndependenceResult asymptotic_independence(const std::vector<FieldValue>& seq, const FieldValue& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "b ≠ 0 required");
    if (seq.empty()) throw Error(ErrorCode::InvalidInput, "sequence must be nonempty");
    IndependenceResult out;
    std::vector<Integer> l;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        auto d = ratio_is_rational(seq[i], b);
        if (!d.rational)
            throw Error(ErrorCode::IrrationalRatio, "a_n/b is irrational at index " + std::to_string(i));
        out.denominators.push_back(d.witness->get_den());
        l.push_back(d.witness->get_num());
        out.gaps.push_back((b / field(Rational(d.witness->get_den()), b.radicand())).abs());
    }
    out.gaps_monotone = true;
    for (std::size_t i = 1; i < out.gaps.size(); ++i)
        if (out.gaps[i] > out.gaps[i - 1]) out.gaps_monotone = false;

    std::size_t split = (seq.size() + 1) / 2;
    Integer first = *std::max_element(out.denominators.begin(), out.denominators.begin() + static_cast<long>(split));
    Integer second = 0;
    for (std::size_t i = split; i < seq.size(); ++i) second = std::max(second, out.denominators[i]);
    out.independent = second > first;
    if (out.independent) return out;

    out.K = *std::max_element(out.denominators.begin(), out.denominators.end());
    Integer kf = factorial(out.K);
    int sb = b.sign();
    out.scale = (b / field(Rational(kf), b.radicand())).abs();
    for (std::size_t i = 0; i < seq.size(); ++i) out.s.push_back(Integer(kf / out.denominators[i]) * l[i] * sb);
    out.t = kf * sb;
    return out;
}

Rational SternBrocot::next() {
    if (pos_ == level_.size()) {
        std::vector<Rational> merged;
        level_.clear();
        merged.reserve(frontier_.size() * 2);
        for (std::size_t i = 0; i + 1 < frontier_.size(); ++i) {
            const auto& x = frontier_[i];
            const auto& y = frontier_[i + 1];
            Rational mediant(Integer(x.get_num() + y.get_num()), Integer(x.get_den() + y.get_den()));
            merged.push_back(x);
            merged.push_back(mediant);
            level_.push_back(mediant);
        }
        merged.push_back(frontier_.back());
        frontier_ = std::move(merged);
        pos_ = 0;
    }
    return level_[pos_++];
}

Rational find_beta(const FieldValue& a, const FieldValue& b, const std::vector<FieldValue>& c_list,
                   std::size_t candidate_cap) {
    if (a.sign() <= 0 || b.sign() <= 0) throw Error(ErrorCode::PreconditionFailed, "a, b > 0 required");
    if (ratio_is_rational(a, b).rational) throw Error(ErrorCode::PreconditionFailed, "a/b must be irrational");
    for (const auto& c : c_list)
        if (c.sign() <= 0) throw Error(ErrorCode::PreconditionFailed, "every c_k must be positive");
    SternBrocot order;
    for (std::size_t i = 0; i < candidate_cap; ++i) {
        Rational beta = order.next();
        FieldValue x = a * field(beta, a.radicand()) + b;
        bool good = std::all_of(c_list.begin(), c_list.end(), [&](const FieldValue& c) { return !(x / c).is_rational(); });
        if (good) return beta;
    }
    throw Error(ErrorCode::BudgetExceeded, "no admissible beta among the first " + std::to_string(candidate_cap) +
                                               " candidates");
}

PigeonholeResult pigeonhole_density(const std::vector<IntegerSet>& sets, std::int64_t n0, std::int64_t N) {
    if (sets.empty()) throw Error(ErrorCode::InvalidInput, "at least one set required");
    if (n0 < 1 || N <= n0) throw Error(ErrorCode::InvalidInput, "1 ≤ n0 < N required");
    for (const auto& s : sets)
        if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error(ErrorCode::InvalidInput, "sets must be sorted and duplicate-free");
    for (std::int64_t x = n0; x <= N; ++x) {
        bool covered = std::any_of(sets.begin(), sets.end(),
                                   [x](const IntegerSet& s) { return std::binary_search(s.begin(), s.end(), x); });
        if (!covered) throw Error(ErrorCode::CoverageGap, "union misses " + std::to_string(x) + " in [n0, N]");
    }
    PigeonholeResult out;
    out.count = -1;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        auto lo = std::lower_bound(sets[i].begin(), sets[i].end(), std::int64_t{1});
        auto hi = std::upper_bound(sets[i].begin(), sets[i].end(), N);
        auto count = static_cast<std::int64_t>(std::distance(lo, hi));
        if (count > out.count) {
            out.count = count;
            out.index = i;
        }
    }
    out.density = Rational(Integer(static_cast<long>(out.count)), Integer(static_cast<long>(N)));
    out.bound = Rational(Integer(static_cast<long>(N - n0 + 1)), Integer(static_cast<long>(N)) * Integer(static_cast<long>(sets.size())));
    out.density.canonicalize();
    out.bound.canonicalize();
    return out;
}

std::int64_t equidist_witness(const FieldValue& slope, const FieldValue& theta, const IntegerSet& A,
                              const Rational& gamma) {
    if (slope.is_rational()) throw Error(ErrorCode::PreconditionFailed, "slope must be irrational");
    if (gamma <= 0 || gamma > 1) throw Error(ErrorCode::InvalidInput, "gamma must lie in (0, 1]");
    FieldValue lo = field(Rational(gamma / 4), slope.radicand());
    FieldValue hi = FieldValue(1) - lo;
    for (auto n : A) {
        FieldValue x = slope * FieldValue(static_cast<long>(n)) + theta;
        FieldValue fr = x.frac();
        if (lo <= fr && fr <= hi) return n;
    }
    throw Error(ErrorCode::NotFound, "no n in A (" + std::to_string(A.size()) + " scanned) with the fractional part in [" +
                                         format_rational(Rational(gamma / 4)) + ", " +
                                         format_rational(Rational(1 - gamma / 4)) + "]");
}

Rational empirical_density(const IntegerSet& T) {
    if (T.empty() || T.back() < 1) return Rational(0);
    auto lo = std::lower_bound(T.begin(), T.end(), std::int64_t{1});
    Rational d(Integer(static_cast<long>(std::distance(lo, T.end()))), Integer(static_cast<long>(T.back())));
    d.canonicalize();
    return d;
}

DispersionWitness dispersion_witness(const FieldValue& a, const FieldValue& b, const FieldValue& c,
                                     const Rational& beta, const LatticeTable& G, const IntegerSet& T,
                                     const FieldValue& A, const FieldValue& delta) {
    if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0)
        throw Error(ErrorCode::PreconditionFailed, "a, b, c > 0 required");
    if (ratio_is_rational(a, b).rational) throw Error(ErrorCode::PreconditionFailed, "a/b must be irrational");
    if (T.empty()) throw Error(ErrorCode::NotFound, "T is empty");
    Rational gamma = empirical_density(T);
    FieldValue threshold = c * field(gamma / 4, c.radicand());
    if (!(delta < threshold))
        throw Error(ErrorCode::PreconditionFailed, "delta < gamma c / 4 required (gamma = " + format_rational(gamma) + ")");
    for (auto n : T) {
        Rational bn = beta * Rational(Integer(static_cast<long>(n)));
        Integer m;
        mpz_fdiv_q(m.get_mpz_t(), bn.get_num_mpz_t(), bn.get_den_mpz_t());
        FieldValue fm(Rational(m), Rational(0), a.radicand());
        FieldValue residual = c * FieldValue(Rational(G(n, m)), Rational(0), c.radicand()) -
                              (a * fm + b * FieldValue(static_cast<long>(n))) - A;
        if (residual.abs() > delta) return {n, m, residual};
    }
    throw Error(ErrorCode::NotFound, "no n in T up to " + std::to_string(T.back()) + " escapes [A - delta, A + delta]");
}

NonArithmeticShift find_nonarithmetic_beta(const SpectrumReport& report, const FieldValue& lo, const FieldValue& hi,
                                           std::size_t candidate_cap) {
    if (!(lo < hi)) throw Error(ErrorCode::InvalidInput, "interval endpoints must satisfy lo < hi");
    if (report.entries.empty()) throw Error(ErrorCode::NoDistinctAverages, "spectrum report is empty");
    const auto& e1 = report.entries.front();
    auto e2 = std::find_if(report.entries.begin() + 1, report.entries.end(),
                           [&](const SpectrumEntry& e) { return e.average != e1.average; });
    if (e2 == report.entries.end())
        throw Error(ErrorCode::NoDistinctAverages, "all orbit averages up to period " +
                                                       std::to_string(report.period_bound) + " coincide");
    FieldValue t1(e1.orbit.period());
    FieldValue t2(e2->orbit.period());
    auto attempt = [&](const FieldValue& beta) -> std::optional<NonArithmeticShift> {
        if (beta == e1.average || beta == e2->average) return std::nullopt;
        FieldValue u = t1 * (e1.average - beta);
        FieldValue v = t2 * (e2->average - beta);
        if (ratio_is_rational(u, v).rational) return std::nullopt;
        return NonArithmeticShift{beta, e1.orbit, e2->orbit, std::move(u), std::move(v)};
    };
    FieldValue width = hi - lo;
    if (!e1.average.is_rational() || !e2->average.is_rational()) {
        SternBrocot order;
        for (std::size_t i = 0; i < candidate_cap; ++i) {
            if (auto r = attempt(lo + width * field(order.next(), width.radicand()))) return *r;
        }
    }
    std::uint32_t D = e1.average.is_rational() ? e2->average.radicand() : e1.average.radicand();
    if (lo.radicand() != D && !lo.is_rational()) D = lo.radicand();
    FieldValue alpha = FieldValue::alpha(D);
    for (std::size_t q = 1; q <= candidate_cap; ++q) {
        FieldValue step = (alpha * FieldValue(static_cast<long>(q))).frac();
        if (auto r = attempt(lo + width * step)) return *r;
    }
    throw Error(ErrorCode::BudgetExceeded, "no beta found among " + std::to_string(candidate_cap) + " candidates");
}

}  // namespace birkhoff
