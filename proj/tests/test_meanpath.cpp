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


#include "doctest.h"

#include "birkhoff/meanpath.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace birkhoff;

namespace {

Observable indicator_of_one(const Sft& s) {
    return Observable::exact_from(s, 1, [](std::string_view w) { return FieldValue(w[0] == '1' ? 1 : 0); });
}

}  // namespace

TEST_CASE("extremal mean examples") {
    auto g = fx::golden();
    auto f = indicator_of_one(g);
    auto lo = extremal_mean_cycle(g, f, Extremum::Min);
    auto hi = extremal_mean_cycle(g, f, Extremum::Max);
    CHECK(lo.value == FieldValue(0));
    CHECK(lo.witness.word() == "0");
    CHECK(hi.value == FieldValue(Rational(1, 2)));
    CHECK(hi.witness.word() == "01");

    auto s = fx::full2();
    auto a = extremal_mean_cycle(s, fx::shift32(), Extremum::Min);
    auto b = extremal_mean_cycle(s, fx::shift32(), Extremum::Max);
    CHECK(a.value == FieldValue(-1));
    CHECK(a.witness.word() == "0");
    CHECK(b.value == FieldValue(1));
    CHECK(b.witness.word() == "1");

    auto c = Observable::exact_from(fx::cyclic3(), 2, [](std::string_view) { return FieldValue(Rational(7, 3)); });
    CHECK(extremal_mean_cycle(fx::cyclic3(), c, Extremum::Min).value == FieldValue(Rational(7, 3)));
    CHECK(extremal_mean_cycle(fx::cyclic3(), c, Extremum::Max).value == FieldValue(Rational(7, 3)));
}

TEST_CASE("optima bound every orbit average and witnesses reproduce them") {
    std::mt19937_64 rng(31);
    for (const auto& sft : {fx::full2(), fx::golden(), fx::cyclic3()}) {
        for (int w = 1; w <= 3; ++w) {
            auto f = fx::random_observable(sft, w, rng);
            auto lo = extremal_mean_cycle(sft, f, Extremum::Min);
            auto hi = extremal_mean_cycle(sft, f, Extremum::Max);
            CHECK(birkhoff_sum(lo.witness, f) / FieldValue(lo.witness.period()) == lo.value);
            CHECK(birkhoff_sum(hi.witness, f) / FieldValue(hi.witness.period()) == hi.value);
            for (const auto& e : spectrum(sft, f, sft.alphabet_size() == 3 ? 8 : 12).entries) {
                CHECK(lo.value <= e.average);
                CHECK(e.average <= hi.value);
            }
        }
    }
}

TEST_CASE("extremal means agree with the closed-walk oracle") {
    std::mt19937_64 rng(32);
    struct Case {
        Sft sft;
        int max_window;
    };
    for (const auto& c : {Case{fx::full2(), 6}, Case{fx::golden(), 7}, Case{fx::cyclic3(), 5}}) {
        for (int w = 1; w <= c.max_window; ++w) {
            auto table = fx::random_table(c.sft, w, rng, true);
            auto f = Observable::exact(c.sft, w, table);
            auto g = oracle::higher_block(c.sft.transitions(), std::max(w, 2));
            REQUIRE(g.vertices.size() <= 64);
            CHECK(extremal_mean_cycle(c.sft, f, Extremum::Min).value == oracle::closed_walk_min_mean(g, table, w, false));
            CHECK(extremal_mean_cycle(c.sft, f, Extremum::Max).value == oracle::closed_walk_min_mean(g, table, w, true));
        }
    }
}

TEST_CASE("extremal means agree with simple-cycle enumeration where countable") {
    std::mt19937_64 rng(33);
    for (const auto& sft : {fx::full2(), fx::golden(), fx::cyclic3()}) {
        for (int w = 1; w <= 4; ++w) {
            auto g = oracle::higher_block(sft.transitions(), std::max(w, 2));
            auto cycles = oracle::simple_cycles(g, 20000);
            if (!cycles) continue;
            auto table = fx::random_table(sft, w, rng, true);
            auto f = Observable::exact(sft, w, table);
            std::optional<FieldValue> lo, hi;
            for (const auto& c : *cycles) {
                FieldValue avg = oracle::cyclic_sum(c, table, w) / FieldValue(static_cast<long>(c.size()));
                if (!lo || avg < *lo) lo = avg;
                if (!hi || avg > *hi) hi = avg;
            }
            CHECK(extremal_mean_cycle(sft, f, Extremum::Min).value == *lo);
            CHECK(extremal_mean_cycle(sft, f, Extremum::Max).value == *hi);
        }
    }
}

TEST_CASE("shifting the observable shifts both optima") {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 10; ++t) {
        auto sft = t % 2 ? fx::golden() : fx::cyclic3();
        auto f = fx::random_observable(sft, 2, rng);
        FieldValue beta = fx::small_field(rng);
        auto g = f.shifted(beta);  // f - beta
        for (auto mode : {Extremum::Min, Extremum::Max}) {
            auto a = extremal_mean_cycle(sft, f, mode);
            auto b = extremal_mean_cycle(sft, g, mode);
            CHECK(b.value == a.value - beta);
            // The old witness still attains the shifted optimum.
            CHECK(birkhoff_sum(a.witness, g) / FieldValue(a.witness.period()) == b.value);
        }
    }
}

TEST_CASE("average density examples") {
    auto d = average_spectrum_density(fx::full2(), fx::shift32(), 12, 6);
    CHECK_FALSE(d.degenerate);
    CHECK(d.m == FieldValue(-1));
    CHECK(d.M == FieldValue(1));
    for (auto c : d.probe.counts) CHECK(c > 0);

    auto g = average_spectrum_density(fx::golden(), indicator_of_one(fx::golden()), 10, 5);
    CHECK(g.M == FieldValue(Rational(1, 2)));
    for (auto c : g.probe.counts) CHECK(c > 0);

    auto c = Observable::exact_from(fx::full2(), 1, [](std::string_view) { return FieldValue(5); });
    auto dc = average_spectrum_density(fx::full2(), c, 8, 4);
    CHECK(dc.degenerate);
    REQUIRE(dc.probe.counts.size() == 1);
    CHECK(dc.probe.counts[0] == 1);  // one distinct average, namely 5
}

TEST_CASE("mean gap certificate examples") {
    auto w = mean_gap_certificate(fx::full2(), fx::shift32(), FieldValue(Rational(-1, 3)), FieldValue(Rational(-1, 4)));
    CHECK(w.average == FieldValue(Rational(-3, 11)));
    CHECK(w.orbit.period() == 11);
    CHECK(std::count(w.orbit.word().begin(), w.orbit.word().end(), '1') == 4);

    auto g = mean_gap_certificate(fx::golden(), indicator_of_one(fx::golden()), FieldValue(Rational(1, 3)),
                                  FieldValue(Rational(1, 2)));
    CHECK(g.orbit.word() == "00101");
    CHECK(g.average == FieldValue(Rational(2, 5)));

    auto c = Observable::exact_from(fx::full2(), 1, [](std::string_view) { return FieldValue(1); });
    try {
        mean_gap_certificate(fx::full2(), c, FieldValue(0), FieldValue(Rational(1, 2)));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PreconditionFailed);
    }
    try {
        mean_gap_certificate(fx::full2(), fx::shift32(), FieldValue(Rational(-1, 3)), FieldValue(Rational(-1, 4)), 8);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
}

TEST_CASE("mean gap certificate finds the shortest period") {
    std::mt19937_64 rng(35);
    for (int t = 0; t < 6; ++t) {
        auto f = fx::random_observable(fx::golden(), 2, rng, false);
        auto lo = extremal_mean_cycle(fx::golden(), f, Extremum::Min).value;
        auto hi = extremal_mean_cycle(fx::golden(), f, Extremum::Max).value;
        if (lo == hi) continue;
        FieldValue a = lo + (hi - lo) * FieldValue(Rational(2, 5));
        FieldValue b = lo + (hi - lo) * FieldValue(Rational(1, 2));
        auto w = mean_gap_certificate(fx::golden(), f, a, b);
        CHECK(a < w.average);
        CHECK(w.average < b);
        for (const auto& e : spectrum(fx::golden(), f, w.orbit.period() - 1).entries)
            CHECK_FALSE((a < e.average && e.average < b));
    }
}
