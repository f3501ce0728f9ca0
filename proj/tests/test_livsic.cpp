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

#include "birkhoff/livsic.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace birkhoff;

namespace {

Observable constant(const Sft& s, int w, const FieldValue& c) {
    return Observable::exact_from(s, w, [&](std::string_view) { return c; });
}

// Potentials differ by one additive constant on every vertex.
bool differ_by_constant(const std::map<Word, FieldValue>& a, const std::map<Word, FieldValue>& b) {
    if (a.size() != b.size()) return false;
    std::optional<FieldValue> d;
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        if (it == b.end()) return false;
        FieldValue diff = v - it->second;
        if (!d) d = diff;
        else if (*d != diff) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("coboundary examples") {
    auto s = fx::full2();
    auto f = Observable::exact_from(s, 2, [](std::string_view w) { return FieldValue(w[1] - w[0]); });
    auto r = solve_coboundary(s, f);
    REQUIRE(r.is_coboundary());
    CHECK(r.certificate->verified);
    CHECK(r.certificate->potential.at("0") == FieldValue(0));
    CHECK(r.certificate->potential.at("1") == FieldValue(1));

    auto v = solve_coboundary(s, fx::shift32());
    REQUIRE_FALSE(v.is_coboundary());
    CHECK(v.violation->orbit.word() == "1");
    CHECK(v.violation->sum == FieldValue(1));

    auto z = solve_coboundary(fx::golden(), constant(fx::golden(), 3, FieldValue(0)));
    REQUIRE(z.is_coboundary());
    for (const auto& [k, u] : z.certificate->potential) CHECK(u.is_zero());
}

TEST_CASE("random potentials are recovered up to a constant") {
    std::mt19937_64 rng(41);
    for (const auto& sft : {fx::full2(), fx::golden(), fx::cyclic3()}) {
        for (int w = 2; w <= 4; ++w) {
            auto u = fx::random_potential(sft, w - 1, rng);
            auto f = fx::coboundary(sft, w, u);
            auto r = solve_coboundary(sft, f);
            REQUIRE(r.is_coboundary());
            CHECK(r.certificate->block == w);
            CHECK(differ_by_constant(r.certificate->potential, u));
            CHECK(verify_certificate(sft, f, *r.certificate));
        }
    }
}

TEST_CASE("violations are genuine and certificates are gauge invariant") {
    std::mt19937_64 rng(42);
    for (const auto& sft : {fx::full2(), fx::golden(), fx::cyclic3()}) {
        for (int w = 1; w <= 3; ++w) {
            auto f = fx::random_observable(sft, w, rng);
            auto r = solve_coboundary(sft, f);
            if (r.violation) {
                CHECK_FALSE(birkhoff_sum(r.violation->orbit, f).is_zero());
                CHECK(r.violation->sum == birkhoff_sum(r.violation->orbit, f));
            }
            auto g = fx::coboundary(sft, w + 1, fx::random_potential(sft, w, rng));
            auto c = solve_coboundary(sft, g);
            REQUIRE(c.is_coboundary());
            auto shifted = *c.certificate;
            for (auto& [k, u] : shifted.potential) u = u + FieldValue(Rational(5, 3), Rational(-1, 2), 2);
            CHECK(verify_certificate(sft, g, shifted));
            auto broken = *c.certificate;
            broken.potential.begin()->second = broken.potential.begin()->second + FieldValue(1);
            CHECK_FALSE(verify_certificate(sft, g, broken));
        }
    }
}

TEST_CASE("coboundary decision matches brute-force cycle sums") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> coin(0, 3);
    int positives = 0, negatives = 0;
    for (int t = 0; t < 60; ++t) {
        Sft sft = t % 3 == 0 ? fx::full2() : (t % 3 == 1 ? fx::golden() : fx::cyclic3());
        int w = 1 + t % 3;
        Observable f = coin(rng) == 0 ? fx::random_observable(sft, w, rng, false)
                                       : fx::coboundary(sft, std::max(w, 2), fx::random_potential(sft, std::max(w, 2) - 1, rng));
        // Occasionally perturb a coboundary on a single word.
        if (coin(rng) == 1) {
            auto table = f.exact_table();
            table.begin()->second = table.begin()->second + FieldValue(Rational(1, 7));
            f = Observable::exact(sft, f.window(), table);
        }
        auto V = DeBruijnGraph::build(sft, f.window()).vertices.size();
        bool all_zero = true;
        for (const auto& o : enumerate_primitive_orbits(sft, static_cast<int>(V)))
            if (!birkhoff_sum(o, f).is_zero()) all_zero = false;
        auto r = solve_coboundary(sft, f);
        CHECK(r.is_coboundary() == all_zero);
        (all_zero ? positives : negatives)++;
    }
    CHECK(positives > 5);
    CHECK(negatives > 5);
}

TEST_CASE("cohomology to a constant") {
    auto three = cohomologous_to_constant(fx::full2(), constant(fx::full2(), 1, FieldValue(3)));
    CHECK(three.cohomologous);
    CHECK(three.constant == FieldValue(3));
    REQUIRE(three.certificate);
    for (const auto& [k, u] : three.certificate->potential) CHECK(u.is_zero());

    std::mt19937_64 rng(44);
    for (const auto& sft : {fx::full2(), fx::golden(), fx::cyclic3()}) {
        auto u = fx::random_potential(sft, 1, rng);
        auto f = Observable::exact_from(sft, 2, [&](std::string_view w) {
            return FieldValue(2) + u.at(Word(w.substr(1))) - u.at(Word(w.substr(0, 1)));
        });
        auto r = cohomologous_to_constant(sft, f);
        CHECK(r.cohomologous);
        CHECK(r.constant == FieldValue(2));
        REQUIRE(r.certificate);
        CHECK(differ_by_constant(r.certificate->potential, u));
    }

    auto no = cohomologous_to_constant(fx::full2(), fx::shift32());
    CHECK_FALSE(no.cohomologous);
    REQUIRE(no.low);
    REQUIRE(no.high);
    CHECK(no.low->witness.word() == "0");
    CHECK(no.low->value == FieldValue(-1));
    CHECK(no.high->witness.word() == "1");
    CHECK(no.high->value == FieldValue(1));
}

TEST_CASE("bounded spectrum verdict") {
    auto z = bounded_spectrum_verdict(fx::full2(), constant(fx::full2(), 1, FieldValue(0)), 6);
    CHECK(z.coboundary);
    CHECK(z.certificate);

    auto u = bounded_spectrum_verdict(fx::full2(), fx::shift32(), 10);
    CHECK_FALSE(u.coboundary);
    REQUIRE(u.violation);
    REQUIRE(u.growth.size() == 10);
    for (int p = 3; p <= 10; ++p) CHECK(u.growth[static_cast<std::size_t>(p - 1)].max_abs >= FieldValue(p - 2));

    std::mt19937_64 rng(45);
    auto f = fx::coboundary(fx::cyclic3(), 2, fx::random_potential(fx::cyclic3(), 1, rng));
    auto c = bounded_spectrum_verdict(fx::cyclic3(), f, 8);
    CHECK(c.coboundary);
    for (const auto& g : c.growth) CHECK(g.max_abs.is_zero());
}

TEST_CASE("small sums check") {
    auto z = small_sums_check(fx::full2(), constant(fx::full2(), 1, FieldValue(0)), FieldValue(1));
    CHECK(z.consistent);
    CHECK(z.coboundary_confirmed);

    auto v = small_sums_check(fx::full2(), fx::shift32(), FieldValue(1));
    CHECK_FALSE(v.consistent);
    REQUIRE(v.violation);
    CHECK(v.violation->word() == "0");
    CHECK(v.violation_epsilon == FieldValue(Rational(1, 4)));
    CHECK(v.violation_sum == FieldValue(-1));

    std::mt19937_64 rng(46);
    auto u = fx::random_potential(fx::golden(), 2, rng);
    for (auto& [k, x] : u) x = x * FieldValue(Rational(1, 10));
    auto tenth = fx::coboundary(fx::golden(), 3, u);
    for (auto eps : {Rational(1), Rational(1, 3), Rational(1, 50)}) {
        auto r = small_sums_check(fx::golden(), tenth, FieldValue(eps));
        CHECK(r.consistent);
        CHECK(r.coboundary_confirmed);
    }
}

TEST_CASE("small sums schedule") {
    auto r = small_sums_check(fx::full2(), constant(fx::full2(), 1, FieldValue(0)), FieldValue(1), 12);
    REQUIRE_FALSE(r.schedule.empty());
    int j = 1;
    for (const auto& step : r.schedule) {
        CHECK(step.epsilon == FieldValue(Rational(1, j * j)));
        CHECK(step.period_bound == std::min(j, 12));
        ++j;
    }
    CHECK(r.schedule.back().period_bound == 12);
    CHECK_THROWS_AS(small_sums_check(fx::full2(), fx::shift32(), FieldValue(0)), Error);
    CHECK_THROWS_AS(small_sums_check(fx::full2(), fx::shift32(), FieldValue(2)), Error);
}
