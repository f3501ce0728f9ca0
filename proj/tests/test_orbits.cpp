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

#include "birkhoff/orbits.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace birkhoff;

namespace {

std::vector<Word> words_of(const std::vector<PeriodicOrbit>& os) {
    std::vector<Word> out;
    for (const auto& o : os) out.push_back(o.word());
    return out;
}

std::vector<FieldValue> ints(std::initializer_list<int> xs) {
    std::vector<FieldValue> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("enumeration examples") {
    CHECK(words_of(enumerate_primitive_orbits(fx::full2(), 2)) == std::vector<Word>{"0", "1", "01"});
    CHECK(words_of(enumerate_primitive_orbits(fx::full2(), 3)) == std::vector<Word>{"0", "1", "01", "001", "011"});
    CHECK(words_of(enumerate_primitive_orbits(fx::golden(), 2)) == std::vector<Word>{"0", "01"});
}

TEST_CASE("enumeration matches brute force on every fixture shift") {
    struct Case {
        Sft sft;
        int n;
    };
    std::vector<Case> cases = {{fx::full2(), 12}, {fx::golden(), 12}, {fx::cyclic3(), 8}, {Sft::full_shift(3), 7},
                               {Sft::validate(3, {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}), 10}};
    for (const auto& c : cases) {
        auto expect = oracle::orbits(c.sft.transitions(), c.n);
        CHECK(words_of(enumerate_primitive_orbits(c.sft, c.n)) == expect);
        CHECK(words_of(enumerate_primitive_orbits(c.sft, c.n, {10'000'000, 3})) == expect);
    }
}

TEST_CASE("enumeration limits") {
    try {
        enumerate_primitive_orbits(fx::full2(), 0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidInput);
        CHECK(std::string(e.what()) == "n_max ≥ 1 required");
    }
    CHECK_THROWS_AS(enumerate_primitive_orbits(fx::full2(), 10, {50, 1}), Error);
    try {
        enumerate_primitive_orbits(fx::full2(), 10, {50, 2});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
    CHECK(words_of(orbits_of_period(fx::full2(), 4)) == std::vector<Word>{"0001", "0011", "0111"});
}

TEST_CASE("Birkhoff sums of the x0 + x1 - 1 fixture") {
    auto f = fx::shift32();
    auto s = fx::full2();
    CHECK(birkhoff_sum(PeriodicOrbit::from_word(s, "0"), f) == FieldValue(-1));
    CHECK(birkhoff_sum(PeriodicOrbit::from_word(s, "1"), f) == FieldValue(1));
    CHECK(birkhoff_sum(PeriodicOrbit::from_word(s, "001"), f) == FieldValue(-1));
    for (const auto& o : enumerate_primitive_orbits(s, 12)) {
        long ones = std::count(o.word().begin(), o.word().end(), '1');
        CHECK(birkhoff_sum(o, f) == FieldValue(2 * ones - o.period()));
    }
}

TEST_CASE("sums agree with the direct oracle, are rotation invariant and scale over powers") {
    std::mt19937_64 rng(21);
    for (const auto& sft : {fx::full2(), fx::golden(), fx::cyclic3()}) {
        for (int w = 1; w <= 3; ++w) {
            auto table = fx::random_table(sft, w, rng, true);
            auto f = Observable::exact(sft, w, table);
            for (const auto& o : enumerate_primitive_orbits(sft, 7)) {
                auto s = birkhoff_sum(o, f);
                CHECK(s == oracle::cyclic_sum(o.word(), table, w));
                const Word& x = o.word();
                for (std::size_t r = 1; r < x.size(); ++r) CHECK(cyclic_sum(x.substr(r) + x.substr(0, r), f) == s);
                CHECK(cyclic_sum(x + x + x, f) == FieldValue(3) * s);
            }
        }
    }
}

TEST_CASE("coboundaries vanish on every orbit") {
    std::mt19937_64 rng(22);
    for (const auto& sft : {fx::full2(), fx::golden(), fx::cyclic3()}) {
        for (int w = 2; w <= 3; ++w) {
            auto f = fx::coboundary(sft, w, fx::random_potential(sft, w - 1, rng));
            for (const auto& o : enumerate_primitive_orbits(sft, 8)) CHECK(birkhoff_sum(o, f).is_zero());
        }
    }
}

TEST_CASE("spectrum examples") {
    auto r3 = spectrum(fx::full2(), fx::shift32(), 3);
    CHECK(r3.distinct_values == ints({-1, 0, 1}));
    auto r6 = spectrum(fx::full2(), fx::shift32(), 6);
    for (int v = -3; v <= 3; ++v)
        CHECK(std::find(r6.distinct_values.begin(), r6.distinct_values.end(), FieldValue(v)) != r6.distinct_values.end());
    for (const auto& v : r6.distinct_values) CHECK(v.is_rational());
    for (const auto& v : r6.distinct_values) CHECK(v.rat_part().get_den() == 1);

    auto c = Observable::exact(fx::full2(), 1, {{"0", Rational(3, 2)}, {"1", Rational(3, 2)}});
    auto rc = spectrum(fx::full2(), c, 5);
    std::vector<FieldValue> expect;
    for (int p = 1; p <= 5; ++p) expect.push_back(FieldValue(Rational(3 * p, 2)));
    CHECK(rc.distinct_values == expect);
}

TEST_CASE("necklace counts satisfy the trace identity") {
    for (const auto& sft : {fx::full2(), fx::golden(), fx::cyclic3(), Sft::full_shift(4)}) {
        auto f = Observable::exact_from(sft, 1, [](std::string_view) { return FieldValue(0); });
        auto r = spectrum(sft, f, sft.alphabet_size() > 3 ? 7 : 12);
        for (const auto& t : trace_check(sft, r)) CHECK(t.ok());
    }
    CHECK(transition_trace(fx::golden(), 5) == 11);  // Lucas number L_5
    CHECK(transition_trace(fx::full2(), 10) == 1024);
}

TEST_CASE("classification examples") {
    auto v = classify_observable(spectrum(fx::full2(), fx::shift32(), 6));
    CHECK(v.verdict == Verdict::Dispersed);
    CHECK(v.definitive);
    CHECK(v.positive_witness->word() == "1");
    CHECK(v.negative_witness->word() == "0");

    auto one = Observable::exact_from(fx::full2(), 1, [](std::string_view) { return FieldValue(1); });
    auto c = classify_observable(spectrum(fx::full2(), one, 6));
    CHECK(c.verdict == Verdict::Concentrated);
    CHECK(c.sign == 1);
    CHECK_FALSE(c.definitive);
    CHECK(c.horizon == 6);

    auto cob = Observable::exact_from(fx::full2(), 2, [](std::string_view w) { return FieldValue(w[1] - w[0]); });
    auto z = classify_observable(spectrum(fx::full2(), cob, 6));
    CHECK(z.verdict == Verdict::Concentrated);
    CHECK(z.sign == 0);
}

TEST_CASE("arithmetic test examples") {
    auto a = arithmetic_test(spectrum(fx::full2(), fx::shift32(), 6));
    CHECK(a.kind == ArithmeticKind::Arithmetic);
    CHECK(a.generator == FieldValue(1));

    auto f = Observable::exact(fx::full2(), 1, {{"0", FieldValue(1)}, {"1", fx::alpha()}});
    auto b = arithmetic_test(spectrum(fx::full2(), f, 4));
    CHECK(b.kind == ArithmeticKind::NonArithmetic);
    CHECK(b.definitive);
    CHECK(b.witness_a->word() == "0");
    CHECK(b.witness_b->word() == "1");

    auto zero = Observable::exact_from(fx::full2(), 1, [](std::string_view) { return FieldValue(0); });
    auto c = arithmetic_test(spectrum(fx::full2(), zero, 4));
    CHECK(c.kind == ArithmeticKind::Arithmetic);
    CHECK(c.zero_generator);
    CHECK(c.generator.is_zero());
}

TEST_CASE("arithmetic generator is the largest c with every sum in cZ") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 30; ++t) {
        FieldValue scale = FieldValue(fx::small_rational(rng, 5, 7)) * (t % 2 ? fx::alpha() : FieldValue(1));
        if (scale.is_zero()) continue;
        auto table = fx::random_table(fx::full2(), 2, rng, false);
        for (auto& [w, v] : table) v = v * scale;
        auto r = spectrum(fx::full2(), Observable::exact(fx::full2(), 2, table), 6);
        auto a = arithmetic_test(r);
        REQUIRE(a.kind == ArithmeticKind::Arithmetic);
        if (a.zero_generator) continue;
        std::vector<Integer> multiples;
        for (const auto& v : r.distinct_values) {
            auto d = ratio_is_rational(v, a.generator);
            REQUIRE(d.rational);
            CHECK(d.witness->get_den() == 1);
            multiples.push_back(d.witness->get_num());
        }
        Integer g = 0;
        for (const auto& m : multiples) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
        CHECK(g == 1);  // no larger generator
    }
}

TEST_CASE("growth series") {
    auto r = spectrum(fx::full2(), fx::shift32(), 10);
    auto g = spectrum_growth(r);
    REQUIRE(g.size() == 10);
    CHECK(g[0].max_abs == FieldValue(1));
    for (int p = 3; p <= 10; ++p) CHECK(g[static_cast<std::size_t>(p - 1)].max_abs == FieldValue(p - 2));
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i].running_max >= g[i - 1].running_max);

    auto one = Observable::exact_from(fx::full2(), 1, [](std::string_view) { return FieldValue(1); });
    for (const auto& pt : spectrum_growth(spectrum(fx::full2(), one, 8))) CHECK(pt.max_abs == FieldValue(pt.period));
    auto zero = Observable::exact_from(fx::full2(), 1, [](std::string_view) { return FieldValue(0); });
    for (const auto& pt : spectrum_growth(spectrum(fx::full2(), zero, 8))) CHECK(pt.max_abs.is_zero());
}

TEST_CASE("density probe examples") {
    auto r = spectrum(fx::full2(), fx::shift32(), 12);
    auto d = density_probe(r, FieldValue(Rational(1, 4)), FieldValue(Rational(3, 4)), 4);
    CHECK(d.hits == 0);
    CHECK(d.widest_gap.width() == FieldValue(Rational(1, 2)));

    auto f = Observable::exact(fx::full2(), 1, {{"0", FieldValue(1)}, {"1", -fx::alpha()}});
    auto dn = density_probe(spectrum(fx::full2(), f, 14), FieldValue(-1), FieldValue(1), 8);
    for (auto c : dn.counts) CHECK(c > 0);

    SpectrumReport empty;
    auto de = density_probe(empty, FieldValue(0), FieldValue(1), 5);
    CHECK(de.hits == 0);
    for (auto c : de.counts) CHECK(c == 0);
    CHECK(de.widest_gap.width() == FieldValue(1));
    CHECK_THROWS_AS(density_probe(empty, FieldValue(1), FieldValue(1), 5), Error);
}

TEST_CASE("density bins agree with a direct count") {
    std::mt19937_64 rng(24);
    auto f = fx::random_observable(fx::golden(), 2, rng);
    auto r = spectrum(fx::golden(), f, 10);
    FieldValue lo(-3), hi(3);
    const int bins = 7;
    auto d = density_probe(r, lo, hi, bins, true);
    std::vector<std::size_t> expect(bins, 0);
    for (const auto& v : r.distinct_values) {
        if (!(lo < v && v < hi)) continue;
        int b = 0;
        while (b + 1 < bins && v >= lo + (hi - lo) * FieldValue(Rational(b + 1, bins))) ++b;
        ++expect[static_cast<std::size_t>(b)];
    }
    CHECK(d.counts == expect);
}

TEST_CASE("flow spectrum") {
    auto s = fx::full2();
    auto unit = Roof(Observable::exact_from(s, 1, [](std::string_view) { return FieldValue(1); }));
    auto f = fx::shift32();
    auto flow = flow_spectrum(s, f, unit, 6);
    auto disc = spectrum(s, f, 6);
    REQUIRE(flow.size() == disc.entries.size());
    for (std::size_t i = 0; i < flow.size(); ++i) {
        CHECK(flow[i].orbit == disc.entries[i].orbit);
        CHECK(flow[i].integral == disc.entries[i].sum);
        CHECK(flow[i].flow_period == FieldValue(flow[i].orbit.period()));
    }
    auto roof = Roof(Observable::exact(s, 1, {{"0", FieldValue(1)}, {"1", FieldValue(2)}}));
    auto x0 = Observable::exact_from(s, 1, [](std::string_view w) { return FieldValue(w[0] - '0'); });
    auto fl = flow_spectrum(s, x0, roof, 2);
    CHECK(fl[2].orbit.word() == "01");
    CHECK(fl[2].flow_period == FieldValue(3));
    CHECK(fl[2].integral == FieldValue(1));
    auto zero = Observable::exact_from(s, 1, [](std::string_view) { return FieldValue(0); });
    for (const auto& e : flow_spectrum(s, zero, roof, 5)) CHECK(e.integral.is_zero());
}

TEST_CASE("float sums stay within their error bound") {
    std::mt19937_64 rng(25);
    auto s = fx::cyclic3();
    auto table = fx::random_table(s, 3, rng, true);
    auto exact = Observable::exact(s, 3, table);
    std::map<Word, double> ft;
    for (const auto& [w, v] : table) ft[w] = v.to_double();
    auto fl = Observable::floating(s, 3, ft);
    for (const auto& o : enumerate_primitive_orbits(s, 8)) {
        auto fs = cyclic_sum_float(o.word(), fl);
        double truth = birkhoff_sum(o, exact).to_double();
        // Inputs are themselves rounded once, which costs at most u per term.
        CHECK(std::fabs(fs.value - truth) <= fs.error_bound * 2 + 1e-15);
    }
}

TEST_CASE("higher-block graph matches the reference construction") {
    for (const auto& sft : {fx::full2(), fx::golden(), fx::cyclic3()}) {
        for (int w = 1; w <= 4; ++w) {
            auto g = DeBruijnGraph::build(sft, w);
            auto ref = oracle::higher_block(sft.transitions(), std::max(w, 2));
            CHECK(g.vertices == ref.vertices);
            std::size_t edges = 0;
            for (const auto& out : ref.out) edges += out.size();
            CHECK(g.edges.size() == edges);
            for (const auto& e : g.edges) {
                CHECK(g.vertices[e.tail] == e.word.substr(0, e.word.size() - 1));
                CHECK(g.vertices[e.head] == e.word.substr(1));
            }
        }
    }
}
