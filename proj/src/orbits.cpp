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

#include "birkhoff/orbits.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

namespace birkhoff {

namespace {

// Lyndon words over an SFT by the Fredricksen-Kessler-Maiorana recursion,
// pruned on adjacency. All generated prefixes are admissible, and the
// wrap-around pair is checked on output. Words come out in lex order.
class LyndonSearch {
public:
    LyndonSearch(const Sft& sft, int length, std::atomic<std::size_t>& counter, std::size_t cap)
        : sft_(sft), n_(length), k_(sft.alphabet_size()), a_(static_cast<std::size_t>(length) + 1, 0),
          counter_(counter), cap_(cap) {}

    void run_from(int first_symbol, std::vector<Word>& out) {
        out_ = &out;
        a_[1] = first_symbol;
        gen(2, 1);
    }

private:
    void gen(int t, int p) {
        if (t > n_) {
            if (p == n_ && sft_.allowed(a_[static_cast<std::size_t>(n_)], a_[1])) emit();
            return;
        }
        auto ut = static_cast<std::size_t>(t);
        int prev = a_[ut - 1];
        int base = a_[ut - static_cast<std::size_t>(p)];
        a_[ut] = base;
        if (sft_.allowed(prev, base)) gen(t + 1, p);
        for (int j = base + 1; j < k_; ++j) {
            a_[ut] = j;
            if (sft_.allowed(prev, j)) gen(t + 1, t);
        }
    }

    void emit() {
        if (counter_.fetch_add(1) + 1 > cap_)
            throw Error(ErrorCode::BudgetExceeded,
                        "orbit enumeration exceeded the cap of " + std::to_string(cap_) + " orbits");
        Word w(static_cast<std::size_t>(n_), '0');
        for (int i = 0; i < n_; ++i) w[static_cast<std::size_t>(i)] = symbol_char(a_[static_cast<std::size_t>(i) + 1]);
        out_->push_back(std::move(w));
    }

    const Sft& sft_;
    int n_;
    int k_;
    std::vector<int> a_;
    std::atomic<std::size_t>& counter_;
    std::size_t cap_;
    std::vector<Word>* out_ = nullptr;
};

// by_symbol[s][n - n_lo] holds the Lyndon words of length n starting with s.
std::vector<PeriodicOrbit> enumerate_range(const Sft& sft, int n_lo, int n_hi, const EnumerationOptions& options) {
    if (n_lo < 1 || n_hi < n_lo) throw Error(ErrorCode::InvalidInput, "n_max ≥ 1 required");
    const int k = sft.alphabet_size();
    const auto periods = static_cast<std::size_t>(n_hi - n_lo + 1);
    std::vector<std::vector<std::vector<Word>>> by_symbol(static_cast<std::size_t>(k),
                                                          std::vector<std::vector<Word>>(periods));
    std::atomic<std::size_t> counter{0};

    auto work = [&](int s) {
        for (int n = n_lo; n <= n_hi; ++n) {
            auto& out = by_symbol[static_cast<std::size_t>(s)][static_cast<std::size_t>(n - n_lo)];
            if (n == 1) {
                if (sft.allowed(s, s)) {
                    if (counter.fetch_add(1) + 1 > options.orbit_cap)
                        throw Error(ErrorCode::BudgetExceeded, "orbit enumeration exceeded the cap of " +
                                                                   std::to_string(options.orbit_cap) + " orbits");
                    out.emplace_back(1, symbol_char(s));
                }
                continue;
            }
            LyndonSearch search(sft, n, counter, options.orbit_cap);
            search.run_from(s, out);
        }
    };

    unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(k)));
    if (threads == 1) {
        for (int s = 0; s < k; ++s) work(s);
    } else {
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (int s = static_cast<int>(t); s < k; s += static_cast<int>(threads)) work(s);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    std::vector<PeriodicOrbit> result;
    result.reserve(counter.load());
    for (std::size_t pi = 0; pi < periods; ++pi)
        for (int s = 0; s < k; ++s)
            for (auto& w : by_symbol[static_cast<std::size_t>(s)][pi]) result.push_back(PeriodicOrbit::from_canonical(std::move(w)));
    return result;
}

}  // namespace

std::vector<PeriodicOrbit> enumerate_primitive_orbits(const Sft& sft, int n_max, const EnumerationOptions& options) {
    return enumerate_range(sft, 1, n_max, options);
}

std::vector<PeriodicOrbit> orbits_of_period(const Sft& sft, int n, const EnumerationOptions& options) {
    return enumerate_range(sft, n, n, options);
}

FieldValue cyclic_sum(std::string_view word, const Observable& f) {
    if (!f.is_exact()) throw Error(ErrorCode::InvalidInput, "exact Birkhoff sum requested for a float-mode observable");
    const std::size_t L = word.size();
    const auto w = static_cast<std::size_t>(f.window());
    const auto a = static_cast<std::size_t>(f.alphabet_size());
    if (L == 0) return FieldValue();
    std::size_t top = 1;
    for (std::size_t i = 1; i < w; ++i) top *= a;
    std::size_t code = 0;
    for (std::size_t i = 0; i < w; ++i) code = code * a + static_cast<std::size_t>(symbol_index(word[i % L]));
    FieldValue total;
    for (std::size_t i = 0; i < L; ++i) {
        total += f.value_at(code);
        code = (code % top) * a + static_cast<std::size_t>(symbol_index(word[(i + w) % L]));
    }
    return total;
}

FieldValue birkhoff_sum(const PeriodicOrbit& orbit, const Observable& f) { return cyclic_sum(orbit.word(), f); }

FloatSum cyclic_sum_float(std::string_view word, const Observable& f) {
    FloatSum out;
    const std::size_t L = word.size();
    const auto w = static_cast<std::size_t>(f.window());
    double abs_total = 0.0;
    for (std::size_t i = 0; i < L; ++i) {
        Word win(w, '0');
        for (std::size_t j = 0; j < w; ++j) win[j] = word[(i + j) % L];
        double v = f.float_value(win);
        out.value += v;
        abs_total += std::fabs(v);
    }
    // Recursive summation: |error| <= (L-1) u sum|x_i| (first order).
    out.error_bound = static_cast<double>(L) * std::numeric_limits<double>::epsilon() * abs_total;
    return out;
}

SpectrumReport make_report(const std::vector<PeriodicOrbit>& orbits, const Observable& f, int n_max) {
    SpectrumReport report;
    report.period_bound = n_max;
    report.entries.reserve(orbits.size());
    for (const auto& o : orbits) {
        FieldValue s = birkhoff_sum(o, f);
        FieldValue avg = s / FieldValue(o.period());
        report.entries.push_back({o, std::move(s), std::move(avg)});
    }
    std::vector<FieldValue> values;
    values.reserve(report.entries.size());
    for (const auto& e : report.entries) values.push_back(e.sum);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    report.distinct_values = std::move(values);
    report.growth = spectrum_growth(report);
    return report;
}

SpectrumReport spectrum(const Sft& sft, const Observable& f, int n_max, const EnumerationOptions& options) {
    if (n_max < 1) throw Error(ErrorCode::InvalidInput, "n_max ≥ 1 required");
    if (!f.is_exact()) throw Error(ErrorCode::InvalidInput, "spectrum requires an exact-mode observable");
    return make_report(enumerate_primitive_orbits(sft, n_max, options), f, n_max);
}

Integer transition_trace(const Sft& sft, int n) {
    const auto k = static_cast<std::size_t>(sft.alphabet_size());
    std::vector<Integer> base(k * k), power(k * k), next(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) base[i * k + j] = power[i * k + j] = sft.allowed(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0;
    for (int step = 1; step < n; ++step) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                Integer acc = 0;
                for (std::size_t l = 0; l < k; ++l) acc += power[i * k + l] * base[l * k + j];
                next[i * k + j] = acc;
            }
        std::swap(power, next);
    }
    Integer tr = 0;
    for (std::size_t i = 0; i < k; ++i) tr += power[i * k + i];
    return tr;
}

std::vector<TraceCheck> trace_check(const Sft& sft, const SpectrumReport& report) {
    std::vector<Integer> primitive_count(static_cast<std::size_t>(report.period_bound) + 1, 0);
    for (const auto& e : report.entries) primitive_count[static_cast<std::size_t>(e.orbit.period())] += 1;
    std::vector<TraceCheck> out;
    for (int n = 1; n <= report.period_bound; ++n) {
        TraceCheck c;
        c.period = n;
        c.necklace_side = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) c.necklace_side += Integer(d) * primitive_count[static_cast<std::size_t>(d)];
        c.trace = transition_trace(sft, n);
        out.push_back(std::move(c));
    }
    return out;
}

Classification classify_observable(const SpectrumReport& report) {
    Classification c;
    c.horizon = report.period_bound;
    for (const auto& e : report.entries) {
        int s = e.sum.sign();
        if (s > 0 && !c.positive_witness) c.positive_witness = e.orbit;
        if (s < 0 && !c.negative_witness) c.negative_witness = e.orbit;
    }
    if (c.positive_witness && c.negative_witness) {
        c.verdict = Verdict::Dispersed;
        c.definitive = true;
        c.sign = 0;
    } else {
        c.verdict = Verdict::Concentrated;
        c.sign = c.positive_witness ? 1 : (c.negative_witness ? -1 : 0);
    }
    return c;
}

ArithmeticVerdict arithmetic_test(const SpectrumReport& report) {
    ArithmeticVerdict v;
    v.horizon = report.period_bound;
    if (report.entries.empty()) return v;
    const SpectrumEntry* ref = nullptr;
    for (const auto& e : report.entries)
        if (!e.sum.is_zero()) {
            ref = &e;
            break;
        }
    if (!ref) {
        v.kind = ArithmeticKind::Arithmetic;
        v.generator = FieldValue(0);
        v.zero_generator = true;
        return v;
    }
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& e : report.entries) {
        if (e.sum.is_zero()) continue;
        auto d = ratio_is_rational(e.sum, ref->sum);
        if (!d.rational) {
            v.kind = ArithmeticKind::NonArithmetic;
            v.witness_a = ref->orbit;
            v.witness_b = e.orbit;
            v.definitive = true;
            return v;
        }
        const Rational& r = *d.witness;
        Integer n = abs(r.get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den_mpz_t());
    }
    v.kind = ArithmeticKind::Arithmetic;
    v.generator = ref->sum.abs() * FieldValue(Rational(num_gcd, den_lcm));
    return v;
}

std::vector<GrowthPoint> spectrum_growth(const SpectrumReport& report) {
    std::vector<GrowthPoint> g(static_cast<std::size_t>(std::max(report.period_bound, 0)));
    for (int p = 1; p <= report.period_bound; ++p) g[static_cast<std::size_t>(p - 1)].period = p;
    for (const auto& e : report.entries) {
        auto& pt = g[static_cast<std::size_t>(e.orbit.period() - 1)];
        FieldValue a = e.sum.abs();
        if (pt.orbit_count == 0 || a > pt.max_abs) pt.max_abs = a;
        ++pt.orbit_count;
    }
    FieldValue running;
    bool any = false;
    for (auto& pt : g) {
        if (pt.orbit_count > 0 && (!any || pt.max_abs > running)) {
            running = pt.max_abs;
            any = true;
        }
        pt.running_max = running;
    }
    return g;
}

DensityProbe density_probe(const std::vector<FieldValue>& values, const FieldValue& lo, const FieldValue& hi, int bins,
                           bool open) {
    if (bins < 1) throw Error(ErrorCode::InvalidInput, "bins ≥ 1 required");
    if (!(lo < hi)) throw Error(ErrorCode::InvalidInput, "density interval requires lo < hi");
    DensityProbe d;
    d.lo = lo;
    d.hi = hi;
    d.open = open;
    FieldValue width = (hi - lo) / FieldValue(bins);
    for (int i = 0; i <= bins; ++i) d.edges.push_back(i == bins ? hi : lo + width * FieldValue(i));
    d.counts.assign(static_cast<std::size_t>(bins), 0);

    std::vector<FieldValue> inside;
    for (const auto& v : values) {
        bool in = open ? (lo < v && v < hi) : (lo <= v && v <= hi);
        if (in) inside.push_back(v);
    }
    std::sort(inside.begin(), inside.end());
    inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
    for (const auto& v : inside) {
        // last edge <= v, clamped into the closed last bin
        auto it = std::upper_bound(d.edges.begin(), d.edges.end(), v);
        auto bin = static_cast<std::size_t>(std::distance(d.edges.begin(), it)) - 1;
        bin = std::min(bin, static_cast<std::size_t>(bins - 1));
        ++d.counts[bin];
    }
    d.hits = inside.size();

    FieldValue prev = lo;
    d.widest_gap = {lo, lo};
    bool first = true;
    auto consider = [&](const FieldValue& next) {
        if (first || next - prev > d.widest_gap.width()) {
            d.widest_gap = {prev, next};
            first = false;
        }
        prev = next;
    };
    for (const auto& v : inside) consider(v);
    consider(hi);
    return d;
}

DensityProbe density_probe(const SpectrumReport& report, const FieldValue& lo, const FieldValue& hi, int bins, bool open) {
    return density_probe(report.distinct_values, lo, hi, bins, open);
}

std::vector<FlowEntry> flow_spectrum(const Sft& sft, const Observable& f_reduced, const Roof& roof, int n_max,
                                     const EnumerationOptions& options) {
    if (n_max < 1) throw Error(ErrorCode::InvalidInput, "n_max ≥ 1 required");
    std::vector<FlowEntry> out;
    for (auto& o : enumerate_primitive_orbits(sft, n_max, options)) {
        FieldValue period = birkhoff_sum(o, roof.table());
        FieldValue integral = birkhoff_sum(o, f_reduced);
        out.push_back({std::move(o), std::move(period), std::move(integral)});
    }
    return out;
}

// ---------------------------------------------------------------------------

DeBruijnGraph DeBruijnGraph::build(const Sft& sft, int window) {
    DeBruijnGraph g;
    g.block = std::max(window, 2);
    g.vertices = sft.admissible_words(g.block - 1);
    auto edge_words = sft.admissible_words(g.block);
    g.out_edges.resize(g.vertices.size());
    g.in_edges.resize(g.vertices.size());
    for (auto& w : edge_words) {
        Edge e;
        e.tail = g.vertex_index(std::string_view(w).substr(0, w.size() - 1));
        e.head = g.vertex_index(std::string_view(w).substr(1));
        e.word = std::move(w);
        g.out_edges[e.tail].push_back(g.edges.size());
        g.in_edges[e.head].push_back(g.edges.size());
        g.edges.push_back(std::move(e));
    }
    return g;
}

std::size_t DeBruijnGraph::vertex_index(std::string_view word) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), word,
                               [](const Word& a, std::string_view b) { return std::string_view(a) < b; });
    if (it == vertices.end() || *it != word)
        throw Error(ErrorCode::InvalidInput, "\"" + std::string(word) + "\" is not a de Bruijn vertex");
    return static_cast<std::size_t>(std::distance(vertices.begin(), it));
}

Word DeBruijnGraph::cycle_word(const std::vector<std::size_t>& edge_cycle) const {
    Word w;
    w.reserve(edge_cycle.size());
    for (auto e : edge_cycle) w.push_back(edges[e].word.front());
    return w;
}

std::vector<FieldValue> edge_weights(const DeBruijnGraph& g, const Observable& f) {
    std::vector<FieldValue> w;
    w.reserve(g.edges.size());
    for (const auto& e : g.edges) {
        if (g.block == f.window()) w.push_back(f.value(e.word));
        else w.push_back(f.value(std::string_view(e.word).substr(0, static_cast<std::size_t>(f.window()))));
    }
    return w;
}

}  // namespace birkhoff
