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

#include "birkhoff/commands.hpp"

#include "birkhoff/gluing.hpp"
#include "birkhoff/livsic.hpp"
#include "birkhoff/meanpath.hpp"
#include "birkhoff/numtheory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace birkhoff {

int status_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::BudgetExceeded:
        case ErrorCode::NotFound:
            return kStatusBudgetExceeded;
        case ErrorCode::IoFailure:
            return kStatusIoFailure;
        case ErrorCode::Internal:
            return kStatusInternal;
        default:
            return kStatusInvalidInput;
    }
}

namespace {

// Parameter access with error messages naming the key.
class Params {
public:
    Params(const Json& base, const Json& overlay, std::uint32_t radicand) : doc_(base), D_(radicand) {
        if (!doc_.is_object()) doc_ = Json::object();
        if (!overlay.is_null()) {
            if (!overlay.is_object()) throw Error(ErrorCode::InvalidInput, "params must be a JSON object");
            for (const auto& [k, v] : overlay.items()) doc_[k] = v;
        }
        if (doc_.contains("alpha_square")) D_ = doc_.at("alpha_square").get<std::uint32_t>();
    }

    bool has(const char* key) const { return doc_.contains(key); }
    const Json& raw(const char* key) const {
        if (!has(key)) throw Error(ErrorCode::InvalidInput, std::string("missing parameter \"") + key + "\"");
        return doc_.at(key);
    }

    long integer(const char* key, std::optional<long> fallback = std::nullopt) const {
        if (!has(key)) {
            if (fallback) return *fallback;
            raw(key);
        }
        const auto& v = doc_.at(key);
        if (!v.is_number_integer())
            throw Error(ErrorCode::InvalidInput, std::string("parameter \"") + key + "\" must be an integer");
        return v.get<long>();
    }

    int n_max(long fallback = 8) const {
        long n = integer("n_max", fallback);
        if (n < 1) throw Error(ErrorCode::InvalidInput, "n_max ≥ 1 required");
        if (n > 64) throw Error(ErrorCode::InvalidInput, "n_max ≤ 64 required");
        return static_cast<int>(n);
    }

    FieldValue field(const char* key, std::optional<FieldValue> fallback = std::nullopt) const {
        if (!has(key) && fallback) return *fallback;
        return wrap(key, [&] { return field_from_json(raw(key), D_); });
    }

    Rational rational(const char* key, std::optional<Rational> fallback = std::nullopt) const {
        if (!has(key) && fallback) return *fallback;
        return wrap(key, [&] { return rational_from_json(raw(key)); });
    }

    bool flag(const char* key, bool fallback) const {
        if (!has(key)) return fallback;
        if (!doc_.at(key).is_boolean())
            throw Error(ErrorCode::InvalidInput, std::string("parameter \"") + key + "\" must be a boolean");
        return doc_.at(key).get<bool>();
    }

    std::string text(const char* key) const {
        const auto& v = raw(key);
        if (!v.is_string()) throw Error(ErrorCode::InvalidInput, std::string("parameter \"") + key + "\" must be a string");
        return v.get<std::string>();
    }

    std::vector<FieldValue> fields(const char* key) const {
        const auto& v = raw(key);
        if (!v.is_array()) throw Error(ErrorCode::InvalidInput, std::string("parameter \"") + key + "\" must be a list");
        std::vector<FieldValue> out;
        for (const auto& x : v) out.push_back(wrap(key, [&] { return field_from_json(x, D_); }));
        return out;
    }

    /// A list of integers or {"from": a, "to": b, "modulus": m, "residues": [...]}.
    IntegerSet integer_set(const Json& v, const char* key) const {
        IntegerSet out;
        if (v.is_array()) {
            for (const auto& x : v) {
                if (!x.is_number_integer())
                    throw Error(ErrorCode::InvalidInput, std::string("parameter \"") + key + "\" must hold integers");
                out.push_back(x.get<std::int64_t>());
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        }
        if (!v.is_object() || !v.contains("from") || !v.contains("to"))
            throw Error(ErrorCode::InvalidInput, std::string("parameter \"") + key +
                                                     "\" must be a list or {\"from\", \"to\"[, \"modulus\", \"residues\"]}");
        auto from = v.at("from").get<std::int64_t>(), to = v.at("to").get<std::int64_t>();
        if (to - from > 10'000'000) throw Error(ErrorCode::InvalidInput, std::string("parameter \"") + key + "\" range is too large");
        std::int64_t mod = v.value("modulus", std::int64_t{1});
        if (mod < 1) throw Error(ErrorCode::InvalidInput, "modulus ≥ 1 required");
        std::vector<std::int64_t> res = v.value("residues", std::vector<std::int64_t>{0});
        for (auto x = from; x <= to; ++x) {
            auto r = ((x % mod) + mod) % mod;
            if (std::find(res.begin(), res.end(), r) != res.end()) out.push_back(x);
        }
        return out;
    }

    IntegerSet integer_set(const char* key) const { return integer_set(raw(key), key); }

    std::uint32_t radicand() const { return D_; }

private:
    template <class Fn>
    auto wrap(const char* key, Fn fn) const -> decltype(fn()) {
        try {
            return fn();
        } catch (const Error& e) {
            throw Error(e.code(), std::string("parameter \"") + key + "\": " + e.what());
        }
    }

    Json doc_;
    std::uint32_t D_;
};

Json orbit_json(const PeriodicOrbit& o) { return o.word(); }

Json optional_orbit(const std::optional<PeriodicOrbit>& o) { return o ? Json(o->word()) : Json(nullptr); }

Json certificate_json(const CoboundaryCertificate& c) {
    Json pot = Json::object();
    for (const auto& [w, v] : c.potential) pot[w] = to_json(v);
    return {{"block", c.block}, {"potential", pot}, {"verified", c.verified}};
}

Json growth_json(const std::vector<GrowthPoint>& g) {
    Json out = Json::array();
    for (const auto& p : g)
        out.push_back({{"period", p.period},
                       {"max_abs", to_json(p.max_abs)},
                       {"running_max", to_json(p.running_max)},
                       {"orbit_count", p.orbit_count}});
    return out;
}

std::string growth_csv(const std::vector<GrowthPoint>& g) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : g)
        rows.push_back({std::to_string(p.period), p.max_abs.to_string(), p.running_max.to_string(),
                        std::to_string(p.orbit_count)});
    return to_csv({"period", "max_abs", "running_max", "orbit_count"}, rows);
}

Json probe_json(const DensityProbe& d) {
    Json edges = Json::array();
    for (const auto& e : d.edges) edges.push_back(to_json(e));
    return {{"lo", to_json(d.lo)},
            {"hi", to_json(d.hi)},
            {"open", d.open},
            {"edges", edges},
            {"counts", d.counts},
            {"hits", d.hits},
            {"empty_bins", std::count(d.counts.begin(), d.counts.end(), std::size_t{0})},
            {"widest_gap", {{"lo", to_json(d.widest_gap.lo)}, {"hi", to_json(d.widest_gap.hi)},
                            {"width", to_json(d.widest_gap.width())}}}};
}

std::string probe_csv(const DensityProbe& d) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < d.counts.size(); ++i)
        rows.push_back({std::to_string(i), d.edges[i].to_string(), d.edges[i + 1].to_string(),
                        std::to_string(d.counts[i])});
    return to_csv({"bin", "lo", "hi", "count"}, rows);
}

}  // namespace

Json report_json(const SpectrumReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"period", e.orbit.period()},
                           {"word", e.orbit.word()},
                           {"sum", to_json(e.sum)},
                           {"average", to_json(e.average)}});
    Json distinct = Json::array();
    for (const auto& v : r.distinct_values) distinct.push_back(to_json(v));
    return {{"period_bound", r.period_bound},
            {"entries", entries},
            {"distinct_values", distinct},
            {"growth", growth_json(r.growth)}};
}

namespace {

std::string spectrum_csv(const SpectrumReport& r) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : r.entries)
        rows.push_back({std::to_string(e.orbit.period()), e.orbit.word(), e.sum.to_string(), e.average.to_string()});
    return to_csv({"period", "word", "sum", "average"}, rows);
}

}  // namespace

Json report_json(const MeanCycleResult& r) { return {{"value", to_json(r.value)}, {"witness", orbit_json(r.witness)}}; }

namespace {

Json table_json(const GluingTable& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        const char* status = r.status == RowStatus::Stabilized       ? "stabilized"
                             : r.status == RowStatus::PreStabilization ? "pre-stabilization"
                                                                        : "degenerate";
        Json row = {{"n", r.n}, {"m", r.m}, {"status", status}};
        if (r.status != RowStatus::Degenerate) {
            row["S"] = to_json(r.S);
            row["predicted"] = to_json(r.predicted);
            row["residual"] = to_json(r.residual);
        }
        rows.push_back(row);
    }
    return {{"H", to_json(t.H)}, {"S_p", to_json(t.Sp)}, {"S_q", to_json(t.Sq)}, {"rows", rows},
            {"exact_in_regime", t.exact_in_regime()}};
}

struct Context {
    const RunConfig& config;
    Params params;
    unsigned threads;
    EnumerationOptions options() const { return {config.budget.orbit_cap, threads}; }
    Sft sft() const { return config.sft(); }
    Observable observable(const Sft& s) const { return config.build_observable(s); }
    PeriodicOrbit orbit(const Sft& s, const char* key) const {
        try {
            return PeriodicOrbit::from_word(s, params.text(key));
        } catch (const Error& e) {
            throw Error(e.code(), std::string("parameter \"") + key + "\": " + e.what());
        }
    }
};

using Handler = std::function<CommandOutput(const Context&)>;

CommandOutput ok(Json report, std::string summary, std::optional<std::string> csv = std::nullopt) {
    return {kStatusOk, std::move(report), std::move(csv), std::move(summary)};
}

CommandOutput negative(Json report, std::string summary, std::optional<std::string> csv = std::nullopt) {
    return {kStatusNegative, std::move(report), std::move(csv), std::move(summary)};
}

const std::map<std::string, Handler, std::less<>>& handlers() {
    static const std::map<std::string, Handler, std::less<>> table = {
        {"validate",
         [](const Context& c) {
             auto s = c.sft();
             auto f = c.observable(s);
             Json report = {{"alphabet", s.alphabet_size()},
                            {"window", f.window()},
                            {"mode", f.is_exact() ? "exact" : "float"},
                            {"admissible_windows", s.admissible_words(f.window()).size()},
                            {"valid", true}};
             return ok(report, "config is valid");
         }},
        {"spectrum",
         [](const Context& c) {
             auto s = c.sft();
             auto f = c.observable(s);
             auto r = spectrum(s, f, c.params.n_max(), c.options());
             Json report = report_json(r);
             Json traces = Json::array();
             bool all_ok = true;
             for (const auto& t : trace_check(s, r)) {
                 traces.push_back({{"period", t.period}, {"necklace_side", t.necklace_side.get_str()},
                                   {"trace", t.trace.get_str()}, {"ok", t.ok()}});
                 all_ok = all_ok && t.ok();
             }
             report["trace_check"] = traces;
             if (!all_ok) throw Error(ErrorCode::Internal, "necklace count disagrees with trace(A^n)");
             return ok(report, std::to_string(r.entries.size()) + " orbits, " +
                                   std::to_string(r.distinct_values.size()) + " distinct sums",
                       spectrum_csv(r));
         }},
        {"classify",
         [](const Context& c) {
             auto s = c.sft();
             auto r = spectrum(s, c.observable(s), c.params.n_max(), c.options());
             auto v = classify_observable(r);
             bool dispersed = v.verdict == Verdict::Dispersed;
             Json report = {{"verdict", dispersed ? "dispersed" : "concentrated"},
                            {"positive_witness", optional_orbit(v.positive_witness)},
                            {"negative_witness", optional_orbit(v.negative_witness)},
                            {"sign", v.sign},
                            {"horizon", v.horizon},
                            {"definitive", v.definitive}};
             return ok(report, dispersed ? "dispersed" : "concentrated at horizon " + std::to_string(v.horizon));
         }},
        {"arithmetic",
         [](const Context& c) {
             auto s = c.sft();
             auto r = spectrum(s, c.observable(s), c.params.n_max(), c.options());
             auto v = arithmetic_test(r);
             const char* kind = v.kind == ArithmeticKind::Arithmetic      ? "arithmetic"
                                : v.kind == ArithmeticKind::NonArithmetic ? "non-arithmetic"
                                                                          : "inconclusive";
             Json report = {{"verdict", kind},
                            {"horizon", v.horizon},
                            {"definitive", v.definitive},
                            {"witness_a", optional_orbit(v.witness_a)},
                            {"witness_b", optional_orbit(v.witness_b)}};
             if (v.kind == ArithmeticKind::Arithmetic) {
                 report["generator"] = to_json(v.generator);
                 report["zero_generator"] = v.zero_generator;
             }
             return ok(report, kind);
         }},
        {"growth",
         [](const Context& c) {
             auto s = c.sft();
             auto r = spectrum(s, c.observable(s), c.params.n_max(), c.options());
             auto g = spectrum_growth(r);
             return ok({{"growth", growth_json(g)}, {"period_bound", r.period_bound}}, "growth series", growth_csv(g));
         }},
        {"density",
         [](const Context& c) {
             auto s = c.sft();
             auto r = spectrum(s, c.observable(s), c.params.n_max(), c.options());
             auto d = density_probe(r, c.params.field("lo"), c.params.field("hi"),
                                    static_cast<int>(c.params.integer("bins", 8)), c.params.flag("open", false));
             Json report = probe_json(d);
             report["period_bound"] = r.period_bound;
             return ok(report, std::to_string(d.hits) + " values inside", probe_csv(d));
         }},
        {"flow",
         [](const Context& c) {
             auto s = c.sft();
             auto roof = c.config.build_roof(s);
             if (!roof) throw Error(ErrorCode::InvalidInput, "config: flow needs a \"roof\" table");
             auto entries = flow_spectrum(s, c.observable(s), *roof, c.params.n_max(), c.options());
             Json list = Json::array();
             std::vector<std::vector<std::string>> rows;
             for (const auto& e : entries) {
                 list.push_back({{"period", e.orbit.period()}, {"word", e.orbit.word()},
                                 {"flow_period", to_json(e.flow_period)}, {"integral", to_json(e.integral)}});
                 rows.push_back({std::to_string(e.orbit.period()), e.orbit.word(), e.flow_period.to_string(),
                                 e.integral.to_string()});
             }
             return ok({{"entries", list}}, std::to_string(entries.size()) + " closed orbits",
                       to_csv({"period", "word", "flow_period", "integral"}, rows));
         }},
        {"mean",
         [](const Context& c) {
             auto s = c.sft();
             auto f = c.observable(s);
             auto lo = extremal_mean_cycle(s, f, Extremum::Min);
             auto hi = extremal_mean_cycle(s, f, Extremum::Max);
             Json report = {{"m", to_json(lo.value)},
                            {"M", to_json(hi.value)},
                            {"min_witness", orbit_json(lo.witness)},
                            {"max_witness", orbit_json(hi.witness)}};
             return ok(report, "m = " + lo.value.to_string() + ", M = " + hi.value.to_string());
         }},
        {"avg",
         [](const Context& c) {
             auto s = c.sft();
             auto d = average_spectrum_density(s, c.observable(s), c.params.n_max(12),
                                               static_cast<int>(c.params.integer("bins", 6)), c.options());
             Json report = probe_json(d.probe);
             report["m"] = to_json(d.m);
             report["M"] = to_json(d.M);
             report["degenerate"] = d.degenerate;
             report["orbit_count"] = d.orbit_count;
             return ok(report, "averages over [m, M]", probe_csv(d.probe));
         }},
        {"gap-cert",
         [](const Context& c) {
             auto s = c.sft();
             auto w = mean_gap_certificate(s, c.observable(s), c.params.field("a"), c.params.field("b"),
                                           static_cast<int>(c.params.integer("period_cap", 40)), c.options());
             return ok({{"witness", orbit_json(w.orbit)}, {"average", to_json(w.average)},
                        {"periods_searched", w.periods_searched}},
                       "witness " + w.orbit.word());
         }},
        {"livsic",
         [](const Context& c) {
             auto s = c.sft();
             auto r = solve_coboundary(s, c.observable(s));
             if (r.certificate) return ok({{"coboundary", true}, {"certificate", certificate_json(*r.certificate)}},
                                          "coboundary");
             return negative({{"coboundary", false},
                              {"violating_cycle", {{"word", r.violation->orbit.word()},
                                                   {"sum", to_json(r.violation->sum)}}}},
                             "violating cycle " + r.violation->orbit.word());
         }},
        {"cohomology",
         [](const Context& c) {
             auto s = c.sft();
             auto r = cohomologous_to_constant(s, c.observable(s));
             if (r.cohomologous)
                 return ok({{"cohomologous", true}, {"constant", to_json(r.constant)},
                            {"certificate", certificate_json(*r.certificate)}},
                           "cohomologous to " + r.constant.to_string());
             return negative({{"cohomologous", false}, {"low", report_json(*r.low)}, {"high", report_json(*r.high)}},
                             "distinct cycle averages " + r.low->value.to_string() + " and " +
                                 r.high->value.to_string());
         }},
        {"dichotomy",
         [](const Context& c) {
             auto s = c.sft();
             auto v = bounded_spectrum_verdict(s, c.observable(s), c.params.n_max(10), c.options());
             Json report = {{"growth", growth_json(v.growth)}};
             if (v.coboundary) {
                 report["verdict"] = "coboundary";
                 report["certificate"] = certificate_json(*v.certificate);
                 return ok(report, "bounded: coboundary", growth_csv(v.growth));
             }
             report["verdict"] = "unbounded";
             report["violating_cycle"] = {{"word", v.violation->orbit.word()}, {"sum", to_json(v.violation->sum)}};
             return negative(report, "unbounded: violating cycle " + v.violation->orbit.word(), growth_csv(v.growth));
         }},
        {"small-sums",
         [](const Context& c) {
             auto s = c.sft();
             auto r = small_sums_check(s, c.observable(s), c.params.field("epsilon", FieldValue(1)),
                                       static_cast<int>(c.params.integer("period_cap", 12)), c.options());
             Json schedule = Json::array();
             for (const auto& st : r.schedule)
                 schedule.push_back({{"epsilon", to_json(st.epsilon)}, {"period_bound", st.period_bound}});
             Json report = {{"consistent", r.consistent}, {"schedule", schedule}};
             if (r.consistent) {
                 report["coboundary_confirmed"] = r.coboundary_confirmed;
                 if (!r.coboundary_confirmed)
                     return negative(report, "consistent to the cap, but not a coboundary");
                 return ok(report, "consistent; coboundary confirmed");
             }
             report["violation"] = {{"word", r.violation->word()}, {"sum", to_json(r.violation_sum)},
                                    {"epsilon", to_json(r.violation_epsilon)}};
             return negative(report, "violation at " + r.violation->word());
         }},
        {"bridge",
         [](const Context& c) {
             auto s = c.sft();
             int cap = c.config.budget.bridge_max_len;
             Word b;
             if (c.params.has("last") || c.params.has("first")) {
                 auto last = c.params.text("last"), first = c.params.text("first");
                 if (last.size() != 1 || first.size() != 1)
                     throw Error(ErrorCode::InvalidInput, "\"last\" and \"first\" must be single symbols");
                 b = bridge_between(s, last[0], first[0], cap);
             } else {
                 b = bridge_word(s, c.orbit(s, "from"), c.orbit(s, "to"), cap);
             }
             return ok({{"bridge", b}, {"length", b.size()}}, b.empty() ? "direct junction" : "bridge " + b);
         }},
        {"glue",
         [](const Context& c) {
             auto s = c.sft();
             auto z = glue_orbits(s, c.orbit(s, "p"), c.orbit(s, "q"), static_cast<int>(c.params.integer("m")),
                                  static_cast<int>(c.params.integer("n")));
             Json report = {{"word", z.word},
                            {"total_period", z.total_period},
                            {"primitive", z.primitive},
                            {"bridge_in", z.bridge_in},
                            {"bridge_out", z.bridge_out}};
             if (c.config.mode == ValueMode::Exact) report["S"] = to_json(cyclic_sum(z.word, c.observable(s)));
             return ok(report, "L = " + std::to_string(z.total_period));
         }},
        {"correction",
         [](const Context& c) {
             auto s = c.sft();
             auto t = correction_H(s, c.observable(s), c.orbit(s, "p"), c.orbit(s, "q"),
                                   static_cast<int>(c.params.integer("m")), static_cast<int>(c.params.integer("n")));
             Json parts = Json::array();
             for (const auto& h : t.parts) parts.push_back(to_json(h));
             return ok({{"H", to_json(t.H)}, {"parts", parts}, {"bridges", to_json(t.bridges)}},
                       "H = " + t.H.to_string());
         }},
        {"verify-glue",
         [](const Context& c) {
             auto s = c.sft();
             auto f = c.observable(s);
             auto p = c.orbit(s, "p"), q = c.orbit(s, "q");
             auto beta = c.params.rational("beta", Rational(1, 2));
             int lo = static_cast<int>(c.params.integer("n_lo", 1)), hi = static_cast<int>(c.params.integer("n_hi", 12));
             if (!f.is_exact()) {
                 auto t = verify_gluing_estimate_float(s, f, p, q, beta, lo, hi,
                                                       static_cast<int>(c.params.integer("depth", 2)));
                 Json rows = Json::array();
                 std::vector<std::vector<std::string>> csv;
                 bool all = true;
                 for (const auto& r : t.rows) {
                     rows.push_back({{"n", r.n}, {"m", r.m}, {"S", r.S}, {"predicted", r.predicted},
                                     {"residual", r.residual}, {"tail_bound", r.tail_bound},
                                     {"rounding_bound", r.rounding_bound}, {"within_bound", r.within_bound()}});
                     std::ostringstream a, b, d, e;
                     a.precision(17), b.precision(17), d.precision(17), e.precision(17);
                     a << r.S, b << r.predicted, d << r.residual, e << r.tail_bound + r.rounding_bound;
                     csv.push_back({std::to_string(r.n), std::to_string(r.m), a.str(), b.str(), d.str(), e.str()});
                     all = all && r.within_bound();
                 }
                 Json report = {{"lipschitz", t.lipschitz}, {"depth", t.depth}, {"rows", rows}, {"within_bound", all}};
                 auto table = to_csv({"n", "m", "S", "predicted", "residual", "bound"}, csv);
                 return all ? ok(report, "all residuals within the tail bound", table)
                            : negative(report, "residual exceeds the tail bound", table);
             }
             auto t = verify_gluing_estimate(s, f, p, q, beta, lo, hi, c.threads);
             std::vector<std::vector<std::string>> csv;
             for (const auto& r : t.rows) {
                 if (r.status == RowStatus::Degenerate) continue;
                 csv.push_back({std::to_string(r.n), std::to_string(r.m), r.S.to_string(), r.predicted.to_string(),
                                r.residual.to_string()});
             }
             auto table = to_csv({"n", "m", "S", "predicted", "residual"}, csv);
             return t.exact_in_regime() ? ok(table_json(t), "residual 0 throughout the stabilization regime", table)
                                        : negative(table_json(t), "nonzero residual in the stabilization regime", table);
         }},
        {"hit",
         [](const Context& c) {
             auto s = c.sft();
             int horizon = static_cast<int>(c.params.integer("horizon", c.config.budget.horizon));
             auto h = hit_target(s, c.observable(s), c.params.field("A"), c.params.rational("eps"), horizon,
                                 c.options());
             Json report = {{"method", h.method == HitMethod::Glued ? "glued" : "direct"},
                            {"word", h.word},
                            {"orbit", orbit_json(h.orbit)},
                            {"S", to_json(h.S)},
                            {"horizon", h.horizon}};
             if (h.method == HitMethod::Glued) {
                 report["p"] = orbit_json(*h.p);
                 report["q"] = orbit_json(*h.q);
                 report["m0"] = h.m0;
                 report["n0"] = h.n0;
                 report["deterministic"] = to_json(h.deterministic);
                 report["H"] = to_json(h.H);
                 report["bridges"] = to_json(h.bridges);
             }
             return ok(report, "S = " + h.S.to_string());
         }},
        {"lemma-gap",
         [](const Context& c) {
             auto a = c.params.field("a"), b = c.params.field("b");
             if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "b ≠ 0 required");
             if (!ratio_is_rational(a, b).rational)
                 return negative({{"rational", false}, {"infimum", to_json(FieldValue(0))}},
                                 "a/b irrational: the infimum is 0 and not attained");
             auto rel = rational_relation(a, b);
             return ok({{"rational", true}, {"l", rel.l.get_str()}, {"k", rel.k.get_str()},
                        {"gap", to_json(lattice_gap(a, b))}},
                       "gap = " + lattice_gap(a, b).to_string());
         }},
        {"lemma-independence",
         [](const Context& c) {
             auto r = asymptotic_independence(c.params.fields("seq"), c.params.field("b"));
             Json dens = Json::array(), gaps = Json::array();
             for (const auto& k : r.denominators) dens.push_back(k.get_str());
             for (const auto& g : r.gaps) gaps.push_back(to_json(g));
             Json report = {{"independent", r.independent}, {"denominators", dens}, {"gaps", gaps},
                            {"gaps_monotone", r.gaps_monotone}};
             if (!r.independent) {
                 Json s = Json::array();
                 for (const auto& x : r.s) s.push_back(x.get_str());
                 report["K"] = r.K.get_str();
                 report["scale"] = to_json(r.scale);
                 report["s"] = s;
                 report["t"] = r.t.get_str();
             }
             return ok(report, r.independent ? "independent on the prefix" : "dependent");
         }},
        {"lemma-beta",
         [](const Context& c) {
             auto beta = find_beta(c.params.field("a"), c.params.field("b"), c.params.fields("c_list"),
                                   static_cast<std::size_t>(c.params.integer("candidate_cap", 100000)));
             return ok({{"beta", format_rational(beta)}}, "beta = " + format_rational(beta));
         }},
        {"lemma-pigeonhole",
         [](const Context& c) {
             const auto& raw = c.params.raw("sets");
             if (!raw.is_array()) throw Error(ErrorCode::InvalidInput, "parameter \"sets\" must be a list");
             std::vector<IntegerSet> sets;
             for (const auto& s : raw) sets.push_back(c.params.integer_set(s, "sets"));
             auto r = pigeonhole_density(sets, c.params.integer("n0"), c.params.integer("N"));
             return ok({{"index", r.index}, {"count", r.count}, {"density", format_rational(r.density)},
                        {"bound", format_rational(r.bound)}},
                       "index " + std::to_string(r.index));
         }},
        {"lemma-equidist",
         [](const Context& c) {
             auto gamma = c.params.rational("gamma");
             auto n = equidist_witness(c.params.field("slope"), c.params.field("theta", FieldValue(0)),
                                       c.params.integer_set("A"), gamma);
             FieldValue x = c.params.field("slope") * FieldValue(static_cast<long>(n)) +
                            c.params.field("theta", FieldValue(0));
             return ok({{"n", n}, {"frac", to_json(x.frac())}, {"frac_approx", x.frac().to_double()}},
                       "n = " + std::to_string(n));
         }},
        {"lemma-dispersion",
         [](const Context& c) {
             auto a = c.params.field("a"), b = c.params.field("b"), cc = c.params.field("c");
             auto A = c.params.field("A", FieldValue(0));
             LatticeTable G;
             const Json g = c.params.has("G") ? c.params.raw("G") : Json("zero");
             if (g.is_string() && g.get<std::string>() == "zero") {
                 G = [](std::int64_t, const Integer&) { return Integer(0); };
             } else if (g.is_string() && g.get<std::string>() == "nearest") {
                 G = [a, b, cc, A](std::int64_t n, const Integer& m) {
                     FieldValue x = (a * FieldValue(Rational(m), Rational(0), a.radicand()) +
                                     b * FieldValue(static_cast<long>(n)) + A) / cc;
                     return Integer((x + FieldValue(Rational(1, 2))).floor());
                 };
             } else if (g.is_object()) {
                 std::map<std::int64_t, Integer> table;
                 for (const auto& [k, v] : g.items()) table[std::stoll(k)] = Integer(v.get<long>());
                 G = [table](std::int64_t n, const Integer&) {
                     auto it = table.find(n);
                     if (it == table.end()) throw Error(ErrorCode::InvalidInput, "G has no entry for n = " + std::to_string(n));
                     return it->second;
                 };
             } else {
                 throw Error(ErrorCode::InvalidInput, "parameter \"G\" must be \"zero\", \"nearest\" or a table n -> integer");
             }
             auto w = dispersion_witness(a, b, cc, c.params.rational("beta"), G, c.params.integer_set("T"), A,
                                         c.params.field("delta"));
             return ok({{"n", w.n}, {"m", w.m.get_str()}, {"residual", to_json(w.residual)}},
                       "n = " + std::to_string(w.n));
         }},
        {"lemma-nonarith-beta",
         [](const Context& c) {
             auto s = c.sft();
             auto r = spectrum(s, c.observable(s), c.params.n_max(), c.options());
             auto w = find_nonarithmetic_beta(r, c.params.field("lo"), c.params.field("hi"));
             return ok({{"beta", to_json(w.beta)}, {"first", orbit_json(w.first)}, {"second", orbit_json(w.second)},
                        {"u", to_json(w.u)}, {"v", to_json(w.v)}},
                       "beta = " + w.beta.to_string());
         }},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, _] : handlers()) out.push_back(k);
        return out;
    }();
    return names;
}

CommandOutput run_command(const RunConfig& config, std::string_view command, const Json& params, unsigned threads) {
    auto it = handlers().find(command);
    if (it == handlers().end()) throw Error(ErrorCode::InvalidInput, "unknown command \"" + std::string(command) + "\"");
    Context ctx{config, Params(config.params, params, config.alpha_square), std::max(1u, threads)};
    auto out = it->second(ctx);
    out.report["command"] = std::string(command);
    out.report["status"] = out.status;
    return out;
}

std::string render(const CommandOutput& out, std::string_view format) {
    if (format == "json") return dump_json(out.report);
    if (format == "csv") {
        if (!out.csv) throw Error(ErrorCode::InvalidInput, "this command has no tabular (csv) form");
        return *out.csv;
    }
    throw Error(ErrorCode::InvalidInput, "format must be json or csv");
}

}  // namespace birkhoff
