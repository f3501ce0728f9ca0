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

#include "birkhoff/io.hpp"

#include <sstream>

namespace birkhoff {

namespace {

[[noreturn]] void config_error(const std::string& what) { throw Error(ErrorCode::InvalidInput, "config: " + what); }

int int_field(const Json& doc, const char* key, int fallback) {
    if (!doc.contains(key)) return fallback;
    const auto& v = doc.at(key);
    if (!v.is_number_integer()) config_error(std::string("\"") + key + "\" must be an integer");
    return v.get<int>();
}

TableSpec parse_table(const Json& doc, const Sft& sft, ValueMode mode, std::uint32_t D, const char* what) {
    TableSpec t;
    t.window = int_field(doc, "window", 1);
    if (t.window < 1) config_error(std::string(what) + " window must be ≥ 1");
    if (t.window > 16) config_error(std::string(what) + " window must be ≤ 16");
    const Json values = doc.value("values", Json::object());
    if (!values.is_object()) config_error(std::string(what) + " values must be an object word -> value");
    std::optional<Json> fallback;
    if (doc.contains("default")) fallback = doc.at("default");
    for (const auto& w : sft.admissible_words(t.window)) {
        const Json* v = nullptr;
        if (values.contains(w)) v = &values.at(w);
        else if (fallback) v = &*fallback;
        else config_error(std::string(what) + " is missing a value for window \"" + w + "\"");
        if (mode == ValueMode::Exact) {
            t.exact.emplace(w, field_from_json(*v, D));
        } else {
            if (v->is_number()) t.floating.emplace(w, v->get<double>());
            else if (v->is_string()) t.floating.emplace(w, field_from_json(*v, D).to_double());
            else config_error(std::string(what) + " value for \"" + w + "\" must be a number");
        }
    }
    for (const auto& [key, _] : values.items())
        if (!sft.admissible(key) || static_cast<int>(key.size()) != t.window)
            config_error(std::string(what) + " key \"" + key + "\" is not an admissible window of length " +
                         std::to_string(t.window));
    return t;
}

Json table_to_json(const TableSpec& t, ValueMode mode) {
    Json values = Json::object();
    if (mode == ValueMode::Exact)
        for (const auto& [w, v] : t.exact) values[w] = to_json(v);
    else
        for (const auto& [w, v] : t.floating) values[w] = v;
    return Json{{"window", t.window}, {"values", values}};
}

}  // namespace

Json to_json(const FieldValue& v) { return v.to_string(); }

FieldValue field_from_json(const Json& v, std::uint32_t radicand) {
    if (v.is_string()) return FieldValue::parse(v.get<std::string>(), radicand);
    if (v.is_number_integer()) return FieldValue(Rational(v.get<long>()), Rational(0), radicand);
    throw Error(ErrorCode::InvalidInput, "exact values must be strings \"p/q+r/s*a\" or integers, got " + v.dump());
}

Rational rational_from_json(const Json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw Error(ErrorCode::InvalidInput, "expected a rational \"p/q\" or an integer, got " + v.dump());
}

Sft RunConfig::sft() const {
    if (!has_system) throw Error(ErrorCode::InvalidInput, "config: this command needs \"alphabet\" and \"transitions\"");
    return Sft::validate(alphabet, transitions);
}

Observable RunConfig::build_observable(const Sft& s) const {
    if (mode == ValueMode::Exact) return Observable::exact(s, observable.window, observable.exact);
    return Observable::floating(s, observable.window, observable.floating);
}

std::optional<Roof> RunConfig::build_roof(const Sft& s) const {
    if (!roof) return std::nullopt;
    if (mode == ValueMode::Exact) return Roof(Observable::exact(s, roof->window, roof->exact));
    return Roof(Observable::floating(s, roof->window, roof->floating));
}

bool operator==(const RunConfig& a, const RunConfig& b) { return config_to_json(a) == config_to_json(b); }

RunConfig parse_config(const Json& doc) {
    if (!doc.is_object()) config_error("top level must be an object");
    RunConfig c;
    if (doc.contains("alpha_square")) {
        const auto& d = doc.at("alpha_square");
        if (!d.is_number_integer() || d.get<long>() < 2 || d.get<long>() > 1'000'000)
            config_error("\"alpha_square\" must be an integer in [2, 10^6]");
        c.alpha_square = d.get<std::uint32_t>();
        if (!is_square_free(c.alpha_square)) config_error("\"alpha_square\" must be square-free");
    }
    if (doc.contains("mode")) {
        auto m = doc.at("mode").get<std::string>();
        if (m == "exact") c.mode = ValueMode::Exact;
        else if (m == "float") c.mode = ValueMode::Float;
        else config_error("\"mode\" must be \"exact\" or \"float\"");
    }
    if (doc.contains("budget")) {
        const auto& b = doc.at("budget");
        if (!b.is_object()) config_error("\"budget\" must be an object");
        if (b.contains("orbit_cap")) c.budget.orbit_cap = b.at("orbit_cap").get<std::size_t>();
        c.budget.horizon = int_field(b, "horizon", c.budget.horizon);
        c.budget.bridge_max_len = int_field(b, "bridge_max_len", c.budget.bridge_max_len);
    }
    if (doc.contains("params")) {
        if (!doc.at("params").is_object()) config_error("\"params\" must be an object");
        c.params = doc.at("params");
    }
    if (!doc.contains("alphabet")) return c;

    c.has_system = true;
    c.alphabet = int_field(doc, "alphabet", 0);
    if (c.alphabet < 1 || c.alphabet > kMaxAlphabet) config_error("\"alphabet\" must lie in [1, 62]");
    if (doc.contains("transitions")) {
        try {
            c.transitions = doc.at("transitions").get<std::vector<std::vector<int>>>();
        } catch (const nlohmann::json::exception&) {
            config_error("\"transitions\" must be a square 0/1 matrix");
        }
    } else {
        c.transitions.assign(static_cast<std::size_t>(c.alphabet), std::vector<int>(static_cast<std::size_t>(c.alphabet), 1));
    }
    auto s = c.sft();
    c.observable = parse_table(doc, s, c.mode, c.alpha_square, "observable");
    if (doc.contains("roof")) c.roof = parse_table(doc.at("roof"), s, c.mode, c.alpha_square, "roof");
    return c;
}

RunConfig parse_config_text(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(doc);
}

Json config_to_json(const RunConfig& c) {
    Json doc = Json::object();
    doc["alpha_square"] = c.alpha_square;
    doc["mode"] = c.mode == ValueMode::Exact ? "exact" : "float";
    doc["budget"] = {{"orbit_cap", c.budget.orbit_cap},
                     {"horizon", c.budget.horizon},
                     {"bridge_max_len", c.budget.bridge_max_len}};
    if (!c.params.empty()) doc["params"] = c.params;
    if (!c.has_system) return doc;
    doc["alphabet"] = c.alphabet;
    doc["transitions"] = c.transitions;
    auto t = table_to_json(c.observable, c.mode);
    doc["window"] = t["window"];
    doc["values"] = t["values"];
    if (c.roof) doc["roof"] = table_to_json(*c.roof, c.mode);
    return doc;
}

std::string dump_json(const Json& value) { return value.dump(2) + "\n"; }

std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    auto cell = [&](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) {
            out << s;
            return;
        }
        out << '"';
        for (char ch : s) {
            if (ch == '"') out << '"';
            out << ch;
        }
        out << '"';
    };
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) out << ',';
            cell(r[i]);
        }
        out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out.str();
}

}  // namespace birkhoff
