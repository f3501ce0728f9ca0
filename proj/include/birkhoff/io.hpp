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

#include "birkhoff/core.hpp"

#include "json.hpp"

#include <optional>

namespace birkhoff {

using Json = nlohmann::json;

struct TableSpec {
    int window = 1;
    std::map<Word, FieldValue> exact;
    std::map<Word, double> floating;
};

struct Budget {
    std::size_t orbit_cap = 10'000'000;
    int horizon = 16;         // search horizon for targeting and witness searches
    int bridge_max_len = 0;   // 0: number of symbols
};

/// One JSON document describing the shift, the observable and optional
/// extras. Lemma-only sessions may omit the shift entirely.
struct RunConfig {
    bool has_system = false;
    int alphabet = 0;
    std::vector<std::vector<int>> transitions;
    std::uint32_t alpha_square = FieldValue::kDefaultRadicand;
    ValueMode mode = ValueMode::Exact;
    TableSpec observable;
    std::optional<TableSpec> roof;
    Budget budget;
    Json params = Json::object();

    Sft sft() const;
    Observable build_observable(const Sft& sft) const;
    std::optional<Roof> build_roof(const Sft& sft) const;

    friend bool operator==(const RunConfig& a, const RunConfig& b);
};

RunConfig parse_config(const Json& doc);
RunConfig parse_config_text(std::string_view text);
Json config_to_json(const RunConfig& config);

/// Canonical payload text: sorted keys, two-space indent, trailing newline.
std::string dump_json(const Json& value);

Json to_json(const FieldValue& v);
FieldValue field_from_json(const Json& v, std::uint32_t radicand);
Rational rational_from_json(const Json& v);

/// CSV with a header row; cells are quoted only when they contain a comma or quote.
std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

}  // namespace birkhoff
