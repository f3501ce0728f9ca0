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

#include "birkhoff/birkhoff.h"

#include "birkhoff/commands.hpp"
#include "birkhoff/orbits.hpp"

#include <memory>
#include <new>
#include <string>

struct bl_session {
    birkhoff::RunConfig config;
    unsigned threads = 1;
};

struct bl_result {
    bl_status status = BL_OK;
    std::string payload;
    std::string message;
};

namespace {

thread_local std::string last_error;

bl_status fail(bl_status s, std::string message) {
    last_error = std::move(message);
    return s;
}

template <class Fn>
bl_status guarded(Fn fn) {
    try {
        last_error.clear();
        return fn();
    } catch (const birkhoff::Error& e) {
        return fail(static_cast<bl_status>(birkhoff::status_for(e.code())),
                    std::string(birkhoff::error_code_name(e.code())) + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(BL_INVALID_INPUT, std::string("InvalidInput: ") + e.what());
    } catch (const std::bad_alloc&) {
        return fail(BL_BUDGET_EXCEEDED, "BudgetExceeded: out of memory");
    } catch (const std::exception& e) {
        return fail(BL_INTERNAL_ERROR, std::string("Internal: ") + e.what());
    }
}

}  // namespace

extern "C" {

bl_status bl_session_create(const char* config_json, bl_session** out) {
    if (!out) return fail(BL_INVALID_INPUT, "InvalidInput: null output handle");
    *out = nullptr;
    return guarded([&] {
        auto s = std::make_unique<bl_session>();
        std::string_view text = config_json ? config_json : "{}";
        s->config = birkhoff::parse_config_text(text.empty() ? "{}" : text);
        *out = s.release();
        return BL_OK;
    });
}

void bl_session_destroy(bl_session* session) { delete session; }

bl_status bl_session_set_threads(bl_session* session, unsigned threads) {
    if (!session) return fail(BL_INVALID_INPUT, "InvalidInput: null session");
    if (threads < 1) return fail(BL_INVALID_INPUT, "InvalidInput: threads ≥ 1 required");
    session->threads = threads;
    return BL_OK;
}

bl_status bl_session_config(const bl_session* session, bl_result** out) {
    if (!session || !out) return fail(BL_INVALID_INPUT, "InvalidInput: null handle");
    *out = nullptr;
    return guarded([&] {
        auto r = std::make_unique<bl_result>();
        r->payload = birkhoff::dump_json(birkhoff::config_to_json(session->config));
        *out = r.release();
        return BL_OK;
    });
}

bl_status bl_execute(bl_session* session, const char* command, const char* params_json, const char* format,
                     bl_result** out) {
    if (!session || !command || !out) return fail(BL_INVALID_INPUT, "InvalidInput: null handle");
    *out = nullptr;
    return guarded([&] {
        birkhoff::Json params = birkhoff::Json::object();
        if (params_json && *params_json) {
            try {
                params = birkhoff::Json::parse(params_json);
            } catch (const nlohmann::json::parse_error& e) {
                throw birkhoff::Error(birkhoff::ErrorCode::InvalidInput, std::string("params are not valid JSON: ") + e.what());
            }
        }
        auto output = birkhoff::run_command(session->config, command, params, session->threads);
        auto r = std::make_unique<bl_result>();
        r->payload = birkhoff::render(output, format ? format : "json");
        r->message = output.summary;
        r->status = static_cast<bl_status>(output.status);
        auto status = r->status;
        *out = r.release();
        return status;
    });
}

bl_status bl_birkhoff_sum(const bl_session* session, const char* word, bl_result** out) {
    if (!session || !word || !out) return fail(BL_INVALID_INPUT, "InvalidInput: null handle");
    *out = nullptr;
    return guarded([&] {
        auto sft = session->config.sft();
        auto f = session->config.build_observable(sft);
        if (!f.is_exact()) throw birkhoff::Error(birkhoff::ErrorCode::InvalidInput, "exact sums need an exact-mode observable");
        if (!*word || !sft.cyclically_admissible(word))
            throw birkhoff::Error(birkhoff::ErrorCode::InvalidInput, std::string("\"") + word + "\" is not cyclically admissible");
        auto r = std::make_unique<bl_result>();
        r->payload = birkhoff::cyclic_sum(word, f).to_string();
        *out = r.release();
        return BL_OK;
    });
}

const char* bl_result_payload(const bl_result* result) { return result ? result->payload.c_str() : ""; }
size_t bl_result_size(const bl_result* result) { return result ? result->payload.size() : 0; }
const char* bl_result_message(const bl_result* result) { return result ? result->message.c_str() : ""; }
bl_status bl_result_status(const bl_result* result) { return result ? result->status : BL_INVALID_INPUT; }
void bl_result_destroy(bl_result* result) { delete result; }

const char* bl_last_error(void) { return last_error.c_str(); }
const char* bl_version(void) { return "0.1.0"; }

const char* bl_commands(void) {
    static const std::string joined = [] {
        std::string s;
        for (const auto& c : birkhoff::command_names()) s += (s.empty() ? "" : " ") + c;
        return s;
    }();
    return joined.c_str();
}

}  // extern "C"
