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

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

bool write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << data;
    return static_cast<bool>(out.flush());
}

// "key=value": value is JSON when it parses, a plain string otherwise.
bool apply_set(json& params, const std::string& kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) return false;
    std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    json parsed = json::parse(value, nullptr, false);
    params[key] = parsed.is_discarded() ? json(value) : parsed;
    return true;
}

std::string utc_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

int input_error(const std::string& message) {
    std::cerr << "birkhoff-lab: InvalidInput: " << message << "\n";
    return BL_INVALID_INPUT;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Birkhoff spectra of locally constant observables on subshifts of finite type"};
    app.set_version_flag("--version", std::string(bl_version()));

    std::string command, config_path, output_path, format = "json", params_text;
    std::vector<std::string> sets;
    int n_max = 0;
    int threads = 0;
    bool list = false;
    app.add_option("command", command, "Command to run (see --list)");
    app.add_option("--config,-c", config_path, "JSON config: shift, observable, optional roof/params/budget");
    app.add_option("--n-max", n_max, "Period bound n_max");
    app.add_option("--threads", threads, "Worker threads (fallback: BIRKHOFF_LAB_THREADS)");
    app.add_option("--output,-o", output_path, "Write the report here (sidecar: <output>.meta.json)");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--params", params_text, "Command parameters as a JSON object, or @file");
    app.add_option("--set", sets, "Single parameter key=value (repeatable)");
    app.add_flag("--list", list, "List commands");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : BL_INVALID_INPUT;
    }

    if (list) {
        std::cout << bl_commands() << "\n";
        return 0;
    }
    if (command.empty()) return input_error("a command is required (see --list)");

    std::string config_text = "{}";
    if (!config_path.empty() && !read_file(config_path, config_text))
        return input_error("cannot read config \"" + config_path + "\"");

    json params = json::object();
    if (!params_text.empty()) {
        std::string text = params_text;
        if (text.front() == '@' && !read_file(text.substr(1), text))
            return input_error("cannot read params file \"" + params_text.substr(1) + "\"");
        params = json::parse(text, nullptr, false);
        if (params.is_discarded() || !params.is_object()) return input_error("--params must be a JSON object");
    }
    for (const auto& kv : sets)
        if (!apply_set(params, kv)) return input_error("--set expects key=value, got \"" + kv + "\"");
    if (app.count("--n-max")) params["n_max"] = n_max;

    if (!app.count("--threads")) {
        threads = 1;
        if (const char* env = std::getenv("BIRKHOFF_LAB_THREADS")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end == env || *end != '\0' || v < 1) return input_error("BIRKHOFF_LAB_THREADS must be a positive integer");
            threads = static_cast<int>(v);
        }
    }
    if (threads < 1) return input_error("threads ≥ 1 required");

    bl_session* session = nullptr;
    if (bl_session_create(config_text.c_str(), &session) != BL_OK) {
        std::cerr << "birkhoff-lab: " << bl_last_error() << "\n";
        return BL_INVALID_INPUT;
    }
    bl_session_set_threads(session, static_cast<unsigned>(threads));

    auto start = std::chrono::steady_clock::now();
    bl_result* result = nullptr;
    std::string params_json = params.dump();
    bl_status status = bl_execute(session, command.c_str(), params_json.c_str(), format.c_str(), &result);
    auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (!result) {
        std::cerr << "birkhoff-lab: " << bl_last_error() << "\n";
        bl_session_destroy(session);
        return status;
    }

    std::string payload(bl_result_payload(result), bl_result_size(result));
    if (output_path.empty()) {
        std::cout << payload;
    } else {
        json meta = {{"command", command},
                     {"config", config_path},
                     {"format", format},
                     {"threads", threads},
                     {"version", bl_version()},
                     {"status", static_cast<int>(status)},
                     {"started_utc", utc_now()},
                     {"elapsed_ms", elapsed}};
        if (!write_file(output_path, payload) || !write_file(output_path + ".meta.json", meta.dump(2) + "\n")) {
            std::cerr << "birkhoff-lab: IoFailure: cannot write \"" << output_path << "\"\n";
            bl_result_destroy(result);
            bl_session_destroy(session);
            return BL_IO_FAILURE;
        }
    }
    std::cerr << command << ": " << bl_result_message(result) << "\n";
    bl_result_destroy(result);
    bl_session_destroy(session);
    return status;
}
