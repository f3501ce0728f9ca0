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

#include "birkhoff/io.hpp"
#include "birkhoff/meanpath.hpp"

namespace birkhoff {

/// Exit statuses shared by the C API and the command-line tool.
enum Status : int {
    kStatusOk = 0,
    kStatusNegative = 1,  // verdict negative, witness in the report
    kStatusInvalidInput = 2,
    kStatusBudgetExceeded = 3,
    kStatusIoFailure = 4,
    kStatusInternal = 5,
};

int status_for(ErrorCode code);

struct CommandOutput {
    int status = kStatusOk;
    Json report;
    std::optional<std::string> csv;  // tabular commands only
    std::string summary;
};

const std::vector<std::string>& command_names();

Json report_json(const SpectrumReport& report);
Json report_json(const MeanCycleResult& result);

/// Runs one command. params override config.params key by key.
CommandOutput run_command(const RunConfig& config, std::string_view command, const Json& params,
                          unsigned threads = 1);

/// "json" or "csv"; csv on a non-tabular command is an input error.
std::string render(const CommandOutput& out, std::string_view format);

}  // namespace birkhoff
