/*
   Copyright 2026 The gasgauge Authors

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

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gasgauge/frontend/sema.hpp"
#include "gasgauge/fuzzer/fuzzer.hpp"
#include "gasgauge/report/report.hpp"

namespace gasgauge::cli {

enum class Command { Detect, Identify, Correct, All };

Command parse_command(std::string_view text);
std::string_view to_string(Command c);

struct DriverOptions {
    Command command{Command::All};
    std::optional<gasvm::Gas> gasLimit;
    std::optional<std::filesystem::path> costModel;
    std::uint64_t seed{0};
    fuzzer::MutationStrategy strategy{fuzzer::MutationStrategy::BitFlip};
    std::uint32_t maxTries{10};
    bool restart{false};
    std::int64_t ceiling{5000};
    std::vector<int> loops;             // correction filter; empty = all
    std::map<std::string, U256> args;   // harness overrides for parameters and state
    bool tripleProbe{false};
    bool parallel{false};
};

struct DriverResult {
    report::AnalysisReport report;
    std::optional<SourceFile> patched;  // correction runs only
};

gasvm::GasCostModel resolve_model(const DriverOptions& options);

// Runs the phases selected by `options.command` on a loaded contract.
DriverResult analyze(const frontend::LoadedContract& contract, const DriverOptions& options);

// 0: no loops, 1: loops found.
int exit_code(const report::AnalysisReport& r);

// Parses `key=value`; values are decimal or 0x-hex.
std::pair<std::string, U256> parse_arg(std::string_view text);

// Full command line, including argv[0]. Errors go to `err` and give exit code 2.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gasgauge::cli
