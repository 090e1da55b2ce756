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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace gasgauge::report {

// Plain-data form of a full analysis; the JSON report is its canonical serialization.

struct RootEntry {
    std::string name;
    std::string cls;
    std::string type;
    friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

struct BoundVarEntry {
    std::string name;
    std::string cls;
    std::string type;
    std::vector<RootEntry> roots;
    std::vector<std::string> flags;  // "unrooted", "unbounded-iterable"
    friend bool operator==(const BoundVarEntry&, const BoundVarEntry&) = default;
};

struct LoopEntry {
    int id{-1};
    std::string span;
    std::uint32_t line{0};
    int depth{1};
    std::string kind;      // for | while
    std::string loopType;  // Normal/Single | Nested
    std::string bound;
    std::vector<BoundVarEntry> boundVars;
    std::vector<std::string> crossFunctionWriters;
    std::vector<std::string> notes;
    friend bool operator==(const LoopEntry&, const LoopEntry&) = default;
};

struct FunctionEntry {
    std::string signature;
    std::string visibility;
    std::vector<LoopEntry> loops;
    friend bool operator==(const FunctionEntry&, const FunctionEntry&) = default;
};

struct DetectionSection {
    std::vector<FunctionEntry> functions;
    friend bool operator==(const DetectionSection&, const DetectionSection&) = default;
};

struct WitnessEntry {
    std::string name;
    std::string type;
    std::string value;  // decimal; arrays give their declared size
    bool truncated{false};
    friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

struct TargetEntry {
    std::string signature;
    std::vector<std::string> influencingInputs;  // "name: type"
    std::vector<int> loopIds;
    std::string status;
    std::vector<WitnessEntry> witness;
    std::uint32_t tries{0};
    std::vector<std::string> outcomes;
    std::string reason;
    friend bool operator==(const TargetEntry&, const TargetEntry&) = default;
};

struct IdentificationSection {
    std::string strategy;
    std::uint64_t seed{0};
    std::uint32_t maxTries{0};
    bool restart{false};
    std::vector<TargetEntry> targets;
    friend bool operator==(const IdentificationSection&, const IdentificationSection&) = default;
};

struct ThresholdEntry {
    int loopId{-1};
    std::string signature;
    std::string loopType;
    std::string method;
    std::int64_t threshold{0};
    std::int64_t estimate{0};
    std::uint64_t initialGas{0};
    std::uint64_t gas1{0};
    std::uint64_t gas2{0};
    std::uint64_t internal{0};
    std::string formula;
    std::uint32_t probes{0};
    bool nonUniform{false};
    std::vector<std::string> notes;
    std::string failure;
    friend bool operator==(const ThresholdEntry&, const ThresholdEntry&) = default;
};

struct PatchEntry {
    int loopId{-1};
    std::uint32_t line{0};
    std::string guard;
    std::string bound;
    std::string omitted;
    friend bool operator==(const PatchEntry&, const PatchEntry&) = default;
};

struct CorrectionSection {
    std::int64_t ceiling{5000};
    std::vector<ThresholdEntry> loops;
    std::vector<PatchEntry> patches;
    friend bool operator==(const CorrectionSection&, const CorrectionSection&) = default;
};

struct AnalysisReport {
    std::string tool{"gasgauge"};
    int schemaVersion{1};
    std::string command;
    std::string file;
    std::string contract;
    std::uint64_t gasLimit{0};
    std::optional<DetectionSection> detection;
    std::optional<IdentificationSection> identification;
    std::optional<CorrectionSection> correction;
    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;

    [[nodiscard]] std::size_t loop_count() const;
};

using Json = nlohmann::ordered_json;

Json to_json(const AnalysisReport& r);
AnalysisReport from_json(const Json& j);  // throws Error{Io} on schema mismatch

enum class Format { Json, Text };
Format parse_format(std::string_view text);

std::string render_report(const AnalysisReport& r, Format format);

}  // namespace gasgauge::report
