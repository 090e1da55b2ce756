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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gasgauge/depgraph/depgraph.hpp"
#include "gasgauge/frontend/sema.hpp"
#include "gasgauge/loopscan/loops.hpp"
#include "gasgauge/report/repair.hpp"
#include "gasgauge/threshold/threshold.hpp"

namespace gasgauge::testing {

// Corpus files carry ground truth in their leading comments:
//   // @loops sig=N sig=N ...
//   // @targets sig sig ...
struct CorpusFile {
    std::string name;
    SourceFile source;
    std::map<std::string, int> loops;
    std::set<std::string> targets;
};

std::vector<CorpusFile> load_corpus();
SourceFile corpus_source(const std::string& name);
frontend::LoadedContract load_corpus_contract(const std::string& name);
frontend::LoadedContract load_text(const std::string& text, const std::string& path = "inline.msol");

struct Analyzed {
    frontend::LoadedContract contract;
    loopscan::DetectionReport detection;
    std::vector<depgraph::BoundVarSet> bounds;

    [[nodiscard]] const loopscan::LoopForest& forest_of(int loopId) const;
    [[nodiscard]] const depgraph::BoundVarSet& bound_of(int loopId) const;
};

Analyzed analyze(frontend::LoadedContract contract);

// Oracle: ForceCount(n) for n = 0, 1, ... until the first OutOfGas; -1 if n = 0 already fails.
// Returns nullopt when no OutOfGas appears up to `maxN` or a probe reverts.
std::optional<std::int64_t> linear_scan_threshold(const threshold::ProbeHarness& h, std::int64_t maxN);

// A parameter or state variable that sets a loop's iteration count when the loop runs
// without instrumentation.
struct BoundKnob {
    std::string name;
    bool isState{false};
    bool isArray{false};
    int paramIndex{-1};
};

std::optional<BoundKnob> bound_knob(const frontend::ContractAst& ast, const depgraph::BoundVarSet& bound);

// The harness call with the knob set to `value`.
gasvm::CallSpec with_knob(const threshold::ProbeHarness& h, const BoundKnob& knob, const U256& value);

// Iterations the target loop runs naturally (other loops as in the harness) under the
// largest knob value that still completes. nullopt if the knob never reaches OutOfGas
// or runs revert.
struct NaturalBoundary {
    std::uint64_t knobValue{0};
    std::uint64_t iterations{0};
};
std::optional<NaturalBoundary> natural_boundary(const threshold::ProbeHarness& h, const BoundKnob& knob,
                                                std::uint64_t maxValue = 1u << 22);

// Applies `patch` alone, then runs the unpatched and patched contracts with the knob at
// 0..maxN and the target loop running naturally. A knob value is rejected when the patched
// call reverts with the guard message before the loop; otherwise both outcomes must agree
// and neither may run out of gas. Rejection must be upward closed in the iterations the
// unpatched call runs.
struct SweepResult {
    int admitted{0};
    int rejected{0};
    std::vector<std::string> violations;
};
SweepResult guard_sweep(const Analyzed& original, const report::GuardPatch& patch, const BoundKnob& knob,
                        const gasvm::GasCostModel& model, const threshold::HarnessOptions& options,
                        std::uint64_t maxN);
// Same over an ascending list of knob values.
SweepResult guard_sweep(const Analyzed& original, const report::GuardPatch& patch, const BoundKnob& knob,
                        const gasvm::GasCostModel& model, const threshold::HarnessOptions& options,
                        const std::vector<std::uint64_t>& values);

}  // namespace gasgauge::testing
