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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gasgauge/gasvm/interpreter.hpp"
#include "gasgauge/loopscan/loops.hpp"

namespace gasgauge::threshold {

using gasvm::Gas;

struct ThresholdParams {
    std::int64_t lower{0};
    std::int64_t upper{5000};  // also the extrapolation ceiling
    bool tripleProbe{false};   // probe guess-1, guess, guess+1 concurrently
};

enum class Method { Exact, Estimated };
std::string_view to_string(Method m);

struct ThresholdResult {
    int loopId{-1};
    Method method{Method::Estimated};
    std::int64_t threshold{0};
    std::int64_t estimate{0};  // two-iteration estimate
    Gas initialGas{0};
    Gas gas1{0};
    Gas gas2{0};
    Gas internal{0};  // per-outer-iteration gas of descendant loops; 0 for leaf loops
    bool nestedOuter{false};
    std::string formulaText;
    std::uint32_t probes{0};
    bool nonUniform{false};  // 16-iteration sample mean deviates > 10% from gas2
    std::vector<std::string> notes;
    std::string failure;  // set when no threshold could be produced
};

std::string formula_text(Gas gas1, Gas gas2, std::optional<Gas> internal);

// 1 + floor((initialGas - gas1) / gas2). Throws Error{Analysis} when gas2 == 0.
std::int64_t estimate_threshold(const gasvm::MeasureTwoResult& m);

struct HarnessOptions {
    std::int64_t ceiling{5000};
    U256 fill{1};
    std::map<std::string, U256> args;  // parameter name -> value (arrays: declared size)
};

// Isolates one loop: ancestors ForceCount(1), every other loop of the owning function
// Disabled; loops in callees run naturally. Array parameters and state arrays hold
// ceiling + 2 elements of `fill` so forced iterations stay in bounds; scalar
// parameters are `fill` too. `args` overrides either; names that are parameters of
// other functions are skipped, unknown names throw Error{Analysis}.
class ProbeHarness {
  public:
    ProbeHarness(const frontend::ContractAst& ast, const loopscan::LoopForest& forest, int loopId,
                 const gasvm::GasCostModel& model, const HarnessOptions& options = {});

    [[nodiscard]] gasvm::ExecOutcome probe(std::int64_t n) const;  // ForceCount(n) on the target
    [[nodiscard]] gasvm::Execution run_with(const gasvm::Overrides& target) const;
    [[nodiscard]] gasvm::MeasureKResult measure(std::uint64_t k) const;

    [[nodiscard]] int loop_id() const { return loopId_; }
    [[nodiscard]] const gasvm::CallSpec& call() const { return call_; }
    [[nodiscard]] const gasvm::Overrides& base_overrides() const { return base_; }
    [[nodiscard]] const gasvm::GasCostModel& model() const { return model_; }
    [[nodiscard]] const frontend::ContractAst& ast() const { return ast_; }
    [[nodiscard]] const std::vector<int>& descendants() const { return descendants_; }

    // Copy whose descendant loops run naturally instead of Disabled.
    [[nodiscard]] ProbeHarness with_descendants_natural() const;
    [[nodiscard]] ProbeHarness with_limit(Gas blockGasLimit) const;

  private:
    const frontend::ContractAst& ast_;
    gasvm::GasCostModel model_;
    int loopId_;
    gasvm::CallSpec call_;
    gasvm::Overrides base_;
    std::vector<int> descendants_;
};

struct TripleOutcome {
    std::optional<gasvm::ExecOutcome> below;  // guess - 1; absent when guess == 0
    gasvm::ExecOutcome at;
    gasvm::ExecOutcome above;
};

// The three probes run concurrently when `parallel`; results equal sequential probing.
TripleOutcome triple_probe(const ProbeHarness& h, std::int64_t guess, bool parallel = true);

ThresholdResult extrapolate_threshold(const gasvm::MeasureTwoResult& m, Gas gasAtCeilingLeft, Gas consumedByCeiling,
                                      const ThresholdParams& params);

// Binary search from `estimate`; delegates to extrapolation once lower reaches the ceiling.
ThresholdResult search_threshold(const ProbeHarness& h, const gasvm::MeasureTwoResult& m, std::int64_t estimate,
                                 const ThresholdParams& params);

struct CorrectionOptions {
    ThresholdParams params;
    HarnessOptions harness;
    std::uint64_t averageK{2};  // iterations averaged into gas2
    bool parallel{false};       // spread loops across threads
    bool verify{true};          // re-probe T and T+1 of exact results
};

// Measure, estimate, search and (for loops with descendants) compute Internal.
ThresholdResult analyze_loop(const frontend::ContractAst& ast, const loopscan::LoopForest& forest, int loopId,
                             const gasvm::GasCostModel& model, const CorrectionOptions& options);

// Innermost loops first, then outward (post-order of the forest).
std::vector<ThresholdResult> nested_thresholds(const frontend::ContractAst& ast, const loopscan::LoopForest& forest,
                                               const gasvm::GasCostModel& model, const CorrectionOptions& options);

// Every loop of every function in `forests`, ordered by loop id. `onlyLoops` filters when non-empty.
std::vector<ThresholdResult> correct_all(const frontend::ContractAst& ast,
                                         const std::map<int, loopscan::LoopForest>& forests,
                                         const gasvm::GasCostModel& model, const CorrectionOptions& options,
                                         const std::vector<int>& onlyLoops = {});

}  // namespace gasgauge::threshold
