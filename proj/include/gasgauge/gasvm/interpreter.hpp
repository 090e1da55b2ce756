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
#include <string>
#include <variant>
#include <vector>

#include "gasgauge/frontend/ast.hpp"
#include "gasgauge/gasvm/cost_model.hpp"

namespace gasgauge::gasvm {

// Dynamic array with a declared length that may exceed what is materialized.
// Elements past `dense` come from `sparse`, then `fill`.
struct ArrayValue {
    U256 length{0};
    std::vector<U256> dense;
    std::map<U256, U256> sparse;
    U256 fill{0};

    static ArrayValue of(std::vector<U256> elems);
    static ArrayValue lazy(const U256& length, const U256& fill);

    [[nodiscard]] U256 get(const U256& index) const;  // pre: index < length
    void set(const U256& index, const U256& v);       // pre: index < length
    void push(const U256& v);

    friend bool operator==(const ArrayValue&, const ArrayValue&) = default;
};

using Mapping = std::map<U256, U256>;
using Value = std::variant<U256, ArrayValue, Mapping>;

struct CallSpec {
    std::string function;  // name or full signature
    std::vector<Value> args;
    std::map<std::string, Value> storageSeed;  // applied after deployment
};

struct LoopOverride {
    enum class Kind { ForceCount, Disable, Measure };
    Kind kind{Kind::ForceCount};
    std::uint64_t count{0};  // ForceCount: iterations; Measure: iterations to sample

    static LoopOverride force(std::uint64_t n) { return {Kind::ForceCount, n}; }
    static LoopOverride disable() { return {Kind::Disable, 0}; }
    static LoopOverride measure_two() { return {Kind::Measure, 2}; }
    static LoopOverride measure(std::uint64_t k) { return {Kind::Measure, k}; }
};

using Overrides = std::map<int, LoopOverride>;

struct Completed {
    Gas gasLeft{0};
    Gas gasUsed{0};
    std::optional<U256> returnValue;
};
struct OutOfGas {
    Span span;  // statement whose charge crossed the limit
};
struct Reverted {
    std::string message;
    Span span;
};
struct IterationCapExceeded {
    int loopId{-1};
};

using ExecOutcome = std::variant<Completed, OutOfGas, Reverted, IterationCapExceeded>;

std::string describe(const ExecOutcome& o);
[[nodiscard]] inline bool is_completed(const ExecOutcome& o) { return std::holds_alternative<Completed>(o); }
[[nodiscard]] inline bool is_oog(const ExecOutcome& o) { return std::holds_alternative<OutOfGas>(o); }

// Per-iteration gas of a measured loop; iteration boundaries are re-entries of the header.
struct LoopSample {
    int loopId{-1};
    Gas initialGas{0};                 // gasleft() after the for-init, before loop entry
    std::vector<Gas> iterationGas;     // iteration 1 includes loop entry
    std::uint64_t requested{0};
    [[nodiscard]] bool complete() const { return iterationGas.size() >= requested; }
};

struct TraceRecord {
    Span span;             // statement being executed
    std::string_view what; // cost category
    Gas cost{0};
    Gas cumulative{0};
};

struct Execution {
    ExecOutcome outcome;
    Gas gasUsed{0};  // at completion or abort
    std::optional<LoopSample> sample;
    std::map<int, std::uint64_t> iterations;  // loop id -> iterations executed
    std::vector<TraceRecord> trace;
};

struct RunOptions {
    bool trace{false};
};

// Deploys a fresh contract (state initializers, then a parameterless constructor body,
// uncharged), applies the storage seed, charges txBase and runs the call.
Execution run(const frontend::ContractAst& ast, const CallSpec& call, const GasCostModel& model,
              const Overrides& overrides = {}, RunOptions options = {});

ExecOutcome execute(const frontend::ContractAst& ast, const CallSpec& call, const GasCostModel& model,
                    const Overrides& overrides = {});

struct MeasureTwoResult {
    Gas initialGas{0};
    Gas gas1{0};
    Gas gas2{0};
};

struct MeasureKResult {
    Gas initialGas{0};
    std::vector<Gas> iterationGas;
    Gas gas1{0};
    Gas gas2{0};  // floor of the mean over iterations 2..k
};

class MeasurementError : public Error {
  public:
    MeasurementError(std::string message, std::optional<LoopSample> partial, ExecOutcome outcome)
        : Error(ErrorKind::Analysis, std::move(message)), partial_(std::move(partial)), outcome_(std::move(outcome)) {}
    [[nodiscard]] const std::optional<LoopSample>& partial() const { return partial_; }
    [[nodiscard]] const ExecOutcome& outcome() const { return outcome_; }

  private:
    std::optional<LoopSample> partial_;
    ExecOutcome outcome_;
};

// Other loops follow `others`; the measured loop is forced to k iterations while sampled.
MeasureTwoResult measure_two(const frontend::ContractAst& ast, const CallSpec& call, const GasCostModel& model,
                             int loopId, const Overrides& others = {});
MeasureKResult measure_k(const frontend::ContractAst& ast, const CallSpec& call, const GasCostModel& model,
                         int loopId, std::uint64_t k, const Overrides& others = {});

// Cost of evaluating `e` in full (no short-circuit, callee bodies excluded); charged
// for the original condition at every header check of a counter-driven loop.
Gas static_cost(const frontend::Expr& e, const GasCostModel& model);

std::string format_trace(const std::vector<TraceRecord>& trace, const SourceFile& src);

}  // namespace gasgauge::gasvm
