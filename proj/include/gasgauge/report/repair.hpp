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

#include <optional>
#include <string>
#include <vector>

#include "gasgauge/depgraph/depgraph.hpp"
#include "gasgauge/loopscan/loops.hpp"
#include "gasgauge/threshold/threshold.hpp"

namespace gasgauge::report {

inline constexpr std::string_view kGuardMessage = "Loop bound is over the threshold!";

struct GuardPatch {
    int loopId{-1};
    std::uint32_t line{0};    // 1-based line of the loop statement; the guard goes right above it
    std::uint32_t offset{0};  // byte offset of that line's start
    std::string indent;
    std::string guardText;
    std::string boundExprText;
    std::string omittedReason;  // non-empty when no guard can be written

    [[nodiscard]] bool ok() const { return omittedReason.empty(); }
};

std::string guard_text(std::string_view bound, threshold::Gas gas1, threshold::Gas gas2,
                       std::optional<threshold::Gas> internal = std::nullopt);

// The iteration-count expression of `i < E`, `i <= E`, `E > i` or `E >= i` loops, in
// terms visible right before the loop. Empty with `reason` set otherwise.
std::optional<std::string> printable_bound(const frontend::Stmt& loop, const depgraph::BoundVarSet& bound,
                                           std::string& reason);

GuardPatch emit_require(const loopscan::LoopInfo& loop, const threshold::ThresholdResult& result,
                        const depgraph::BoundVarSet& bound, const SourceFile& src);

// Inserts the guard on its own line; throws Error{Patch} if the result no longer
// type-checks or its loop count changes.
SourceFile apply_patch(const SourceFile& src, const GuardPatch& patch);
SourceFile apply_patches(const SourceFile& src, std::vector<GuardPatch> patches);

}  // namespace gasgauge::report
