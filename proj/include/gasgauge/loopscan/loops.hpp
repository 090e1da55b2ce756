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
#include <string>
#include <vector>

#include "gasgauge/loopscan/cfg.hpp"

namespace gasgauge::loopscan {

enum class LoopKind { For, While };

struct LoopInfo {
    int loopId{-1};
    std::string functionName;
    int functionIndex{-1};
    int headerBlock{-1};
    std::vector<int> bodyBlocks;  // sorted, includes the header
    const frontend::Stmt* stmt{nullptr};
    const frontend::Expr* boundExpr{nullptr};
    Span span;
    LoopKind kind{LoopKind::For};
};

// One natural loop per back edge, ordered by loop id.
std::vector<LoopInfo> find_loops(const Cfg& cfg, const frontend::FunctionDecl& fn, int functionIndex = -1);

struct LoopForest {
    std::vector<LoopInfo> loops;          // ordered by loop id (source order)
    std::vector<int> roots;               // loop ids of outermost loops, source order
    std::map<int, int> childOf;           // loop id -> parent loop id
    std::map<int, std::vector<int>> children;

    [[nodiscard]] const LoopInfo& get(int loopId) const;
    [[nodiscard]] int depth(int loopId) const;  // outermost = 1
    [[nodiscard]] std::vector<int> ancestors(int loopId) const;    // nearest first
    [[nodiscard]] std::vector<int> descendants(int loopId) const;  // pre-order
    [[nodiscard]] std::vector<int> post_order() const;             // innermost first
};

// Throws Error{Internal} on bodies that overlap without nesting.
LoopForest loop_nesting(std::vector<LoopInfo> loops);

// Syntactic oracle: counts for/while statements and their nesting depth without a CFG.
int syntactic_loop_count(const frontend::FunctionDecl& fn);
std::map<int, int> syntactic_depths(const frontend::FunctionDecl& fn);

struct DetectedLoop {
    int loopId{-1};
    Span span;
    std::string location;  // "line:col-line:col" in the analyzed source
    int depth{1};
    LoopKind kind{LoopKind::For};
    std::string boundText;
};

struct DetectedFunction {
    std::string signature;
    int functionIndex{-1};
    frontend::Visibility visibility{frontend::Visibility::Public};
    std::vector<DetectedLoop> loops;
};

struct DetectionReport {
    std::vector<DetectedFunction> functions;  // functions without loops omitted
    std::map<int, LoopForest> forests;        // function index -> loop forest

    [[nodiscard]] std::size_t loop_count() const;
};

DetectionReport detection_report(const frontend::ContractAst& ast, const SourceFile& src);

std::string render_detection_text(const DetectionReport& report);

std::string_view to_string(LoopKind kind);

}  // namespace gasgauge::loopscan
