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

#include <vector>

#include "gasgauge/frontend/ast.hpp"

namespace gasgauge::loopscan {

enum class EdgeKind { Seq, TrueBranch, FalseBranch, LoopBack };

struct BasicBlock {
    int id{-1};
    std::vector<const frontend::Stmt*> stmts;  // straight-line statements, in order
    const frontend::Stmt* branch{nullptr};     // if/while/for whose condition ends this block
    bool isExit{false};
};

struct Edge {
    int from{-1};
    int to{-1};
    EdgeKind kind{EdgeKind::Seq};
};

struct Cfg {
    std::vector<BasicBlock> blocks;
    std::vector<Edge> edges;
    int entry{0};
    int exit{-1};

    [[nodiscard]] std::vector<int> successors(int block) const;
    [[nodiscard]] std::vector<int> predecessors(int block) const;
    // Blocks other than the synthetic exit.
    [[nodiscard]] int body_block_count() const { return static_cast<int>(blocks.size()) - 1; }
    [[nodiscard]] int count_edges(EdgeKind kind) const;
};

// for-loops desugar to init (in the preceding block) + a header holding only the condition;
// the update statement closes the body and carries the loop-back edge.
Cfg build_cfg(const frontend::FunctionDecl& fn);

// Cooper-Harvey-Kennedy iterative dominators. idom[entry] == entry; unreachable blocks get -1.
std::vector<int> immediate_dominators(const Cfg& cfg);
bool dominates(const std::vector<int>& idom, int a, int b);

}  // namespace gasgauge::loopscan
