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

#include "gasgauge/loopscan/loops.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "gasgauge/frontend/printer.hpp"

namespace gasgauge::loopscan {

using frontend::Stmt;
using frontend::StmtKind;
using frontend::StmtList;

std::string_view to_string(LoopKind kind) { return kind == LoopKind::For ? "for" : "while"; }

std::vector<LoopInfo> find_loops(const Cfg& cfg, const frontend::FunctionDecl& fn, int functionIndex) {
    std::vector<int> idom = immediate_dominators(cfg);
    std::vector<std::vector<int>> preds(cfg.blocks.size());
    for (const auto& e : cfg.edges) {
        preds[static_cast<std::size_t>(e.to)].push_back(e.from);
    }

    std::vector<LoopInfo> loops;
    for (const auto& e : cfg.edges) {
        if (!dominates(idom, e.to, e.from)) {
            continue;
        }
        const BasicBlock& header = cfg.blocks[static_cast<std::size_t>(e.to)];
        if (!header.branch || (header.branch->kind != StmtKind::For && header.branch->kind != StmtKind::While)) {
            throw Error(ErrorKind::Internal, "back edge into a block that is not a loop header");
        }
        if (e.kind != EdgeKind::LoopBack) {
            throw Error(ErrorKind::Internal, "back edge not marked loop-back");
        }
        // Natural loop: the header plus everything reaching the latch without passing it.
        std::set<int> body{e.to};
        std::vector<int> work;
        if (body.insert(e.from).second) {
            work.push_back(e.from);
        }
        while (!work.empty()) {
            int b = work.back();
            work.pop_back();
            for (int p : preds[static_cast<std::size_t>(b)]) {
                if (body.insert(p).second) {
                    work.push_back(p);
                }
            }
        }
        LoopInfo info;
        info.loopId = header.branch->loopId;
        info.functionName = fn.name;
        info.functionIndex = functionIndex;
        info.headerBlock = e.to;
        info.bodyBlocks.assign(body.begin(), body.end());
        info.stmt = header.branch;
        info.boundExpr = header.branch->cond.get();
        info.span = header.branch->span;
        info.kind = header.branch->kind == StmtKind::For ? LoopKind::For : LoopKind::While;
        loops.push_back(std::move(info));
    }
    std::sort(loops.begin(), loops.end(), [](const LoopInfo& a, const LoopInfo& b) { return a.loopId < b.loopId; });
    return loops;
}

const LoopInfo& LoopForest::get(int loopId) const {
    for (const auto& l : loops) {
        if (l.loopId == loopId) {
            return l;
        }
    }
    throw Error(ErrorKind::Internal, "unknown loop id " + std::to_string(loopId));
}

int LoopForest::depth(int loopId) const {
    int d = 1;
    for (auto it = childOf.find(loopId); it != childOf.end(); it = childOf.find(it->second)) {
        ++d;
    }
    return d;
}

std::vector<int> LoopForest::ancestors(int loopId) const {
    std::vector<int> out;
    for (auto it = childOf.find(loopId); it != childOf.end(); it = childOf.find(it->second)) {
        out.push_back(it->second);
    }
    return out;
}

std::vector<int> LoopForest::descendants(int loopId) const {
    std::vector<int> out;
    std::vector<int> stack{loopId};
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        if (id != loopId) {
            out.push_back(id);
        }
        if (auto it = children.find(id); it != children.end()) {
            for (auto c = it->second.rbegin(); c != it->second.rend(); ++c) {
                stack.push_back(*c);
            }
        }
    }
    return out;
}

std::vector<int> LoopForest::post_order() const {
    std::vector<int> out;
    auto visit = [&](auto&& self, int id) -> void {
        if (auto it = children.find(id); it != children.end()) {
            for (int c : it->second) {
                self(self, c);
            }
        }
        out.push_back(id);
    };
    for (int r : roots) {
        visit(visit, r);
    }
    return out;
}

LoopForest loop_nesting(std::vector<LoopInfo> loops) {
    LoopForest forest;
    std::sort(loops.begin(), loops.end(), [](const LoopInfo& a, const LoopInfo& b) {
        return a.span.begin != b.span.begin ? a.span.begin < b.span.begin : a.loopId < b.loopId;
    });
    auto subset = [](const std::vector<int>& inner, const std::vector<int>& outer) {
        return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
    };
    for (std::size_t i = 0; i < loops.size(); ++i) {
        int parent = -1;
        std::size_t parentSize = 0;
        for (std::size_t j = 0; j < loops.size(); ++j) {
            if (i == j) {
                continue;
            }
            const auto& a = loops[i].bodyBlocks;
            const auto& b = loops[j].bodyBlocks;
            std::vector<int> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (common.empty()) {
                continue;
            }
            bool aInB = subset(a, b);
            bool bInA = subset(b, a);
            if (!aInB && !bInA) {
                throw Error(ErrorKind::Internal, "loops " + std::to_string(loops[i].loopId) + " and " +
                                                     std::to_string(loops[j].loopId) +
                                                     " overlap without nesting");
            }
            if (aInB && a.size() < b.size() && (parent < 0 || b.size() < parentSize)) {
                parent = loops[j].loopId;
                parentSize = b.size();
            }
        }
        if (parent < 0) {
            forest.roots.push_back(loops[i].loopId);
        } else {
            forest.childOf[loops[i].loopId] = parent;
            forest.children[parent].push_back(loops[i].loopId);
        }
    }
    std::sort(loops.begin(), loops.end(), [](const LoopInfo& a, const LoopInfo& b) { return a.loopId < b.loopId; });
    forest.loops = std::move(loops);
    return forest;
}

namespace {

void count_loops(const StmtList& list, int depth, std::map<int, int>& out) {
    for (const auto& s : list) {
        int inner = depth;
        if (s->kind == StmtKind::For || s->kind == StmtKind::While) {
            out[s->loopId] = depth + 1;
            inner = depth + 1;
        }
        count_loops(s->body, inner, out);
        count_loops(s->elseBody, inner, out);
    }
}

}  // namespace

std::map<int, int> syntactic_depths(const frontend::FunctionDecl& fn) {
    std::map<int, int> out;
    count_loops(fn.body, 0, out);
    return out;
}

int syntactic_loop_count(const frontend::FunctionDecl& fn) { return static_cast<int>(syntactic_depths(fn).size()); }

std::size_t DetectionReport::loop_count() const {
    std::size_t n = 0;
    for (const auto& f : functions) {
        n += f.loops.size();
    }
    return n;
}

DetectionReport detection_report(const frontend::ContractAst& ast, const SourceFile& src) {
    DetectionReport report;
    for (std::size_t fi = 0; fi < ast.functions.size(); ++fi) {
        const auto& fn = ast.functions[fi];
        Cfg cfg = build_cfg(fn);
        std::vector<LoopInfo> loops = find_loops(cfg, fn, static_cast<int>(fi));
        if (static_cast<int>(loops.size()) != syntactic_loop_count(fn)) {
            throw Error(ErrorKind::Internal, "CFG loop count disagrees with the syntax tree in " + fn.signature());
        }
        if (loops.empty()) {
            continue;
        }
        LoopForest forest = loop_nesting(std::move(loops));
        DetectedFunction df;
        df.signature = fn.signature();
        df.functionIndex = static_cast<int>(fi);
        df.visibility = fn.visibility;
        for (const auto& l : forest.loops) {
            df.loops.push_back({l.loopId, l.span, src.describe(l.span), forest.depth(l.loopId), l.kind,
                                frontend::print_expr(*l.boundExpr)});
        }
        report.functions.push_back(std::move(df));
        report.forests.emplace(static_cast<int>(fi), std::move(forest));
    }
    return report;
}

std::string render_detection_text(const DetectionReport& report) {
    std::size_t sigWidth = 9;
    for (const auto& f : report.functions) {
        sigWidth = std::max(sigWidth, f.signature.size());
    }
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(sigWidth)) << "function" << "  " << std::setw(5) << "loops"
        << "  " << std::setw(4) << "id" << "  " << std::setw(5) << "kind" << "  " << std::setw(5) << "depth"
        << "  " << std::setw(13) << "span" << "  bound\n";
    for (const auto& f : report.functions) {
        bool first = true;
        for (const auto& l : f.loops) {
            out << std::setw(static_cast<int>(sigWidth)) << (first ? f.signature : "") << "  " << std::setw(5)
                << (first ? std::to_string(f.loops.size()) : "") << "  " << std::setw(4) << l.loopId << "  "
                << std::setw(5) << to_string(l.kind) << "  " << std::setw(5) << l.depth << "  " << std::setw(13)
                << l.location << "  " << l.boundText << "\n";
            first = false;
        }
    }
    return out.str();
}

}  // namespace gasgauge::loopscan
