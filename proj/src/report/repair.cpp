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

#include "gasgauge/report/repair.hpp"

#include <algorithm>

#include "gasgauge/frontend/printer.hpp"
#include "gasgauge/frontend/sema.hpp"

namespace gasgauge::report {

using frontend::BinOp;
using frontend::Expr;
using frontend::ExprKind;
using frontend::RefKind;

std::string guard_text(std::string_view bound, threshold::Gas gas1, threshold::Gas gas2,
                       std::optional<threshold::Gas> internal) {
    return "require(" + std::string(bound) + " < " + threshold::formula_text(gas1, gas2, internal) + ", \"" +
           std::string(kGuardMessage) + "\");";
}

namespace {

bool is_counter(const Expr& e) { return e.kind == ExprKind::Ident && e.ref.kind == RefKind::Local; }

bool mentions_local(const Expr& e, int localIndex) {
    bool found = false;
    frontend::for_each_expr(e, [&](const Expr& x) {
        found = found || (x.kind == ExprKind::Ident && x.ref.kind == RefKind::Local && x.ref.index == localIndex);
    });
    return found;
}

}  // namespace

std::optional<std::string> printable_bound(const frontend::Stmt& loop, const depgraph::BoundVarSet& bound,
                                           std::string& reason) {
    const Expr& c = *loop.cond;
    if (c.kind != ExprKind::Binary) {
        reason = "loop condition is not a comparison";
        return std::nullopt;
    }
    const Expr* counter = nullptr;
    const Expr* limit = nullptr;
    bool inclusive = false;
    if ((c.op == BinOp::Lt || c.op == BinOp::Le) && is_counter(*c.kids[0])) {
        counter = c.kids[0].get();
        limit = c.kids[1].get();
        inclusive = c.op == BinOp::Le;
    } else if ((c.op == BinOp::Gt || c.op == BinOp::Ge) && is_counter(*c.kids[1])) {
        counter = c.kids[1].get();
        limit = c.kids[0].get();
        inclusive = c.op == BinOp::Ge;
    } else {
        reason = "loop condition does not compare a counter against a bound";
        return std::nullopt;
    }
    if (mentions_local(*limit, counter->ref.index)) {
        reason = "bound expression depends on the loop counter";
        return std::nullopt;
    }
    if (loop.init && loop.init->kind == frontend::StmtKind::VarDecl && mentions_local(*limit, loop.init->localIndex)) {
        reason = "bound expression uses a variable declared by the loop";
        return std::nullopt;
    }
    bool unsupported = false;
    frontend::for_each_expr(*limit, [&](const Expr& e) {
        unsupported = unsupported || e.kind == ExprKind::Call || e.kind == ExprKind::GasLeft;
    });
    if (unsupported) {
        reason = "bound expression calls a function or reads gasleft()";
        return std::nullopt;
    }
    for (const auto& v : bound.vars) {
        if (v.unboundedIterable) {
            reason = "bound iterates a mapping";
            return std::nullopt;
        }
    }
    frontend::for_each_expr(*limit, [&](const Expr& e) {
        if (e.kind == ExprKind::Ident && e.ref.kind == RefKind::Local) {
            if (const auto* v = bound.find(e.name); v && v->unrooted) {
                unsupported = true;
            }
        }
    });
    if (unsupported) {
        reason = "bound depends on an unrooted local";
        return std::nullopt;
    }
    std::string text = frontend::print_expr(*limit);
    if (inclusive) {
        text = (limit->kind == ExprKind::Binary ? "(" + text + ")" : text) + " + 1";
    }
    return text;
}

GuardPatch emit_require(const loopscan::LoopInfo& loop, const threshold::ThresholdResult& result,
                        const depgraph::BoundVarSet& bound, const SourceFile& src) {
    GuardPatch p;
    p.loopId = loop.loopId;
    Location loc = src.location(loop.span.begin);
    p.line = loc.line;
    p.offset = src.line_index().at(loc.line - 1);
    p.indent = std::string(src.content().substr(p.offset, loop.span.begin - p.offset));
    if (p.indent.find_first_not_of(" \t") != std::string::npos) {
        p.omittedReason = "loop does not start its own line";
        return p;
    }
    if (!result.failure.empty() || result.gas2 == 0) {
        p.omittedReason = "no threshold available";
        return p;
    }
    std::string reason;
    auto text = printable_bound(*loop.stmt, bound, reason);
    if (!text) {
        p.omittedReason = reason;
        return p;
    }
    p.boundExprText = *text;
    p.guardText = guard_text(*text, result.gas1, result.gas2,
                             result.nestedOuter ? std::optional<threshold::Gas>(result.internal) : std::nullopt);
    return p;
}

namespace {

std::size_t count_loops(const frontend::ContractAst& ast) { return ast.loops.size(); }

}  // namespace

SourceFile apply_patches(const SourceFile& src, std::vector<GuardPatch> patches) {
    patches.erase(std::remove_if(patches.begin(), patches.end(), [](const GuardPatch& p) { return !p.ok(); }),
                  patches.end());
    std::stable_sort(patches.begin(), patches.end(),
                     [](const GuardPatch& a, const GuardPatch& b) { return a.offset > b.offset; });
    std::string text = src.content();
    for (const auto& p : patches) {
        if (p.offset > text.size()) {
            throw Error(ErrorKind::Patch, "patch offset lies outside the file");
        }
        text.insert(p.offset, p.indent + p.guardText + "\n");
    }
    SourceFile patched(src.path(), std::move(text));
    try {
        frontend::ContractAst before = frontend::parse_checked(src);
        frontend::ContractAst after = frontend::parse_checked(patched);
        if (count_loops(before) != count_loops(after)) {
            throw Error(ErrorKind::Patch, "patched contract has a different loop count");
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Patch) {
            throw;
        }
        throw Error(ErrorKind::Patch, std::string("patched contract does not reparse: ") + e.what());
    }
    return patched;
}

SourceFile apply_patch(const SourceFile& src, const GuardPatch& patch) {
    if (!patch.ok()) {
        throw Error(ErrorKind::Patch, "loop " + std::to_string(patch.loopId) + " has no guard: " + patch.omittedReason);
    }
    return apply_patches(src, {patch});
}

}  // namespace gasgauge::report
