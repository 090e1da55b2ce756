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

#include "gasgauge/depgraph/depgraph.hpp"

#include <algorithm>
#include <set>

namespace gasgauge::depgraph {

using frontend::ContractAst;
using frontend::Expr;
using frontend::ExprKind;
using frontend::FunctionDecl;
using frontend::RefKind;
using frontend::Stmt;
using frontend::StmtKind;

std::string_view to_string(VarClass c) {
    switch (c) {
        case VarClass::State: return "State";
        case VarClass::Local: return "Local";
        case VarClass::Fixed: return "Fixed";
        case VarClass::Input: return "Input";
    }
    return "?";
}

const BoundVar* BoundVarSet::find(std::string_view name) const {
    for (const auto& v : vars) {
        if (v.name == name) {
            return &v;
        }
    }
    return nullptr;
}

std::vector<Root> BoundVarSet::all_roots() const {
    std::vector<Root> out;
    auto add = [&](const Root& r) {
        if (std::find(out.begin(), out.end(), r) == out.end()) {
            out.push_back(r);
        }
    };
    for (const auto& v : vars) {
        if (v.cls == VarClass::Local) {
            for (const auto& r : v.roots) {
                add(r);
            }
        } else {
            add({v.name, v.cls, v.type});
        }
    }
    return out;
}

bool BoundVarSet::has_input_root() const {
    auto roots = all_roots();
    return std::any_of(roots.begin(), roots.end(), [](const Root& r) { return r.cls == VarClass::Input; });
}

namespace {

std::string literal_text(const Expr& e) {
    if (e.kind == ExprKind::Bool) {
        return e.value != 0 ? "true" : "false";
    }
    return e.name.empty() ? gasgauge::to_string(e.value) : e.name;
}

std::string ident_type(const Expr& e, const FunctionDecl& fn, const ContractAst& ast) {
    switch (e.ref.kind) {
        case RefKind::Param: return type_name(fn.params[static_cast<std::size_t>(e.ref.index)].type);
        case RefKind::Local: return type_name(fn.locals[static_cast<std::size_t>(e.ref.index)].type);
        case RefKind::State: return type_name(ast.stateVars[static_cast<std::size_t>(e.ref.index)].type);
        default: return type_name(e.type);
    }
}

bool is_local_target(const Expr& target, int localIndex) {
    return target.kind == ExprKind::Ident && target.ref.kind == RefKind::Local && target.ref.index == localIndex;
}

// Variable whose storage a statement writes, if it is a state variable.
int written_state(const Stmt& s) {
    const Expr* t = s.target.get();
    if (!t) {
        return -1;
    }
    if (s.kind != StmtKind::Assign && s.kind != StmtKind::IncDec && s.kind != StmtKind::Push) {
        return -1;
    }
    if (t->kind == ExprKind::Index) {
        t = t->kids[0].get();
    }
    return t->kind == ExprKind::Ident && t->ref.kind == RefKind::State ? t->ref.index : -1;
}

}  // namespace

Induction induct_local(int localIndex, const FunctionDecl& fn, const ContractAst& ast) {
    Induction out;
    std::set<int> visited;
    std::vector<int> work{localIndex};
    auto add = [&](Root r) {
        if (std::find(out.roots.begin(), out.roots.end(), r) == out.roots.end()) {
            out.roots.push_back(std::move(r));
        }
    };
    auto scan = [&](const Expr& rhs) {
        frontend::for_each_expr(rhs, [&](const Expr& e) {
            if (e.kind == ExprKind::Number || e.kind == ExprKind::Bool) {
                add({literal_text(e), VarClass::Fixed, type_name(e.type)});
            } else if (e.kind == ExprKind::Ident) {
                switch (e.ref.kind) {
                    case RefKind::Param: add({e.name, VarClass::Input, ident_type(e, fn, ast)}); break;
                    case RefKind::State: add({e.name, VarClass::State, ident_type(e, fn, ast)}); break;
                    case RefKind::Local: work.push_back(e.ref.index); break;
                    default: break;
                }
            }
        });
    };
    while (!work.empty()) {
        int l = work.back();
        work.pop_back();
        if (!visited.insert(l).second) {
            continue;
        }
        frontend::for_each_stmt(fn.body, [&](const Stmt& s) {
            if (s.kind == StmtKind::VarDecl && s.localIndex == l && s.value) {
                scan(*s.value);
            } else if (s.kind == StmtKind::Assign && is_local_target(*s.target, l)) {
                scan(*s.value);
            }
        });
    }
    out.unrooted = out.roots.empty();
    return out;
}

Induction induct_local(std::string_view localName, const FunctionDecl& fn, const ContractAst& ast) {
    for (std::size_t i = 0; i < fn.locals.size(); ++i) {
        if (fn.locals[i].name == localName) {
            return induct_local(static_cast<int>(i), fn, ast);
        }
    }
    throw Error(ErrorKind::Analysis, "'" + std::string(localName) + "' is not a local variable of " + fn.signature());
}

BoundVarSet classify_bound_variables(const loopscan::LoopInfo& loop, const FunctionDecl& fn, const ContractAst& ast) {
    BoundVarSet set;
    set.loopId = loop.loopId;
    auto note = [&](std::string n) {
        if (std::find(set.notes.begin(), set.notes.end(), n) == set.notes.end()) {
            set.notes.push_back(std::move(n));
        }
    };
    frontend::for_each_expr(*loop.boundExpr, [&](const Expr& e) {
        BoundVar v;
        switch (e.kind) {
            case ExprKind::Number:
            case ExprKind::Bool:
                v.name = literal_text(e);
                v.cls = VarClass::Fixed;
                v.type = type_name(e.type);
                break;
            case ExprKind::Ident:
                v.name = e.name;
                v.type = ident_type(e, fn, ast);
                switch (e.ref.kind) {
                    case RefKind::Param: v.cls = VarClass::Input; break;
                    case RefKind::State:
                        v.cls = VarClass::State;
                        v.unboundedIterable =
                            ast.stateVars[static_cast<std::size_t>(e.ref.index)].type.kind == frontend::TypeKind::Mapping;
                        break;
                    case RefKind::Local: {
                        v.cls = VarClass::Local;
                        Induction ind = induct_local(e.ref.index, fn, ast);
                        v.roots = ind.roots;
                        v.unrooted = ind.unrooted;
                        break;
                    }
                    default: throw Error(ErrorKind::Analysis, "unresolved identifier '" + e.name + "' in loop bound", e.span);
                }
                break;
            case ExprKind::Call: note("bound calls " + e.name + "(); the callee's reads are not traced"); return;
            case ExprKind::GasLeft: note("bound depends on gasleft()"); return;
            default: return;
        }
        if (!set.find(v.name)) {
            if (v.cls == VarClass::Local) {
                set.localRoots[v.name] = v.roots;
            }
            set.vars.push_back(std::move(v));
        }
    });

    for (const auto& r : set.all_roots()) {
        if (r.cls != VarClass::State) {
            continue;
        }
        int si = ast.find_state(r.name);
        for (const auto& g : ast.functions) {
            if (&g == &fn) {
                continue;
            }
            bool writes = false;
            frontend::for_each_stmt(g.body, [&](const Stmt& s) { writes = writes || written_state(s) == si; });
            if (writes) {
                set.crossFunctionWriters.push_back(r.name + " <- " + g.signature());
            }
        }
    }
    return set;
}

std::vector<std::pair<std::string, std::string>> FuzzTarget::influencing_inputs(const ContractAst& ast) const {
    std::vector<std::pair<std::string, std::string>> out;
    const auto& fn = ast.functions[static_cast<std::size_t>(functionIndex)];
    for (int p : influencingParams) {
        const auto& prm = fn.params[static_cast<std::size_t>(p)];
        out.emplace_back(prm.name, type_name(prm.type));
    }
    return out;
}

std::vector<FuzzTarget> select_fuzz_targets(const ContractAst& ast, const std::vector<BoundVarSet>& classifications) {
    std::map<int, FuzzTarget> byFunction;
    for (const auto& c : classifications) {
        int fi = ast.loops.at(static_cast<std::size_t>(c.loopId)).function;
        const auto& fn = ast.functions[static_cast<std::size_t>(fi)];
        if (!fn.is_callable_externally() || !c.has_input_root()) {
            continue;
        }
        auto& t = byFunction[fi];
        t.functionSignature = fn.signature();
        t.functionIndex = fi;
        t.loopIds.push_back(c.loopId);
        for (const auto& r : c.all_roots()) {
            if (r.cls != VarClass::Input) {
                continue;
            }
            for (std::size_t p = 0; p < fn.params.size(); ++p) {
                if (fn.params[p].name == r.name) {
                    t.influencingParams.push_back(static_cast<int>(p));
                }
            }
        }
    }
    std::vector<FuzzTarget> out;
    for (auto& [fi, t] : byFunction) {
        std::sort(t.influencingParams.begin(), t.influencingParams.end());
        t.influencingParams.erase(std::unique(t.influencingParams.begin(), t.influencingParams.end()),
                                  t.influencingParams.end());
        std::sort(t.loopIds.begin(), t.loopIds.end());
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<BoundVarSet> classify_all(const ContractAst& ast, const loopscan::DetectionReport& det) {
    std::vector<BoundVarSet> out;
    for (const auto& [fi, forest] : det.forests) {
        for (const auto& l : forest.loops) {
            out.push_back(classify_bound_variables(l, ast.functions[static_cast<std::size_t>(fi)], ast));
        }
    }
    std::sort(out.begin(), out.end(), [](const BoundVarSet& a, const BoundVarSet& b) { return a.loopId < b.loopId; });
    return out;
}

}  // namespace gasgauge::depgraph
