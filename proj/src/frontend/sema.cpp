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

#include "gasgauge/frontend/sema.hpp"

#include <map>
#include <set>

#include "gasgauge/frontend/normalize.hpp"
#include "gasgauge/frontend/parser.hpp"

namespace gasgauge::frontend {

namespace {

[[noreturn]] void semantic(const std::string& msg, Span span) { throw Error(ErrorKind::Semantic, msg, span); }
[[noreturn]] void unsupported(const std::string& msg, Span span) { throw Error(ErrorKind::Unsupported, msg, span); }

const MiniSolType kUint{TypeKind::Uint, {}};
const MiniSolType kBool{TypeKind::Bool, {}};

bool always_returns(const StmtList& list) {
    for (const auto& s : list) {
        if (s->kind == StmtKind::Return) {
            return true;
        }
        if (s->kind == StmtKind::Block && always_returns(s->body)) {
            return true;
        }
        if (s->kind == StmtKind::If && s->hasElse && always_returns(s->body) && always_returns(s->elseBody)) {
            return true;
        }
    }
    return false;
}

class Checker {
  public:
    explicit Checker(ContractAst& ast) : ast_(ast) {}

    void run() {
        std::set<std::string> names;
        for (auto& v : ast_.stateVars) {
            if (!names.insert(v.name).second) {
                semantic("state variable '" + v.name + "' is declared twice", v.span);
            }
            if (v.type.kind == TypeKind::Mapping && v.init) {
                semantic("mapping '" + v.name + "' cannot have an initializer", v.span);
            }
            if (v.init) {
                for_each_expr(*v.init, [&](const Expr& e) {
                    if (e.kind != ExprKind::Number && e.kind != ExprKind::Bool && e.kind != ExprKind::Binary &&
                        e.kind != ExprKind::Not && e.kind != ExprKind::Convert) {
                        unsupported("state initializers must be constant expressions", e.span);
                    }
                });
                MiniSolType t = expr(*v.init);
                if (!assignable(v.type, t)) {
                    semantic("initializer of '" + v.name + "' has type " + type_name(t), v.init->span);
                }
            }
        }
        std::set<std::string> fnames;
        for (auto& f : ast_.functions) {
            if (!fnames.insert(f.name).second) {
                unsupported("function overloading ('" + f.name + "') is not supported", f.span);
            }
            if (names.contains(f.name)) {
                semantic("'" + f.name + "' names both a function and a state variable", f.span);
            }
        }
        for (auto& f : ast_.functions) {
            function(f);
        }
        ast_.checked = true;
    }

  private:
    struct Scope {
        std::map<std::string, Ref, std::less<>> names;
    };

    void function(FunctionDecl& f) {
        fn_ = &f;
        f.locals.clear();
        scopes_.clear();
        scopes_.emplace_back();
        for (std::size_t i = 0; i < f.params.size(); ++i) {
            const auto& p = f.params[i];
            if (p.type.kind == TypeKind::Mapping) {
                unsupported("mapping parameters are not supported", p.span);
            }
            declare(p.name, {RefKind::Param, static_cast<int>(i)}, p.span);
        }
        if (f.returnType && !f.returnType->is_scalar()) {
            unsupported("returning arrays or mappings is not supported", f.span);
        }
        f.returnLocal = -1;
        if (f.returnType && !f.returnName.empty()) {
            f.returnLocal = static_cast<int>(f.locals.size());
            f.locals.push_back({f.returnName, *f.returnType, nullptr});
            declare(f.returnName, {RefKind::Local, f.returnLocal}, f.span);
        }
        list(f.body);
        scopes_.clear();
        fn_ = nullptr;
    }

    void declare(const std::string& name, Ref ref, Span span) {
        if (ast_.find_state(name) >= 0 || ast_.find_function(name) >= 0) {
            semantic("'" + name + "' shadows a contract-level declaration", span);
        }
        for (const auto& s : scopes_) {
            if (s.names.contains(name)) {
                semantic("identifier '" + name + "' is already declared in an enclosing scope", span);
            }
        }
        scopes_.back().names.emplace(name, ref);
    }

    Ref lookup(const std::string& name) const {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            if (auto f = it->names.find(name); f != it->names.end()) {
                return f->second;
            }
        }
        if (int s = ast_.find_state(name); s >= 0) {
            return {RefKind::State, s};
        }
        if (int f = ast_.find_function(name); f >= 0) {
            return {RefKind::Function, f};
        }
        return {};
    }

    MiniSolType ref_type(const Ref& r) const {
        switch (r.kind) {
            case RefKind::Param: return fn_->params[static_cast<std::size_t>(r.index)].type;
            case RefKind::Local: return fn_->locals[static_cast<std::size_t>(r.index)].type;
            case RefKind::State: return ast_.stateVars[static_cast<std::size_t>(r.index)].type;
            default: return kUint;
        }
    }

    void list(StmtList& stmts) {
        scopes_.emplace_back();
        for (std::size_t i = 0; i < stmts.size(); ++i) {
            stmt(*stmts[i]);
            if (stmts[i]->kind == StmtKind::Return && i + 1 < stmts.size()) {
                semantic("unreachable statement after return", stmts[i + 1]->span);
            }
        }
        scopes_.pop_back();
    }

    void expect_type(const Expr& e, const MiniSolType& want, const char* what) {
        if (!(e.type == want)) {
            semantic(std::string(what) + " must be " + type_name(want) + ", found " + type_name(e.type), e.span);
        }
    }

    static bool assignable(const MiniSolType& to, const MiniSolType& from) { return to == from; }

    void lvalue(Expr& e) {
        if (e.kind == ExprKind::Ident) {
            expr(e, true);
            if (e.ref.kind == RefKind::Function) {
                semantic("cannot assign to function '" + e.name + "'", e.span);
            }
            if (!e.type.is_scalar()) {
                unsupported("assigning whole arrays or mappings is not supported", e.span);
            }
            if (e.ref.kind == RefKind::State) {
                const auto& q = ast_.stateVars[static_cast<std::size_t>(e.ref.index)].qualifiers;
                for (const auto& x : q) {
                    if (x == "constant" || x == "immutable") {
                        semantic("cannot assign to constant '" + e.name + "'", e.span);
                    }
                }
            }
            return;
        }
        if (e.kind == ExprKind::Index) {
            expr(e);
            return;
        }
        if (e.kind == ExprKind::Length) {
            unsupported("assigning to .length is not supported", e.span);
        }
        semantic("expression is not assignable", e.span);
    }

    void stmt(Stmt& s) {
        switch (s.kind) {
            case StmtKind::VarDecl: {
                if (!s.declType.is_scalar()) {
                    unsupported("local array and mapping variables are not supported", s.span);
                }
                if (s.value) {
                    MiniSolType t = expr(*s.value);
                    if (!assignable(s.declType, t)) {
                        semantic("cannot initialize " + type_name(s.declType) + " '" + s.name + "' with " +
                                     type_name(t),
                                 s.value->span);
                    }
                }
                s.localIndex = static_cast<int>(fn_->locals.size());
                fn_->locals.push_back({s.name, s.declType, &s});
                declare(s.name, {RefKind::Local, s.localIndex}, s.span);
                return;
            }
            case StmtKind::Assign: {
                lvalue(*s.target);
                MiniSolType t = expr(*s.value);
                if (s.op != AssignOp::Set) {
                    expect_type(*s.target, kUint, "compound assignment target");
                    expect_type(*s.value, kUint, "compound assignment operand");
                } else if (!assignable(s.target->type, t)) {
                    semantic("cannot assign " + type_name(t) + " to " + type_name(s.target->type), s.span);
                }
                return;
            }
            case StmtKind::IncDec:
                lvalue(*s.target);
                expect_type(*s.target, kUint, "increment target");
                return;
            case StmtKind::Call:
                expr(*s.value, false, true);
                return;
            case StmtKind::Push: {
                expr(*s.target, true);
                if (s.target->kind != ExprKind::Ident || s.target->ref.kind != RefKind::State ||
                    !s.target->type.is_array()) {
                    unsupported("push is only supported on state arrays", s.span);
                }
                MiniSolType t = expr(*s.value);
                if (!(t == s.target->type.element())) {
                    semantic("cannot push " + type_name(t) + " onto " + type_name(s.target->type), s.span);
                }
                return;
            }
            case StmtKind::Require:
                expr(*s.cond);
                expect_type(*s.cond, kBool, "require condition");
                return;
            case StmtKind::Return:
                if (s.value) {
                    MiniSolType t = expr(*s.value);
                    if (!fn_->returnType) {
                        semantic("function '" + fn_->name + "' does not return a value", s.span);
                    }
                    if (!assignable(*fn_->returnType, t)) {
                        semantic("return type mismatch", s.value->span);
                    }
                } else if (fn_->returnType) {
                    // Bare return leaves the default return value.
                }
                return;
            case StmtKind::If:
                expr(*s.cond);
                expect_type(*s.cond, kBool, "if condition");
                list(s.body);
                list(s.elseBody);
                return;
            case StmtKind::While:
                expr(*s.cond);
                expect_type(*s.cond, kBool, "loop condition");
                if (always_returns(s.body)) {
                    unsupported("loops whose body always returns are not supported", s.span);
                }
                list(s.body);
                return;
            case StmtKind::For:
                scopes_.emplace_back();
                if (s.init) {
                    stmt(*s.init);
                }
                expr(*s.cond);
                expect_type(*s.cond, kBool, "loop condition");
                if (s.update) {
                    if (s.update->kind == StmtKind::VarDecl) {
                        semantic("declaration in for-loop update", s.update->span);
                    }
                    stmt(*s.update);
                }
                if (always_returns(s.body)) {
                    unsupported("loops whose body always returns are not supported", s.span);
                }
                list(s.body);
                scopes_.pop_back();
                return;
            case StmtKind::Block:
                list(s.body);
                return;
        }
    }

    MiniSolType expr(Expr& e, bool allowAggregate = false, bool allowVoid = false) {
        e.type = compute(e, allowVoid);
        if (!allowAggregate && !e.type.is_scalar()) {
            semantic("'" + e.name + "' of type " + type_name(e.type) + " cannot be used as a value", e.span);
        }
        return e.type;
    }

    MiniSolType compute(Expr& e, bool allowVoid) {
        switch (e.kind) {
            case ExprKind::Number: return kUint;
            case ExprKind::Bool: return kBool;
            case ExprKind::String: semantic("string literals are only allowed as require messages", e.span);
            case ExprKind::GasLeft: return kUint;
            case ExprKind::Ident: {
                if (!fn_) {
                    semantic("identifier in state initializer", e.span);
                }
                e.ref = lookup(e.name);
                if (e.ref.kind == RefKind::Unresolved) {
                    semantic("undeclared identifier '" + e.name + "'", e.span);
                }
                if (e.ref.kind == RefKind::Function) {
                    semantic("function '" + e.name + "' used as a value", e.span);
                }
                return ref_type(e.ref);
            }
            case ExprKind::Not:
                expr(*e.kids[0]);
                expect_type(*e.kids[0], kBool, "operand of '!'");
                return kBool;
            case ExprKind::Binary: {
                MiniSolType a = expr(*e.kids[0]);
                MiniSolType b = expr(*e.kids[1]);
                if (is_arith(e.op) || e.op == BinOp::Lt || e.op == BinOp::Le || e.op == BinOp::Gt ||
                    e.op == BinOp::Ge) {
                    expect_type(*e.kids[0], kUint, "arithmetic/comparison operand");
                    expect_type(*e.kids[1], kUint, "arithmetic/comparison operand");
                    return is_arith(e.op) ? kUint : kBool;
                }
                if (e.op == BinOp::And || e.op == BinOp::Or) {
                    expect_type(*e.kids[0], kBool, "logical operand");
                    expect_type(*e.kids[1], kBool, "logical operand");
                    return kBool;
                }
                if (!(a == b)) {
                    semantic("cannot compare " + type_name(a) + " with " + type_name(b), e.span);
                }
                return kBool;
            }
            case ExprKind::Index: {
                MiniSolType base = expr(*e.kids[0], true);
                if (!base.is_array() && base.kind != TypeKind::Mapping) {
                    semantic("indexed expression is not an array or mapping", e.kids[0]->span);
                }
                expr(*e.kids[1]);
                expect_type(*e.kids[1], kUint, "index");
                return base.kind == TypeKind::Mapping ? kUint : base.element();
            }
            case ExprKind::Length: {
                MiniSolType base = expr(*e.kids[0], true);
                if (!base.is_array()) {
                    semantic(".length on a non-array", e.span);
                }
                return kUint;
            }
            case ExprKind::Convert: {
                MiniSolType a = expr(*e.kids[0]);
                if (a.kind == TypeKind::Bool) {
                    semantic("cannot convert bool", e.span);
                }
                return {e.convertTo, {}};
            }
            case ExprKind::Call: {
                if (e.name == ".push") {
                    unsupported("push used as a value is not supported", e.span);
                }
                if (!fn_) {
                    semantic("call in state initializer", e.span);
                }
                int idx = ast_.find_function(e.name);
                if (idx < 0) {
                    semantic("undeclared function '" + e.name + "'", e.span);
                }
                const FunctionDecl& callee = ast_.functions[static_cast<std::size_t>(idx)];
                if (callee.isConstructor) {
                    semantic("the constructor cannot be called", e.span);
                }
                e.ref = {RefKind::Function, idx};
                if (callee.params.size() != e.kids.size()) {
                    semantic("'" + e.name + "' expects " + std::to_string(callee.params.size()) + " arguments",
                             e.span);
                }
                for (std::size_t i = 0; i < e.kids.size(); ++i) {
                    const MiniSolType& want = callee.params[i].type;
                    MiniSolType got = expr(*e.kids[i], want.is_array());
                    if (!(got == want)) {
                        semantic("argument " + std::to_string(i + 1) + " of '" + e.name + "' must be " +
                                     type_name(want),
                                 e.kids[i]->span);
                    }
                    if (want.is_array() && (e.kids[i]->kind != ExprKind::Ident)) {
                        semantic("array arguments must be variables", e.kids[i]->span);
                    }
                }
                if (!callee.returnType) {
                    if (!allowVoid) {
                        semantic("'" + e.name + "' does not return a value", e.span);
                    }
                    return kUint;
                }
                return *callee.returnType;
            }
        }
        return kUint;
    }

    ContractAst& ast_;
    FunctionDecl* fn_{nullptr};
    std::vector<Scope> scopes_;
};

}  // namespace

void check(ContractAst& ast) { Checker(ast).run(); }

ContractAst parse_checked(const SourceFile& src) {
    ContractAst ast = parse(src);
    check(ast);
    return ast;
}

LoadedContract load_contract(const SourceFile& src) {
    SourceFile normalized = normalize_source(src);
    ContractAst ast = parse_checked(normalized);
    return {src, std::move(normalized), std::move(ast)};
}

}  // namespace gasgauge::frontend
