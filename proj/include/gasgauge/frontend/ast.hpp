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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gasgauge/source.hpp"

namespace gasgauge::frontend {

enum class TypeKind {
    Uint,
    Bool,
    Address,
    UintArray,
    AddressArray,
    Mapping,  // mapping(uint256 => uint256), state only
    Record,   // aggregate record type; never produced by the parser, rejected by the fuzzer
};

struct MiniSolType {
    TypeKind kind{TypeKind::Uint};
    std::string recordName;  // only for Record

    [[nodiscard]] bool is_array() const { return kind == TypeKind::UintArray || kind == TypeKind::AddressArray; }
    [[nodiscard]] bool is_scalar() const {
        return kind == TypeKind::Uint || kind == TypeKind::Bool || kind == TypeKind::Address;
    }
    [[nodiscard]] MiniSolType element() const {
        return {kind == TypeKind::AddressArray ? TypeKind::Address : TypeKind::Uint, {}};
    }
    friend bool operator==(const MiniSolType&, const MiniSolType&) = default;
};

// Canonical ABI-style spelling: uint256, bool, address, uint256[], address[],
// mapping(uint256 => uint256).
std::string type_name(const MiniSolType& t);

enum class ExprKind {
    Number,
    Bool,
    String,
    Ident,
    Not,
    Binary,
    Index,
    Length,
    Call,     // internal function call
    GasLeft,  // gasleft()
    Convert,  // uint(x), uint256(x), address(x)
};

enum class BinOp { Add, Sub, Mul, Div, Mod, Lt, Le, Gt, Ge, Eq, Ne, And, Or };

std::string_view op_text(BinOp op);
[[nodiscard]] inline bool is_arith(BinOp op) { return op <= BinOp::Mod; }

enum class RefKind { Unresolved, Param, Local, State, Function };

struct Ref {
    RefKind kind{RefKind::Unresolved};
    int index{-1};  // parameter, local, state-variable or function index
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    ExprKind kind{ExprKind::Number};
    Span span;
    std::string name;  // identifier, callee, literal spelling or string contents
    U256 value{0};     // Number, Bool
    BinOp op{BinOp::Add};
    TypeKind convertTo{TypeKind::Uint};
    std::vector<ExprPtr> kids;

    // Filled in by sema.
    Ref ref;
    MiniSolType type;
};

enum class StmtKind { VarDecl, Assign, IncDec, Call, Push, Require, Return, If, For, While, Block };
enum class AssignOp { Set, Add, Sub, Mul, Div, Mod };

std::string_view op_text(AssignOp op);

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;
using StmtList = std::vector<StmtPtr>;

struct Stmt {
    StmtKind kind{StmtKind::Block};
    Span span;

    // VarDecl
    MiniSolType declType;
    std::string name;
    int localIndex{-1};

    // Assign: target = value. IncDec: target. Push: target.push(value).
    // Call: value is the call expression. Require: cond + message. Return: value.
    // VarDecl: value is the initializer. If/While/For: cond.
    ExprPtr target;
    ExprPtr value;
    ExprPtr cond;
    AssignOp op{AssignOp::Set};
    bool increment{true};
    bool prefix{false};
    std::optional<std::string> message;

    StmtPtr init;    // For
    StmtPtr update;  // For
    StmtList body;   // If-then, loop body, Block
    StmtList elseBody;
    bool hasElse{false};

    int loopId{-1};  // For, While: contract-wide id in source order
};

enum class Visibility { Public, External, Internal, Private };

std::string_view to_string(Visibility v);

struct Param {
    std::string name;
    MiniSolType type;
    std::string location;  // memory / calldata / storage, kept for printing
    Span span;
};

struct LocalDecl {
    std::string name;
    MiniSolType type;
    const Stmt* decl{nullptr};
};

struct FunctionDecl {
    std::string name;
    bool isConstructor{false};
    Visibility visibility{Visibility::Public};
    std::vector<std::string> mutability;  // view / pure / payable
    std::vector<Param> params;
    std::optional<MiniSolType> returnType;
    std::string returnName;
    StmtList body;
    Span span;

    std::vector<LocalDecl> locals;  // sema
    int returnLocal{-1};            // sema: slot of the named return variable

    [[nodiscard]] bool is_callable_externally() const {
        return !isConstructor && (visibility == Visibility::Public || visibility == Visibility::External);
    }
    [[nodiscard]] std::string signature() const;  // name(type,type)
};

struct StateVarDecl {
    std::string name;
    MiniSolType type;
    std::vector<std::string> qualifiers;
    ExprPtr init;
    Span span;
};

struct LoopRef {
    const Stmt* stmt{nullptr};
    int function{-1};
};

struct ContractAst {
    std::string name;
    std::vector<std::string> pragmas;
    std::vector<StateVarDecl> stateVars;
    std::vector<FunctionDecl> functions;
    Span span;

    std::vector<LoopRef> loops;  // indexed by loopId
    bool checked{false};         // sema ran

    [[nodiscard]] int find_function(std::string_view name) const;
    [[nodiscard]] int find_state(std::string_view name) const;
    [[nodiscard]] const FunctionDecl* function_by_signature(std::string_view signature) const;
    [[nodiscard]] const Stmt& loop(int loopId) const { return *loops.at(static_cast<std::size_t>(loopId)).stmt; }
};

// Walks every statement (pre-order, including for-init/update) of a list.
template <typename F>
void for_each_stmt(const StmtList& list, F&& fn) {
    for (const auto& s : list) {
        fn(*s);
        if (s->init) {
            fn(*s->init);
        }
        if (s->update) {
            fn(*s->update);
        }
        for_each_stmt(s->body, fn);
        for_each_stmt(s->elseBody, fn);
    }
}

template <typename F>
void for_each_expr(const Expr& e, F&& fn) {
    fn(e);
    for (const auto& k : e.kids) {
        for_each_expr(*k, fn);
    }
}

}  // namespace gasgauge::frontend
