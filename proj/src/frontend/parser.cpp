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

#include "gasgauge/frontend/parser.hpp"

#include <set>

#include "gasgauge/frontend/lexer.hpp"

namespace gasgauge::frontend {

std::string type_name(const MiniSolType& t) {
    switch (t.kind) {
        case TypeKind::Uint: return "uint256";
        case TypeKind::Bool: return "bool";
        case TypeKind::Address: return "address";
        case TypeKind::UintArray: return "uint256[]";
        case TypeKind::AddressArray: return "address[]";
        case TypeKind::Mapping: return "mapping(uint256 => uint256)";
        case TypeKind::Record: return t.recordName;
    }
    return "?";
}

std::string_view op_text(BinOp op) {
    switch (op) {
        case BinOp::Add: return "+";
        case BinOp::Sub: return "-";
        case BinOp::Mul: return "*";
        case BinOp::Div: return "/";
        case BinOp::Mod: return "%";
        case BinOp::Lt: return "<";
        case BinOp::Le: return "<=";
        case BinOp::Gt: return ">";
        case BinOp::Ge: return ">=";
        case BinOp::Eq: return "==";
        case BinOp::Ne: return "!=";
        case BinOp::And: return "&&";
        case BinOp::Or: return "||";
    }
    return "?";
}

std::string_view op_text(AssignOp op) {
    switch (op) {
        case AssignOp::Set: return "=";
        case AssignOp::Add: return "+=";
        case AssignOp::Sub: return "-=";
        case AssignOp::Mul: return "*=";
        case AssignOp::Div: return "/=";
        case AssignOp::Mod: return "%=";
    }
    return "?";
}

std::string_view to_string(Visibility v) {
    switch (v) {
        case Visibility::Public: return "public";
        case Visibility::External: return "external";
        case Visibility::Internal: return "internal";
        case Visibility::Private: return "private";
    }
    return "?";
}

std::string FunctionDecl::signature() const {
    std::string out = name + "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) {
            out += ",";
        }
        out += type_name(params[i].type);
    }
    return out + ")";
}

int ContractAst::find_function(std::string_view fname) const {
    for (std::size_t i = 0; i < functions.size(); ++i) {
        if (functions[i].name == fname) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

int ContractAst::find_state(std::string_view vname) const {
    for (std::size_t i = 0; i < stateVars.size(); ++i) {
        if (stateVars[i].name == vname) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

const FunctionDecl* ContractAst::function_by_signature(std::string_view sig) const {
    for (const auto& f : functions) {
        if (f.signature() == sig) {
            return &f;
        }
    }
    return nullptr;
}

namespace {

const std::set<std::string, std::less<>> kUnsupportedKeywords = {
    "break", "continue", "do", "emit", "assembly", "revert", "assert", "delete", "throw",
    "selfdestruct", "unchecked", "try", "new", "this", "msg", "block", "tx", "now", "keccak256",
    "sha256", "ecrecover", "abi", "super", "payable",
};

const std::set<std::string, std::less<>> kVisibility = {"public", "external", "internal", "private"};
const std::set<std::string, std::less<>> kMutability = {"view", "pure", "payable", "constant"};

bool is_other_scalar_type(std::string_view s) {
    if (s == "string" || s == "bytes" || s == "int" || s == "byte" || s == "fixed" || s == "ufixed") {
        return true;
    }
    auto digits_after = [&](std::string_view prefix) {
        if (s.size() <= prefix.size() || s.substr(0, prefix.size()) != prefix) {
            return false;
        }
        for (char c : s.substr(prefix.size())) {
            if (c < '0' || c > '9') {
                return false;
            }
        }
        return true;
    };
    return (digits_after("uint") && s != "uint256") || digits_after("int") || digits_after("bytes");
}

class Parser {
  public:
    explicit Parser(const SourceFile& src) : toks_(lex(src)) {}

    ContractAst run() {
        ContractAst ast;
        while (cur().kind == TokenKind::Pragma) {
            ast.pragmas.push_back(cur().text);
            ++pos_;
        }
        if (cur().is("import")) {
            unsupported("import directives", cur().span);
        }
        if (cur().is("library") || cur().is("interface")) {
            unsupported("'" + cur().text + "' declarations", cur().span);
        }
        Span start = expect("contract").span;
        ast.name = identifier("contract name");
        if (cur().is("is")) {
            unsupported("inheritance", cur().span);
        }
        expect("{");
        while (!cur().is("}")) {
            if (cur().kind == TokenKind::End) {
                syntax("unexpected end of input inside contract body");
            }
            member(ast);
        }
        Span end = expect("}").span;
        ast.span = {start.begin, end.end};
        if (cur().kind == TokenKind::Pragma || cur().is("contract")) {
            unsupported("multiple contracts per file", cur().span);
        }
        if (cur().kind != TokenKind::End) {
            syntax("unexpected '" + cur().text + "' after contract");
        }
        index_loops(ast);
        return ast;
    }

  private:
    [[nodiscard]] const Token& cur() const { return toks_[pos_]; }
    [[nodiscard]] const Token& peek(std::size_t n = 1) const {
        return toks_[std::min(pos_ + n, toks_.size() - 1)];
    }

    [[noreturn]] void syntax(const std::string& msg) const { throw Error(ErrorKind::Syntax, msg, cur().span); }
    [[noreturn]] static void unsupported(const std::string& what, Span span) {
        throw Error(ErrorKind::Unsupported, what + " are not supported", span);
    }

    const Token& expect(std::string_view text) {
        if (!cur().is(text)) {
            syntax("expected '" + std::string(text) + "' but found '" + cur().text + "'");
        }
        return toks_[pos_++];
    }

    bool accept(std::string_view text) {
        if (cur().is(text)) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string identifier(const char* what) {
        if (cur().kind != TokenKind::Identifier) {
            syntax(std::string("expected ") + what + " but found '" + cur().text + "'");
        }
        return toks_[pos_++].text;
    }

    [[nodiscard]] std::uint32_t last_end() const { return toks_[pos_ - 1].span.end; }

    // ---- types ---------------------------------------------------------------

    [[nodiscard]] bool at_type_start() const {
        const Token& t = cur();
        if (t.kind != TokenKind::Identifier) {
            return false;
        }
        if (t.text == "uint" || t.text == "uint256" || t.text == "bool" || t.text == "address" ||
            t.text == "mapping" || is_other_scalar_type(t.text)) {
            // `uint(x)` / `address(x)` at statement start is a conversion, not a declaration.
            return t.text == "mapping" || !peek().is("(");
        }
        if (kUnsupportedKeywords.contains(t.text)) {
            return false;
        }
        // A user-defined type name followed by a variable name or data location.
        return peek().kind == TokenKind::Identifier;
    }

    MiniSolType type() {
        const Token& t = cur();
        Span span = t.span;
        if (t.kind != TokenKind::Identifier) {
            syntax("expected a type but found '" + t.text + "'");
        }
        MiniSolType out;
        if (t.text == "uint" || t.text == "uint256") {
            out.kind = TypeKind::Uint;
        } else if (t.text == "bool") {
            out.kind = TypeKind::Bool;
        } else if (t.text == "address") {
            out.kind = TypeKind::Address;
        } else if (t.text == "mapping") {
            ++pos_;
            expect("(");
            MiniSolType key = type();
            expect("=>");
            MiniSolType val = type();
            expect(")");
            if (key.kind != TypeKind::Uint || val.kind != TypeKind::Uint) {
                unsupported("mappings other than mapping(uint256 => uint256)", {span.begin, last_end()});
            }
            return {TypeKind::Mapping, {}};
        } else if (is_other_scalar_type(t.text)) {
            unsupported("type '" + t.text + "' and other types outside the MiniSol set", span);
        } else {
            unsupported("aggregate record types ('" + t.text + "')", span);
        }
        ++pos_;
        if (out.kind == TypeKind::Address && cur().is("payable")) {
            ++pos_;
        }
        if (cur().is("[")) {
            if (!peek().is("]")) {
                unsupported("fixed-size arrays", {span.begin, peek().span.end});
            }
            pos_ += 2;
            if (out.kind == TypeKind::Bool) {
                unsupported("bool arrays", {span.begin, last_end()});
            }
            out.kind = out.kind == TypeKind::Uint ? TypeKind::UintArray : TypeKind::AddressArray;
            if (cur().is("[")) {
                unsupported("multi-dimensional arrays", {span.begin, cur().span.end});
            }
        }
        return out;
    }

    // ---- members -------------------------------------------------------------

    void member(ContractAst& ast) {
        const Token& t = cur();
        if (t.is("function") || t.is("constructor")) {
            ast.functions.push_back(function());
            return;
        }
        if (t.is("struct")) {
            unsupported("aggregate record types (struct)", t.span);
        }
        if (t.is("event") || t.is("modifier") || t.is("enum") || t.is("using") || t.is("fallback") ||
            t.is("receive")) {
            unsupported("'" + t.text + "' declarations", t.span);
        }
        StateVarDecl v;
        Span start = t.span;
        v.type = type();
        while (kVisibility.contains(cur().text) || cur().is("constant") || cur().is("immutable")) {
            v.qualifiers.push_back(toks_[pos_++].text);
        }
        v.name = identifier("state variable name");
        if (accept("=")) {
            v.init = expression();
        }
        expect(";");
        v.span = {start.begin, last_end()};
        ast.stateVars.push_back(std::move(v));
    }

    FunctionDecl function() {
        FunctionDecl fn;
        Span start = cur().span;
        if (accept("constructor")) {
            fn.name = "constructor";
            fn.isConstructor = true;
        } else {
            expect("function");
            fn.name = identifier("function name");
        }
        expect("(");
        if (!cur().is(")")) {
            do {
                Param p;
                Span ps = cur().span;
                p.type = type();
                if (cur().is("memory") || cur().is("calldata") || cur().is("storage")) {
                    p.location = toks_[pos_++].text;
                }
                p.name = identifier("parameter name");
                p.span = {ps.begin, last_end()};
                fn.params.push_back(std::move(p));
            } while (accept(","));
        }
        expect(")");
        bool sawVisibility = false;
        while (!cur().is("{")) {
            const Token& q = cur();
            if (kVisibility.contains(q.text)) {
                fn.visibility = q.text == "public"     ? Visibility::Public
                                : q.text == "external" ? Visibility::External
                                : q.text == "internal" ? Visibility::Internal
                                                       : Visibility::Private;
                sawVisibility = true;
                ++pos_;
            } else if (kMutability.contains(q.text)) {
                fn.mutability.push_back(q.text);
                ++pos_;
            } else if (q.is("virtual") || q.is("override")) {
                ++pos_;
            } else if (q.is("returns")) {
                ++pos_;
                expect("(");
                fn.returnType = type();
                if (cur().is("memory") || cur().is("calldata") || cur().is("storage")) {
                    ++pos_;
                }
                if (cur().kind == TokenKind::Identifier) {
                    fn.returnName = identifier("return name");
                }
                if (cur().is(",")) {
                    unsupported("multiple return values", cur().span);
                }
                expect(")");
            } else if (q.is(";")) {
                unsupported("functions without a body", q.span);
            } else if (q.kind == TokenKind::Identifier) {
                unsupported("function modifiers ('" + q.text + "')", q.span);
            } else {
                syntax("unexpected '" + q.text + "' in function header");
            }
        }
        (void)sawVisibility;
        fn.body = block();
        fn.span = {start.begin, last_end()};
        return fn;
    }

    // ---- statements ----------------------------------------------------------

    StmtList block() {
        expect("{");
        StmtList out;
        while (!cur().is("}")) {
            if (cur().kind == TokenKind::End) {
                syntax("unexpected end of input inside block");
            }
            out.push_back(statement());
        }
        expect("}");
        return out;
    }

    StmtList body() {
        if (cur().is("{")) {
            return block();
        }
        StmtList out;
        out.push_back(statement());
        return out;
    }

    StmtPtr make(StmtKind kind, Span start) {
        auto s = std::make_unique<Stmt>();
        s->kind = kind;
        s->span = start;
        return s;
    }

    void finish(Stmt& s) { s.span.end = last_end(); }

    StmtPtr statement() {
        const Token& t = cur();
        Span start = t.span;
        if (t.is("{")) {
            auto s = make(StmtKind::Block, start);
            s->body = block();
            finish(*s);
            return s;
        }
        if (t.is("for")) {
            auto s = make(StmtKind::For, start);
            s->loopId = nextLoopId_++;
            ++pos_;
            expect("(");
            if (!cur().is(";")) {
                s->init = at_type_start() ? declaration() : simple();
            }
            expect(";");
            if (cur().is(";")) {
                unsupported("for loops without a condition", cur().span);
            }
            s->cond = expression();
            expect(";");
            if (!cur().is(")")) {
                s->update = simple();
            }
            expect(")");
            s->body = body();
            finish(*s);
            return s;
        }
        if (t.is("while")) {
            auto s = make(StmtKind::While, start);
            s->loopId = nextLoopId_++;
            ++pos_;
            expect("(");
            s->cond = expression();
            expect(")");
            s->body = body();
            finish(*s);
            return s;
        }
        if (t.is("if")) {
            auto s = make(StmtKind::If, start);
            ++pos_;
            expect("(");
            s->cond = expression();
            expect(")");
            s->body = body();
            if (accept("else")) {
                s->hasElse = true;
                if (cur().is("if")) {
                    s->elseBody.push_back(statement());
                } else {
                    s->elseBody = body();
                }
            }
            finish(*s);
            return s;
        }
        if (t.is("require")) {
            auto s = make(StmtKind::Require, start);
            ++pos_;
            expect("(");
            s->cond = expression();
            if (accept(",")) {
                if (cur().kind != TokenKind::String) {
                    syntax("expected a string message in require");
                }
                s->message = unquote(toks_[pos_++].text);
            }
            expect(")");
            expect(";");
            finish(*s);
            return s;
        }
        if (t.is("return")) {
            auto s = make(StmtKind::Return, start);
            ++pos_;
            if (!cur().is(";")) {
                s->value = expression();
            }
            expect(";");
            finish(*s);
            return s;
        }
        if (t.kind == TokenKind::Identifier && kUnsupportedKeywords.contains(t.text) && !peek().is("=")) {
            unsupported("'" + t.text + "' statements", t.span);
        }
        StmtPtr s = at_type_start() ? declaration() : simple();
        expect(";");
        finish(*s);
        return s;
    }

    StmtPtr declaration() {
        Span start = cur().span;
        auto s = make(StmtKind::VarDecl, start);
        s->declType = type();
        if (cur().is("memory") || cur().is("storage") || cur().is("calldata")) {
            ++pos_;
        }
        s->name = identifier("variable name");
        if (accept("=")) {
            s->value = expression();
        }
        finish(*s);
        return s;
    }

    // Assignment, increment, push or call, without the trailing ';'.
    StmtPtr simple() {
        Span start = cur().span;
        if (cur().is("++") || cur().is("--")) {
            auto s = make(StmtKind::IncDec, start);
            s->increment = cur().is("++");
            s->prefix = true;
            ++pos_;
            s->target = postfix();
            finish(*s);
            return s;
        }
        ExprPtr lhs = postfix();
        static const std::pair<std::string_view, AssignOp> kAssign[] = {
            {"=", AssignOp::Set},  {"+=", AssignOp::Add}, {"-=", AssignOp::Sub},
            {"*=", AssignOp::Mul}, {"/=", AssignOp::Div}, {"%=", AssignOp::Mod},
        };
        for (auto [text, op] : kAssign) {
            if (cur().is(text)) {
                ++pos_;
                auto s = make(StmtKind::Assign, start);
                s->op = op;
                s->target = std::move(lhs);
                s->value = expression();
                finish(*s);
                return s;
            }
        }
        if (cur().is("++") || cur().is("--")) {
            auto s = make(StmtKind::IncDec, start);
            s->increment = cur().is("++");
            ++pos_;
            s->target = std::move(lhs);
            finish(*s);
            return s;
        }
        if (lhs->kind == ExprKind::Call && lhs->name == ".push") {
            auto s = make(StmtKind::Push, start);
            s->target = std::move(lhs->kids[0]);
            s->value = std::move(lhs->kids[1]);
            finish(*s);
            return s;
        }
        if (lhs->kind == ExprKind::Call) {
            auto s = make(StmtKind::Call, start);
            s->value = std::move(lhs);
            finish(*s);
            return s;
        }
        syntax("expected an assignment, increment, push or call statement");
    }

    static std::string unquote(const std::string& raw) {
        std::string out;
        for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
            if (raw[i] == '\\' && i + 2 < raw.size()) {
                ++i;
            }
            out += raw[i];
        }
        return out;
    }

    // ---- expressions ---------------------------------------------------------

    ExprPtr node(ExprKind kind, Span span) {
        auto e = std::make_unique<Expr>();
        e->kind = kind;
        e->span = span;
        return e;
    }

    ExprPtr binary(BinOp op, ExprPtr lhs, ExprPtr rhs) {
        auto e = node(ExprKind::Binary, {lhs->span.begin, rhs->span.end});
        e->op = op;
        e->kids.push_back(std::move(lhs));
        e->kids.push_back(std::move(rhs));
        return e;
    }

    ExprPtr expression() {
        if (cur().is("?")) {
            unsupported("conditional expressions", cur().span);
        }
        auto e = logical_or();
        if (cur().is("?")) {
            unsupported("conditional expressions", cur().span);
        }
        if (cur().is("=") || cur().is("+=") || cur().is("-=")) {
            unsupported("assignments inside expressions", cur().span);
        }
        return e;
    }

    ExprPtr logical_or() {
        auto lhs = logical_and();
        while (accept("||")) {
            lhs = binary(BinOp::Or, std::move(lhs), logical_and());
        }
        return lhs;
    }

    ExprPtr logical_and() {
        auto lhs = equality();
        while (accept("&&")) {
            lhs = binary(BinOp::And, std::move(lhs), equality());
        }
        return lhs;
    }

    ExprPtr equality() {
        auto lhs = relational();
        while (cur().is("==") || cur().is("!=")) {
            BinOp op = cur().is("==") ? BinOp::Eq : BinOp::Ne;
            ++pos_;
            lhs = binary(op, std::move(lhs), relational());
        }
        return lhs;
    }

    ExprPtr relational() {
        auto lhs = additive();
        while (cur().is("<") || cur().is("<=") || cur().is(">") || cur().is(">=")) {
            BinOp op = cur().is("<")    ? BinOp::Lt
                       : cur().is("<=") ? BinOp::Le
                       : cur().is(">")  ? BinOp::Gt
                                        : BinOp::Ge;
            ++pos_;
            lhs = binary(op, std::move(lhs), additive());
        }
        return lhs;
    }

    ExprPtr additive() {
        auto lhs = multiplicative();
        while (cur().is("+") || cur().is("-")) {
            BinOp op = cur().is("+") ? BinOp::Add : BinOp::Sub;
            ++pos_;
            lhs = binary(op, std::move(lhs), multiplicative());
        }
        return lhs;
    }

    ExprPtr multiplicative() {
        auto lhs = unary();
        while (cur().is("*") || cur().is("/") || cur().is("%")) {
            BinOp op = cur().is("*") ? BinOp::Mul : cur().is("/") ? BinOp::Div : BinOp::Mod;
            ++pos_;
            lhs = binary(op, std::move(lhs), unary());
        }
        for (std::string_view bad : {"**", "<<", "&", "|", "^", "~"}) {
            if (cur().is(bad)) {
                unsupported("operator '" + std::string(bad) + "' expressions", cur().span);
            }
        }
        return lhs;
    }

    ExprPtr unary() {
        if (cur().is("!")) {
            Span start = cur().span;
            ++pos_;
            auto operand = unary();
            auto e = node(ExprKind::Not, {start.begin, operand->span.end});
            e->kids.push_back(std::move(operand));
            return e;
        }
        if (cur().is("-") || cur().is("~")) {
            unsupported("unary '" + cur().text + "' expressions", cur().span);
        }
        if (cur().is("++") || cur().is("--")) {
            unsupported("increments inside expressions", cur().span);
        }
        return postfix();
    }

    ExprPtr postfix() {
        auto e = primary();
        while (true) {
            if (cur().is("[")) {
                ++pos_;
                auto idx = expression();
                expect("]");
                auto ix = node(ExprKind::Index, {e->span.begin, last_end()});
                ix->kids.push_back(std::move(e));
                ix->kids.push_back(std::move(idx));
                e = std::move(ix);
            } else if (cur().is(".")) {
                ++pos_;
                Span member = cur().span;
                std::string name = identifier("member name");
                if (name == "length") {
                    auto len = node(ExprKind::Length, {e->span.begin, last_end()});
                    len->kids.push_back(std::move(e));
                    e = std::move(len);
                } else if (name == "push") {
                    expect("(");
                    if (cur().is(")")) {
                        unsupported("push without an argument", cur().span);
                    }
                    auto arg = expression();
                    expect(")");
                    auto push = node(ExprKind::Call, {e->span.begin, last_end()});
                    push->name = ".push";
                    push->kids.push_back(std::move(e));
                    push->kids.push_back(std::move(arg));
                    e = std::move(push);
                } else if (name == "call" || name == "transfer" || name == "send" || name == "delegatecall" ||
                           name == "staticcall" || name == "value" || name == "balance") {
                    unsupported("external calls ('." + name + "')", {e->span.begin, member.end});
                } else {
                    unsupported("member access '." + name + "'", {e->span.begin, member.end});
                }
            } else {
                return e;
            }
        }
    }

    ExprPtr primary() {
        const Token& t = cur();
        Span span = t.span;
        if (t.kind == TokenKind::Number) {
            ++pos_;
            if (t.text.find_first_of(".eE_") != std::string::npos &&
                !(t.text.size() > 1 && (t.text[1] == 'x' || t.text[1] == 'X'))) {
                unsupported("numeric literal '" + t.text + "' forms other than plain integers", span);
            }
            auto e = node(ExprKind::Number, span);
            try {
                e->value = parse_u256(t.text);
            } catch (const Error& err) {
                throw Error(ErrorKind::Syntax, err.what(), span);
            }
            e->name = t.text;
            if (cur().kind == TokenKind::Identifier &&
                (cur().is("ether") || cur().is("wei") || cur().is("gwei") || cur().is("seconds") ||
                 cur().is("days"))) {
                unsupported("unit suffixes", cur().span);
            }
            return e;
        }
        if (t.kind == TokenKind::String) {
            ++pos_;
            auto e = node(ExprKind::String, span);
            e->name = unquote(t.text);
            return e;
        }
        if (t.is("(")) {
            ++pos_;
            auto inner = expression();
            expect(")");
            // Parenthesization is not part of the tree; the printer re-derives it.
            return inner;
        }
        if (t.kind != TokenKind::Identifier) {
            syntax("unexpected '" + t.text + "' in expression");
        }
        if (t.is("true") || t.is("false")) {
            ++pos_;
            auto e = node(ExprKind::Bool, span);
            e->value = t.is("true") ? 1 : 0;
            e->name = t.text;
            return e;
        }
        if (kUnsupportedKeywords.contains(t.text)) {
            unsupported("'" + t.text + "' expressions", span);
        }
        if (t.is("gasleft")) {
            ++pos_;
            expect("(");
            expect(")");
            return node(ExprKind::GasLeft, {span.begin, last_end()});
        }
        if ((t.is("uint") || t.is("uint256") || t.is("address")) && peek().is("(")) {
            auto e = node(ExprKind::Convert, span);
            e->convertTo = t.is("address") ? TypeKind::Address : TypeKind::Uint;
            e->name = t.text;
            pos_ += 2;
            e->kids.push_back(expression());
            expect(")");
            e->span.end = last_end();
            return e;
        }
        std::string name = t.text;
        ++pos_;
        if (cur().is("(")) {
            ++pos_;
            auto call = node(ExprKind::Call, span);
            call->name = name;
            if (!cur().is(")")) {
                do {
                    call->kids.push_back(expression());
                } while (accept(","));
            }
            expect(")");
            call->span.end = last_end();
            return call;
        }
        auto e = node(ExprKind::Ident, span);
        e->name = name;
        return e;
    }

    void index_loops(ContractAst& ast) const {
        ast.loops.assign(static_cast<std::size_t>(nextLoopId_), {});
        for (std::size_t f = 0; f < ast.functions.size(); ++f) {
            for_each_stmt(ast.functions[f].body, [&](const Stmt& s) {
                if (s.loopId >= 0) {
                    ast.loops[static_cast<std::size_t>(s.loopId)] = {&s, static_cast<int>(f)};
                }
            });
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_{0};
    int nextLoopId_{0};
};

}  // namespace

ContractAst parse(const SourceFile& src) { return Parser(src).run(); }

}  // namespace gasgauge::frontend
