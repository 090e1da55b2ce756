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

#include "gasgauge/frontend/printer.hpp"

namespace gasgauge::frontend {

namespace {

int precedence(const Expr& e) {
    if (e.kind != ExprKind::Binary) {
        return e.kind == ExprKind::Not ? 7 : 8;
    }
    switch (e.op) {
        case BinOp::Or: return 1;
        case BinOp::And: return 2;
        case BinOp::Eq:
        case BinOp::Ne: return 3;
        case BinOp::Lt:
        case BinOp::Le:
        case BinOp::Gt:
        case BinOp::Ge: return 4;
        case BinOp::Add:
        case BinOp::Sub: return 5;
        default: return 6;
    }
}

std::string operand(const Expr& e, int minPrec) {
    std::string s = print_expr(e);
    return precedence(e) < minPrec ? "(" + s + ")" : s;
}

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent) * 4, ' '); }

std::string simple(const Stmt& s) {
    switch (s.kind) {
        case StmtKind::VarDecl:
            return type_name(s.declType) + " " + s.name + (s.value ? " = " + print_expr(*s.value) : "");
        case StmtKind::Assign:
            return print_expr(*s.target) + " " + std::string(op_text(s.op)) + " " + print_expr(*s.value);
        case StmtKind::IncDec: {
            std::string op = s.increment ? "++" : "--";
            return s.prefix ? op + print_expr(*s.target) : print_expr(*s.target) + op;
        }
        case StmtKind::Call: return print_expr(*s.value);
        case StmtKind::Push: return print_expr(*s.target) + ".push(" + print_expr(*s.value) + ")";
        default: return "";
    }
}

std::string quote(const std::string& raw) {
    std::string out = "\"";
    for (char c : raw) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + "\"";
}

std::string block(const StmtList& list, int indent) {
    std::string out = "{\n";
    for (const auto& s : list) {
        out += print_stmt(*s, indent + 1);
    }
    return out + pad(indent) + "}";
}

void dump_expr(const Expr& e, std::string& out) {
    out += "(";
    out += std::to_string(static_cast<int>(e.kind));
    out += " ";
    switch (e.kind) {
        case ExprKind::Number:
        case ExprKind::Bool: out += gasgauge::to_string(e.value); break;
        case ExprKind::Binary: out += op_text(e.op); break;
        case ExprKind::Convert: out += std::to_string(static_cast<int>(e.convertTo)); break;
        default: out += e.name; break;
    }
    for (const auto& k : e.kids) {
        out += " ";
        dump_expr(*k, out);
    }
    out += ")";
}

void dump_list(const StmtList& list, std::string& out);

void dump_stmt(const Stmt& s, std::string& out) {
    out += "[" + std::to_string(static_cast<int>(s.kind));
    if (s.kind == StmtKind::VarDecl) {
        out += " " + type_name(s.declType) + " " + s.name;
    }
    if (s.kind == StmtKind::Assign) {
        out += " ";
        out += op_text(s.op);
    }
    if (s.kind == StmtKind::IncDec) {
        out += s.increment ? " ++" : " --";
        out += s.prefix ? "p" : "s";
    }
    for (const Expr* e : {s.target.get(), s.value.get(), s.cond.get()}) {
        out += " ";
        if (e) {
            dump_expr(*e, out);
        } else {
            out += "_";
        }
    }
    if (s.message) {
        out += " " + quote(*s.message);
    }
    if (s.init) {
        out += " init:";
        dump_stmt(*s.init, out);
    }
    if (s.update) {
        out += " update:";
        dump_stmt(*s.update, out);
    }
    out += " body:";
    dump_list(s.body, out);
    if (s.hasElse) {
        out += " else:";
        dump_list(s.elseBody, out);
    }
    out += "]";
}

void dump_list(const StmtList& list, std::string& out) {
    out += "{";
    for (const auto& s : list) {
        dump_stmt(*s, out);
    }
    out += "}";
}

}  // namespace

std::string print_expr(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Number: return e.name.empty() ? gasgauge::to_string(e.value) : e.name;
        case ExprKind::Bool: return e.value != 0 ? "true" : "false";
        case ExprKind::String: return quote(e.name);
        case ExprKind::Ident: return e.name;
        case ExprKind::GasLeft: return "gasleft()";
        case ExprKind::Not: return "!" + operand(*e.kids[0], 7);
        case ExprKind::Binary: {
            int p = precedence(e);
            // Left-associative: the right operand needs parentheses at equal precedence.
            return operand(*e.kids[0], p) + " " + std::string(op_text(e.op)) + " " + operand(*e.kids[1], p + 1);
        }
        case ExprKind::Index: return operand(*e.kids[0], 8) + "[" + print_expr(*e.kids[1]) + "]";
        case ExprKind::Length: return operand(*e.kids[0], 8) + ".length";
        case ExprKind::Convert:
            return std::string(e.convertTo == TypeKind::Address ? "address" : "uint256") + "(" +
                   print_expr(*e.kids[0]) + ")";
        case ExprKind::Call: {
            std::string out = e.name + "(";
            for (std::size_t i = 0; i < e.kids.size(); ++i) {
                out += (i ? ", " : "") + print_expr(*e.kids[i]);
            }
            return out + ")";
        }
    }
    return "";
}

std::string print_stmt(const Stmt& s, int indent) {
    std::string p = pad(indent);
    switch (s.kind) {
        case StmtKind::VarDecl:
        case StmtKind::Assign:
        case StmtKind::IncDec:
        case StmtKind::Call:
        case StmtKind::Push: return p + simple(s) + ";\n";
        case StmtKind::Require:
            return p + "require(" + print_expr(*s.cond) + (s.message ? ", " + quote(*s.message) : "") + ");\n";
        case StmtKind::Return: return p + "return" + (s.value ? " " + print_expr(*s.value) : "") + ";\n";
        case StmtKind::Block: return p + block(s.body, indent) + "\n";
        case StmtKind::While: return p + "while (" + print_expr(*s.cond) + ") " + block(s.body, indent) + "\n";
        case StmtKind::For:
            return p + "for (" + (s.init ? simple(*s.init) : "") + "; " + print_expr(*s.cond) + ";" +
                   (s.update ? " " + simple(*s.update) : "") + ") " + block(s.body, indent) + "\n";
        case StmtKind::If: {
            std::string out = p + "if (" + print_expr(*s.cond) + ") " + block(s.body, indent);
            if (s.hasElse) {
                if (s.elseBody.size() == 1 && s.elseBody[0]->kind == StmtKind::If) {
                    std::string chained = print_stmt(*s.elseBody[0], indent);
                    out += " else " + chained.substr(p.size());
                    return out;
                }
                out += " else " + block(s.elseBody, indent);
            }
            return out + "\n";
        }
    }
    return "";
}

std::string print_contract(const ContractAst& ast) {
    std::string out;
    for (const auto& pr : ast.pragmas) {
        out += pr + "\n";
    }
    out += "contract " + ast.name + " {\n";
    for (const auto& v : ast.stateVars) {
        out += pad(1) + type_name(v.type);
        for (const auto& q : v.qualifiers) {
            out += " " + q;
        }
        out += " " + v.name + (v.init ? " = " + print_expr(*v.init) : "") + ";\n";
    }
    for (const auto& f : ast.functions) {
        out += pad(1) + (f.isConstructor ? std::string("constructor(") : "function " + f.name + "(");
        for (std::size_t i = 0; i < f.params.size(); ++i) {
            const auto& prm = f.params[i];
            out += (i ? ", " : "") + type_name(prm.type) + (prm.location.empty() ? "" : " " + prm.location) + " " +
                   prm.name;
        }
        out += ") ";
        out += to_string(f.visibility);
        for (const auto& m : f.mutability) {
            out += " " + m;
        }
        if (f.returnType) {
            out += " returns (" + type_name(*f.returnType) + (f.returnName.empty() ? "" : " " + f.returnName) + ")";
        }
        out += " " + block(f.body, 1) + "\n";
    }
    return out + "}\n";
}

std::string dump_tree(const ContractAst& ast) {
    std::string out = "contract " + ast.name + "\n";
    for (const auto& pr : ast.pragmas) {
        out += pr + "\n";
    }
    for (const auto& v : ast.stateVars) {
        out += "state " + type_name(v.type) + " " + v.name;
        for (const auto& q : v.qualifiers) {
            out += " " + q;
        }
        if (v.init) {
            out += " = ";
            dump_expr(*v.init, out);
        }
        out += "\n";
    }
    for (const auto& f : ast.functions) {
        out += "function " + f.signature() + " " + std::string(to_string(f.visibility));
        for (const auto& m : f.mutability) {
            out += " " + m;
        }
        if (f.returnType) {
            out += " returns " + type_name(*f.returnType);
        }
        out += " ";
        dump_list(f.body, out);
        out += "\n";
    }
    return out;
}

}  // namespace gasgauge::frontend
