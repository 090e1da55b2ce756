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

#include "gasgauge/frontend/normalize.hpp"

#include <algorithm>

#include "gasgauge/frontend/lexer.hpp"

namespace gasgauge::frontend {

namespace {

Token synthetic(std::string_view text) { return {TokenKind::Punct, std::string(text), {}}; }

// Copies the token stream, inserting braces around unbraced control bodies.
class BraceInserter {
  public:
    explicit BraceInserter(const std::vector<Token>& in) : in_(in) {}

    std::vector<Token> run() {
        while (!at_end()) {
            const Token& t = cur();
            if (t.kind == TokenKind::Pragma) {
                copy();
            } else if (t.is("contract") || t.is("library") || t.is("interface")) {
                copy_until_open_brace();
                members();
            } else {
                statement();
            }
        }
        return std::move(out_);
    }

  private:
    [[nodiscard]] bool at_end() const { return in_[pos_].kind == TokenKind::End; }
    [[nodiscard]] const Token& cur() const { return in_[pos_]; }

    void copy() {
        if (at_end()) {
            throw Error(ErrorKind::Syntax, "unexpected end of input", cur().span);
        }
        out_.push_back(in_[pos_++]);
    }

    void copy_until_open_brace() {
        while (!cur().is("{")) {
            copy();
        }
        copy();
    }

    void members() {
        while (!cur().is("}")) {
            if (cur().is("function") || cur().is("constructor") || cur().is("modifier")) {
                while (!cur().is("{") && !cur().is(";")) {
                    copy();
                }
                if (cur().is("{")) {
                    statement();
                } else {
                    copy();
                }
            } else if (cur().is("struct") || cur().is("enum")) {
                copy_until_open_brace();
                balanced_rest(1);
            } else {
                copy_simple();
            }
        }
        copy();
    }

    void balanced_rest(int depth) {
        while (depth > 0) {
            if (cur().is("{")) {
                ++depth;
            } else if (cur().is("}")) {
                --depth;
            }
            copy();
        }
    }

    // Copies up to and including the `;` that ends a simple statement.
    void copy_simple() {
        int depth = 0;
        while (true) {
            const Token& t = cur();
            if (t.is("(") || t.is("[") || t.is("{")) {
                ++depth;
            } else if (t.is(")") || t.is("]") || t.is("}")) {
                if (depth == 0) {
                    throw Error(ErrorKind::Syntax, "unexpected '" + t.text + "'", t.span);
                }
                --depth;
            }
            copy();
            if (depth == 0 && out_.back().is(";")) {
                return;
            }
        }
    }

    void paren_group() {
        if (!cur().is("(")) {
            throw Error(ErrorKind::Syntax, "expected '('", cur().span);
        }
        int depth = 0;
        do {
            if (cur().is("(")) {
                ++depth;
            } else if (cur().is(")")) {
                --depth;
            }
            copy();
        } while (depth > 0);
    }

    void statement() {
        const Token& t = cur();
        if (t.is("for") || t.is("while")) {
            copy();
            paren_group();
            body();
        } else if (t.is("if")) {
            copy();
            paren_group();
            body();
            if (cur().is("else")) {
                copy();
                if (cur().is("if")) {
                    statement();
                } else {
                    body();
                }
            }
        } else if (t.is("{")) {
            copy();
            while (!cur().is("}")) {
                statement();
            }
            copy();
        } else {
            copy_simple();
        }
    }

    void body() {
        if (cur().is("{")) {
            statement();
            return;
        }
        out_.push_back(synthetic("{"));
        statement();
        out_.push_back(synthetic("}"));
    }

    const std::vector<Token>& in_;
    std::size_t pos_{0};
    std::vector<Token> out_;
};

bool is_keyword_before_paren(const Token& t) {
    return t.kind == TokenKind::Identifier &&
           (t.text == "if" || t.text == "for" || t.text == "while" || t.text == "returns");
}

bool is_operand_end(const Token& t) {
    if (t.kind == TokenKind::Identifier || t.kind == TokenKind::Number || t.kind == TokenKind::String) {
        return true;
    }
    return t.is(")") || t.is("]");
}

class Layout {
  public:
    std::string run(const std::vector<Token>& toks) {
        for (std::size_t i = 0; i < toks.size(); ++i) {
            const Token& t = toks[i];
            const Token* next = i + 1 < toks.size() ? &toks[i + 1] : nullptr;
            if (t.kind == TokenKind::Pragma) {
                begin_line();
                out_ += t.text;
                newline();
                continue;
            }
            if (t.is("}")) {
                --indent_;
                begin_line();
                out_ += "}";
                bool joined = next && (next->is("else") || next->is(";"));
                prev_ = &t;
                if (!joined) {
                    newline();
                }
                continue;
            }
            emit_token(t);
            if (t.is("(") || t.is("[")) {
                ++paren_;
            } else if (t.is(")") || t.is("]")) {
                --paren_;
            }
            if (t.is("{")) {
                ++indent_;
                newline();
            } else if (t.is(";") && paren_ == 0) {
                newline();
            }
            prev_ = &t;
        }
        if (!at_line_start_) {
            newline();
        }
        return out_;
    }

  private:
    void begin_line() {
        if (!at_line_start_) {
            newline();
        }
        out_.append(static_cast<std::size_t>(std::max(indent_, 0)) * 4, ' ');
        at_line_start_ = false;
        prev_ = nullptr;
    }

    void newline() {
        out_ += '\n';
        at_line_start_ = true;
        prev_ = nullptr;
    }

    [[nodiscard]] bool wants_space(const Token& t) const {
        if (prev_ == nullptr) {
            return false;
        }
        const Token& a = *prev_;
        if (t.is(";") || t.is(",") || t.is(")") || t.is("]") || t.is(".")) {
            return false;
        }
        if (a.is("(") || a.is("[") || a.is(".") || a.is("!")) {
            return false;
        }
        if (t.is("(")) {
            return is_keyword_before_paren(a) || !(a.kind == TokenKind::Identifier || a.is(")") || a.is("]"));
        }
        if (t.is("[")) {
            return !(a.kind == TokenKind::Identifier || a.is("]") || a.is(")"));
        }
        if (t.is("++") || t.is("--")) {
            return !is_operand_end(a);
        }
        if ((a.is("++") || a.is("--")) && prefix_incdec_) {
            return false;
        }
        return true;
    }

    void emit_token(const Token& t) {
        if (at_line_start_) {
            begin_line();
        } else if (wants_space(t)) {
            out_ += ' ';
        }
        if (t.is("++") || t.is("--")) {
            prefix_incdec_ = prev_ == nullptr || !is_operand_end(*prev_);
        }
        out_ += t.text;
        prev_ = &t;
    }

    std::string out_;
    int indent_{0};
    int paren_{0};
    bool at_line_start_{true};
    bool prefix_incdec_{false};
    const Token* prev_{nullptr};
};

}  // namespace

SourceFile normalize_source(const SourceFile& src) {
    auto tokens = lex(src);
    auto braced = BraceInserter(tokens).run();
    return SourceFile(src.path(), Layout().run(braced));
}

}  // namespace gasgauge::frontend
