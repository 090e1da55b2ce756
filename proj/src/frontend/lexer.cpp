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

#include "gasgauge/frontend/lexer.hpp"

#include <array>
#include <cctype>

namespace gasgauge::frontend {

namespace {

constexpr std::array<std::string_view, 16> kTwoCharPuncts = {
    "+=", "-=", "*=", "/=", "%=", "++", "--", "==", "!=", "<=", ">=", "&&", "||", "=>", "**", "<<",
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }

class Lexer {
  public:
    explicit Lexer(const SourceFile& file) : file_(file), src_(file.content()) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_trivia();
            if (pos_ >= src_.size()) {
                out.push_back({TokenKind::End, "", {u32(pos_), u32(pos_)}});
                return out;
            }
            out.push_back(next());
            if (out.back().kind == TokenKind::Identifier && out.back().text == "pragma") {
                out.back() = pragma(out.back().span.begin);
            }
        }
    }

  private:
    static std::uint32_t u32(std::size_t v) { return static_cast<std::uint32_t>(v); }

    [[noreturn]] void fail(std::size_t at, const std::string& what) const {
        auto loc = file_.location(u32(at));
        throw Error(ErrorKind::Lex,
                    what + " at line " + std::to_string(loc.line) + ", column " + std::to_string(loc.column),
                    Span{u32(at), u32(at + 1)});
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    ++pos_;
                }
            } else if (c == '/' && peek(1) == '*') {
                std::size_t start = pos_;
                pos_ += 2;
                while (pos_ + 1 < src_.size() && !(src_[pos_] == '*' && src_[pos_ + 1] == '/')) {
                    ++pos_;
                }
                if (pos_ + 1 >= src_.size()) {
                    fail(start, "unterminated comment");
                }
                pos_ += 2;
            } else {
                return;
            }
        }
    }

    [[nodiscard]] char peek(std::size_t ahead) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    Token next() {
        std::size_t start = pos_;
        char c = src_[pos_];
        if (ident_start(c)) {
            while (pos_ < src_.size() && ident_char(src_[pos_])) {
                ++pos_;
            }
            return make(TokenKind::Identifier, start);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            // Swallow trailing alphanumerics so that `1e18` or `0x1f` lex as one token;
            // the parser validates the spelling.
            while (pos_ < src_.size() && (ident_char(src_[pos_]) || src_[pos_] == '.')) {
                ++pos_;
            }
            return make(TokenKind::Number, start);
        }
        if (c == '"' || c == '\'') {
            ++pos_;
            while (pos_ < src_.size() && src_[pos_] != c) {
                if (src_[pos_] == '\n') {
                    fail(start, "unterminated string literal");
                }
                if (src_[pos_] == '\\') {
                    ++pos_;
                }
                ++pos_;
            }
            if (pos_ >= src_.size()) {
                fail(start, "unterminated string literal");
            }
            ++pos_;
            return make(TokenKind::String, start);
        }
        for (auto two : kTwoCharPuncts) {
            if (c == two[0] && peek(1) == two[1]) {
                pos_ += 2;
                return make(TokenKind::Punct, start);
            }
        }
        static constexpr std::string_view kSingle = "{}()[];,.=+-*/%<>!&|?:^~";
        if (kSingle.find(c) != std::string_view::npos) {
            ++pos_;
            return make(TokenKind::Punct, start);
        }
        fail(start, std::string("unexpected character '") + c + "'");
    }

    Token pragma(std::uint32_t start) {
        while (pos_ < src_.size() && src_[pos_] != ';') {
            ++pos_;
        }
        if (pos_ >= src_.size()) {
            fail(start, "unterminated pragma directive");
        }
        ++pos_;
        Token t = make(TokenKind::Pragma, start);
        // Collapse interior whitespace so the directive has one canonical spelling.
        std::string canon;
        bool space = false;
        for (char ch : t.text) {
            if (std::isspace(static_cast<unsigned char>(ch))) {
                space = true;
                continue;
            }
            if (space && !canon.empty() && ch != ';') {
                canon += ' ';
            }
            space = false;
            canon += ch;
        }
        t.text = canon;
        return t;
    }

    Token make(TokenKind kind, std::size_t start) const {
        return {kind, src_.substr(start, pos_ - start), {u32(start), u32(pos_)}};
    }

    const SourceFile& file_;
    const std::string& src_;
    std::size_t pos_{0};
};

}  // namespace

std::vector<Token> lex(const SourceFile& file) { return Lexer(file).run(); }

}  // namespace gasgauge::frontend
