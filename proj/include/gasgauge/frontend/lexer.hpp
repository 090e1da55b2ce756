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

#include <string>
#include <vector>

#include "gasgauge/source.hpp"

namespace gasgauge::frontend {

enum class TokenKind {
    Identifier,  // includes keywords
    Number,
    String,
    Pragma,  // whole `pragma ... ;` directive as one token
    Punct,
    End,
};

struct Token {
    TokenKind kind{TokenKind::End};
    std::string text;  // raw spelling; strings keep their quotes
    Span span;

    [[nodiscard]] bool is(std::string_view s) const {
        return (kind == TokenKind::Punct || kind == TokenKind::Identifier) && text == s;
    }
};

// Comments are dropped. Throws Error{Lex} on unterminated comments/strings and
// stray characters.
std::vector<Token> lex(const SourceFile& file);

}  // namespace gasgauge::frontend
