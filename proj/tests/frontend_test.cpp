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

#include <gtest/gtest.h>

#include "gasgauge/frontend/lexer.hpp"
#include "gasgauge/frontend/normalize.hpp"
#include "gasgauge/frontend/parser.hpp"
#include "gasgauge/frontend/printer.hpp"
#include "gasgauge/frontend/sema.hpp"
#include "support.hpp"

namespace gasgauge {
namespace {

using frontend::dump_tree;
using frontend::normalize_source;
using frontend::parse_checked;

std::string normalized(const std::string& text) { return normalize_source(SourceFile("t.msol", text)).content(); }

ErrorKind error_kind(const std::string& text) {
    try {
        frontend::load_contract(SourceFile("t.msol", text));
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

TEST(Normalize, WrapsSingleStatementBodyAndDropsComment) {
    std::string out = normalized("for(uint i=0;i<n;i++) x+=1; // hot\n");
    EXPECT_EQ(out, "for (uint i = 0; i < n; i++) {\n    x += 1;\n}\n");
}

TEST(Normalize, FullyBracedInputIsAFixpoint) {
    std::string once = normalized("contract C {\n    function f(uint n) public {\n        uint x = 0;\n"
                                  "        for (uint i = 0; i < n; i++) {\n            x += 1;\n        }\n    }\n}\n");
    EXPECT_EQ(normalized(once), once);
}

TEST(Normalize, IdempotentOnCorpus) {
    for (const auto& f : testing::load_corpus()) {
        SourceFile once = normalize_source(f.source);
        EXPECT_EQ(normalize_source(once).content(), once.content()) << f.name;
    }
}

TEST(Normalize, SameTreeAsOriginalOnCorpus) {
    for (const auto& f : testing::load_corpus()) {
        auto original = parse_checked(f.source);
        auto norm = parse_checked(normalize_source(f.source));
        EXPECT_EQ(dump_tree(original), dump_tree(norm)) << f.name;
    }
}

TEST(Normalize, UnterminatedCommentReportsLineAndColumn) {
    try {
        normalize_source(SourceFile("t.msol", "contract C {\n  /* open\n}\n"));
        FAIL() << "expected a lex error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Lex);
        ASSERT_TRUE(e.span().has_value());
        EXPECT_EQ(e.format(SourceFile("t.msol", "contract C {\n  /* open\n}\n")).rfind("t.msol:2:3:", 0), 0u);
    }
}

TEST(Normalize, UnterminatedStringIsALexError) {
    EXPECT_EQ(error_kind("contract C { function f() public { require(true, \"x); } }"), ErrorKind::Lex);
}

TEST(Parse, SmallBankHasTwoFunctionsAndOneStateArray) {
    auto c = testing::load_corpus_contract("smallbank.msol");
    EXPECT_EQ(c.ast.name, "SmallBank");
    EXPECT_EQ(c.ast.functions.size(), 2u);
    std::size_t arrays = 0;
    for (const auto& v : c.ast.stateVars) {
        arrays += v.type.is_array() ? 1 : 0;
    }
    EXPECT_EQ(arrays, 1u);
    EXPECT_EQ(c.ast.stateVars[0].name, "users");
}

TEST(Parse, TestContractHasOneFunctionWithTwoLoops) {
    auto c = testing::load_corpus_contract("testcontract.msol");
    ASSERT_EQ(c.ast.functions.size(), 1u);
    EXPECT_EQ(c.ast.functions[0].signature(), "addNumbers(uint256[])");
    EXPECT_EQ(c.ast.loops.size(), 2u);
}

TEST(Parse, EmptyContract) {
    auto c = testing::load_text("contract C {}");
    EXPECT_EQ(c.ast.name, "C");
    EXPECT_TRUE(c.ast.functions.empty());
    EXPECT_TRUE(c.ast.stateVars.empty());
}

TEST(Parse, ExternalCallIsUnsupported) {
    EXPECT_EQ(error_kind("contract C { address[] u; function f() public { u[0].call(); } }"),
              ErrorKind::Unsupported);
}

TEST(Parse, RecordTypeIsUnsupported) {
    EXPECT_EQ(error_kind("contract C { struct S { uint a; } }"), ErrorKind::Unsupported);
}

TEST(Parse, MissingSemicolonIsASyntaxError) {
    EXPECT_EQ(error_kind("contract C { function f() public { uint x = 1 } }"), ErrorKind::Syntax);
}

TEST(Sema, UnknownIdentifierIsSemantic) {
    EXPECT_EQ(error_kind("contract C { function f() public { y = 1; } }"), ErrorKind::Semantic);
}

TEST(Sema, AssigningBoolToUintIsSemantic) {
    EXPECT_EQ(error_kind("contract C { function f() public { uint x = true; } }"), ErrorKind::Semantic);
}

TEST(Printer, RoundTripOnCorpus) {
    for (const auto& f : testing::load_corpus()) {
        auto ast = parse_checked(f.source);
        std::string printed = frontend::print_contract(ast);
        auto again = parse_checked(SourceFile("printed.msol", printed));
        EXPECT_EQ(dump_tree(ast), dump_tree(again)) << f.name << "\n" << printed;
    }
}

TEST(Printer, KeepsPrecedence) {
    auto c = testing::load_text("contract C { function f(uint a, uint b) public returns (uint) { return (a + b) * 2 - a / (b + 1); } }");
    const auto& ret = *c.ast.functions[0].body[0];
    EXPECT_EQ(frontend::print_expr(*ret.value), "(a + b) * 2 - a / (b + 1)");
}

void check_spans(const frontend::Expr& e, const Span& outer, std::uint32_t size) {
    EXPECT_TRUE(outer.contains(e.span));
    EXPECT_LE(e.span.end, size);
    for (const auto& k : e.kids) {
        check_spans(*k, e.span, size);
    }
}

void check_spans(const frontend::StmtList& list, const Span& outer, std::uint32_t size) {
    for (const auto& s : list) {
        EXPECT_TRUE(outer.contains(s->span));
        for (const auto* e : {s->target.get(), s->value.get(), s->cond.get()}) {
            if (e) {
                check_spans(*e, s->span, size);
            }
        }
        if (s->init) {
            EXPECT_TRUE(s->span.contains(s->init->span));
        }
        if (s->update) {
            EXPECT_TRUE(s->span.contains(s->update->span));
        }
        check_spans(s->body, s->span, size);
        check_spans(s->elseBody, s->span, size);
    }
}

TEST(Spans, NestWithTheTreeOnCorpus) {
    for (const auto& f : testing::load_corpus()) {
        auto c = frontend::load_contract(f.source);
        auto size = static_cast<std::uint32_t>(c.normalized.content().size());
        for (const auto& fn : c.ast.functions) {
            EXPECT_TRUE(c.ast.span.contains(fn.span)) << f.name;
            check_spans(fn.body, fn.span, size);
        }
    }
}

TEST(Lexer, PragmaIsOneToken) {
    auto toks = frontend::lex(SourceFile("t.msol", "pragma solidity >=0.4.24 <0.7;\ncontract C {}"));
    ASSERT_GE(toks.size(), 2u);
    EXPECT_EQ(toks[0].kind, frontend::TokenKind::Pragma);
    EXPECT_TRUE(toks[1].is("contract"));
}

}  // namespace
}  // namespace gasgauge
