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

#include <set>

#include "gasgauge/depgraph/depgraph.hpp"
#include "support.hpp"

namespace gasgauge {
namespace {

using depgraph::Root;
using depgraph::VarClass;

testing::Analyzed analyzed(const std::string& corpusName) {
    return testing::analyze(testing::load_corpus_contract(corpusName));
}

testing::Analyzed analyzed_text(const std::string& text) { return testing::analyze(testing::load_text(text)); }

std::set<std::pair<std::string, VarClass>> root_set(const std::vector<Root>& roots) {
    std::set<std::pair<std::string, VarClass>> out;
    for (const auto& r : roots) {
        out.insert({r.name, r.cls});
    }
    return out;
}

TEST(Classify, SmallBankBoundIsStateArrayAndLocalCounter) {
    auto a = analyzed("smallbank.msol");
    const auto& b = a.bound_of(0);
    ASSERT_EQ(b.vars.size(), 2u);
    ASSERT_NE(b.find("users"), nullptr);
    EXPECT_EQ(b.find("users")->cls, VarClass::State);
    EXPECT_EQ(b.find("users")->type, "address[]");
    ASSERT_NE(b.find("i"), nullptr);
    EXPECT_EQ(b.find("i")->cls, VarClass::Local);
    for (const auto& r : b.find("i")->roots) {
        EXPECT_EQ(r.cls, VarClass::Fixed);
    }
}

TEST(Classify, SmallBankRecordsCrossFunctionWriter) {
    auto a = analyzed("smallbank.msol");
    const auto& w = a.bound_of(0).crossFunctionWriters;
    EXPECT_NE(std::find(w.begin(), w.end(), "users <- addUsers(address)"), w.end());
}

TEST(Classify, TestContractFirstBoundIsInputArray) {
    auto a = analyzed("testcontract.msol");
    ASSERT_NE(a.bound_of(0).find("newNumbers"), nullptr);
    EXPECT_EQ(a.bound_of(0).find("newNumbers")->cls, VarClass::Input);
    EXPECT_EQ(a.bound_of(1).find("numbers")->cls, VarClass::State);
}

TEST(Classify, LiteralBoundIsFixed) {
    auto a = analyzed_text("contract C { uint s; function f() public { for (uint i = 0; i < 10; i++) { s += i; } } }");
    const auto& b = a.bound_of(0);
    ASSERT_NE(b.find("10"), nullptr);
    EXPECT_EQ(b.find("10")->cls, VarClass::Fixed);
    EXPECT_EQ(b.find("i")->cls, VarClass::Local);
    EXPECT_FALSE(b.has_input_root());
}

TEST(Classify, MappingBoundIsFlagged) {
    auto a = analyzed("mapping_bound.msol");
    const auto* v = a.bound_of(0).find("counts");
    ASSERT_NE(v, nullptr);
    EXPECT_EQ(v->cls, VarClass::State);
    EXPECT_TRUE(v->unboundedIterable);
}

TEST(Classify, PartitionOnCorpus) {
    for (const auto& f : testing::load_corpus()) {
        auto a = testing::analyze(frontend::load_contract(f.source));
        for (const auto& b : a.bounds) {
            std::set<std::string> idents;
            frontend::for_each_expr(*a.contract.ast.loop(b.loopId).cond, [&](const frontend::Expr& e) {
                if (e.kind == frontend::ExprKind::Ident) {
                    idents.insert(e.name);
                } else if (e.kind == frontend::ExprKind::Number) {
                    idents.insert(e.name);
                }
            });
            std::set<std::string> classed;
            for (const auto& v : b.vars) {
                EXPECT_TRUE(classed.insert(v.name).second) << f.name << " duplicate " << v.name;
                for (const auto& r : v.roots) {
                    EXPECT_NE(r.cls, VarClass::Local) << f.name;
                }
            }
            EXPECT_EQ(classed, idents) << f.name << " loop " << b.loopId;
        }
    }
}

TEST(Induct, OneStepSlice) {
    auto a = analyzed_text(
        "contract C { uint s; function f(uint input1) public { uint n = input1 + 3; "
        "for (uint i = 0; i < n; i++) { s += 1; } } }");
    auto ind = depgraph::induct_local("n", a.contract.ast.functions[0], a.contract.ast);
    EXPECT_EQ(root_set(ind.roots),
              (std::set<std::pair<std::string, VarClass>>{{"input1", VarClass::Input}, {"3", VarClass::Fixed}}));
    EXPECT_FALSE(ind.unrooted);
}

TEST(Induct, TwoStepChainThroughState) {
    auto a = analyzed_text(
        "contract C { uint[] users; uint s; function f() public { uint a = users.length; uint b = a * 2; "
        "for (uint i = 0; i < b; i++) { s += 1; } } }");
    auto ind = depgraph::induct_local("b", a.contract.ast.functions[0], a.contract.ast);
    EXPECT_EQ(root_set(ind.roots),
              (std::set<std::pair<std::string, VarClass>>{{"users", VarClass::State}, {"2", VarClass::Fixed}}));
}

TEST(Induct, CounterInitializedToLiteral) {
    auto a = analyzed_text("contract C { uint s; function f(uint n) public { for (uint i = 0; i < n; i++) { s += 1; } } }");
    auto ind = depgraph::induct_local("i", a.contract.ast.functions[0], a.contract.ast);
    EXPECT_EQ(root_set(ind.roots), (std::set<std::pair<std::string, VarClass>>{{"0", VarClass::Fixed}}));
}

TEST(Induct, SelfOnlyDependenceIsUnrooted) {
    auto a = analyzed_text(
        "contract C { uint s; function f() public { uint x; x = x + x; "
        "for (uint i = 0; i < x; i++) { s += 1; } } }");
    auto ind = depgraph::induct_local("x", a.contract.ast.functions[0], a.contract.ast);
    EXPECT_TRUE(ind.roots.empty());
    EXPECT_TRUE(ind.unrooted);
}

TEST(Induct, FollowsAssignmentsInsideLoops) {
    auto a = analyzed("countdown.msol");
    const auto* k = a.bound_of(0).find("remaining");
    ASSERT_NE(k, nullptr);
    EXPECT_EQ(root_set(k->roots), (std::set<std::pair<std::string, VarClass>>{{"n", VarClass::Input}}));
}

TEST(Targets, TestContractIsATargetWithNewNumbers) {
    auto a = analyzed("testcontract.msol");
    auto targets = depgraph::select_fuzz_targets(a.contract.ast, a.bounds);
    ASSERT_EQ(targets.size(), 1u);
    EXPECT_EQ(targets[0].functionSignature, "addNumbers(uint256[])");
    auto inputs = targets[0].influencing_inputs(a.contract.ast);
    ASSERT_EQ(inputs.size(), 1u);
    EXPECT_EQ(inputs[0].first, "newNumbers");
    EXPECT_EQ(inputs[0].second, "uint256[]");
}

TEST(Targets, StateBoundIsNotATarget) {
    auto a = analyzed("smallbank.msol");
    EXPECT_TRUE(depgraph::select_fuzz_targets(a.contract.ast, a.bounds).empty());
}

TEST(Targets, PrivateLoopsAreNotTargets) {
    auto a = analyzed_text(
        "contract C { uint s; function g(uint n) private { for (uint i = 0; i < n; i++) { s += 1; } } "
        "function f() public { g(3); } }");
    EXPECT_TRUE(depgraph::select_fuzz_targets(a.contract.ast, a.bounds).empty());
}

TEST(Targets, MatchAnnotationsOnCorpus) {
    for (const auto& f : testing::load_corpus()) {
        auto a = testing::analyze(frontend::load_contract(f.source));
        std::set<std::string> got;
        for (const auto& t : depgraph::select_fuzz_targets(a.contract.ast, a.bounds)) {
            EXPECT_FALSE(t.influencingParams.empty());
            got.insert(t.functionSignature);
        }
        EXPECT_EQ(got, f.targets) << f.name;
    }
}

// Varying a root changes the loop's natural iteration count for some value; varying a
// parameter outside the slice never does. Other uint parameters sit at 4.
TEST(Induct, SoundnessByDifferentialExecutionOnCorpus) {
    int checked = 0;
    for (const auto& f : testing::load_corpus()) {
        auto a = testing::analyze(frontend::load_contract(f.source));
        for (const auto& b : a.bounds) {
            int fi = a.contract.ast.loops.at(static_cast<std::size_t>(b.loopId)).function;
            const auto& fn = a.contract.ast.functions[static_cast<std::size_t>(fi)];
            gasvm::GasCostModel model;
            model.blockGasLimit = 1'000'000'000;
            threshold::HarnessOptions ho;
            ho.ceiling = 8;
            for (const auto& p : fn.params) {
                if (p.type.kind == frontend::TypeKind::Uint) {
                    ho.args[p.name] = 4;
                }
            }
            threshold::ProbeHarness h(a.contract.ast, a.forest_of(b.loopId), b.loopId, model, ho);
            std::set<std::string> roots;
            for (const auto& r : b.all_roots()) {
                roots.insert(r.name);
            }
            for (std::size_t p = 0; p < fn.params.size(); ++p) {
                const auto& type = fn.params[p].type;
                if (type.kind != frontend::TypeKind::Uint && !type.is_array()) {
                    continue;
                }
                testing::BoundKnob knob{fn.params[p].name, false, type.is_array(), static_cast<int>(p)};
                std::set<std::uint64_t> counts;
                int completed = 0;
                for (unsigned v : {1u, 2u, 3u, 5u, 8u, 13u}) {
                    auto e = gasvm::run(a.contract.ast, testing::with_knob(h, knob, v), model, h.base_overrides());
                    if (gasvm::is_completed(e.outcome)) {
                        ++completed;
                        counts.insert(e.iterations.count(b.loopId) ? e.iterations.at(b.loopId) : 0);
                    }
                }
                if (completed < 2) {
                    continue;
                }
                ++checked;
                if (roots.count(knob.name)) {
                    EXPECT_GT(counts.size(), 1u) << f.name << " loop " << b.loopId << " root " << knob.name;
                } else {
                    EXPECT_LE(counts.size(), 1u) << f.name << " loop " << b.loopId << " non-root " << knob.name;
                }
            }
        }
    }
    EXPECT_GE(checked, 30);
}

}  // namespace
}  // namespace gasgauge
