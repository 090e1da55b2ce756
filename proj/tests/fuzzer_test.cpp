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

#include <bit>

#include "gasgauge/fuzzer/fuzzer.hpp"
#include "support.hpp"

namespace gasgauge {
namespace {

using fuzzer::Bitstring;
using fuzzer::FuzzOptions;
using fuzzer::FuzzStatus;
using fuzzer::MutationStrategy;

struct Target {
    testing::Analyzed a;
    depgraph::FuzzTarget target;
};

Target target_of(const std::string& corpusName, const std::string& signature) {
    auto a = testing::analyze(testing::load_corpus_contract(corpusName));
    for (auto& t : depgraph::select_fuzz_targets(a.contract.ast, a.bounds)) {
        if (t.functionSignature == signature) {
            return {std::move(a), t};
        }
    }
    throw Error(ErrorKind::Internal, "no target " + signature);
}

int popcount(const Bitstring& bits) {
    int n = 0;
    for (auto b : bits) {
        n += std::popcount(b);
    }
    return n;
}

TEST(Inputs, InitialVectorIsAllZero) {
    auto t = target_of("cards.msol", "hasCardExpired(uint256[],uint256)");
    auto v = fuzzer::initial_inputs(t.target, t.a.contract.ast);
    ASSERT_EQ(v.values.size(), 2u);
    EXPECT_EQ(v.values[0].declaredSize, U256(0));
    EXPECT_TRUE(v.values[0].elements.empty());
    EXPECT_EQ(v.values[1].scalar, U256(0));
    auto bits = fuzzer::encode(v, t.target);
    EXPECT_EQ(bits.size(), 64u);
    EXPECT_EQ(popcount(bits), 0);
}

TEST(Inputs, EncodeDecodeRoundTrip) {
    auto t = target_of("cards.msol", "hasCardExpired(uint256[],uint256)");
    auto base = fuzzer::initial_inputs(t.target, t.a.contract.ast);
    Bitstring bits(64, 0);
    fuzzer::set_bit(bits, 256 + 3, true);  // first word: array size 8
    fuzzer::set_bit(bits, 0, true);        // second word: scalar 1
    fuzzer::set_bit(bits, 255, true);      // scalar top bit
    auto v = fuzzer::decode(bits, t.target, base);
    EXPECT_EQ(v.values[0].declaredSize, U256(8));
    EXPECT_EQ(v.values[0].elements.size(), 8u);
    EXPECT_EQ(v.values[1].scalar, (U256(1) << 255) + 1);
    EXPECT_EQ(fuzzer::encode(v, t.target), bits);
}

TEST(Inputs, OversizedArraysAreTruncated) {
    auto t = target_of("testcontract.msol", "addNumbers(uint256[])");
    auto base = fuzzer::initial_inputs(t.target, t.a.contract.ast);
    Bitstring bits(32, 0);
    fuzzer::set_bit(bits, 100, true);
    auto v = fuzzer::decode(bits, t.target, base, 16);
    EXPECT_TRUE(v.values[0].truncated);
    EXPECT_EQ(v.values[0].elements.size(), 16u);
    EXPECT_EQ(v.values[0].declaredSize, U256(1) << 100);
    auto args = fuzzer::to_args(v);
    EXPECT_EQ(std::get<gasvm::ArrayValue>(args[0]).length, U256(1) << 100);
}

TEST(Inputs, BoolAndAddressAreNormalized) {
    auto a = testing::analyze(testing::load_text(
        "contract C { uint s; function f(uint n, bool on, address who) public { "
        "for (uint i = 0; i < n; i++) { if (on && who != address(0)) { s += 1; } } } }"));
    depgraph::FuzzTarget t{"f(uint256,bool,address)", 0, {0, 1, 2}, {0}};
    auto base = fuzzer::initial_inputs(t, a.contract.ast);
    Bitstring bits(96, 0xff);
    auto v = fuzzer::decode(bits, t, base);
    EXPECT_EQ(v.values[1].scalar, U256(1));
    EXPECT_EQ(v.values[2].scalar, (U256(1) << 160) - 1);
}

TEST(Inputs, DecodeRejectsWrongLength) {
    auto t = target_of("testcontract.msol", "addNumbers(uint256[])");
    auto base = fuzzer::initial_inputs(t.target, t.a.contract.ast);
    EXPECT_THROW(fuzzer::decode(Bitstring(31, 0), t.target, base), Error);
}

TEST(Mutate, BitIndexZeroIsTheLowBitOfTheLastByte) {
    Bitstring bits(4, 0);
    fuzzer::set_bit(bits, 0, true);
    EXPECT_EQ(bits[3], 1);
    fuzzer::set_bit(bits, 9, true);
    EXPECT_EQ(bits[2], 2);
    EXPECT_TRUE(fuzzer::get_bit(bits, 9));
    EXPECT_FALSE(fuzzer::get_bit(bits, 8));
}

TEST(Mutate, BitFlipTouchesOneBit) {
    std::mt19937_64 rng(1);
    Bitstring bits(8, 0x5a);
    for (std::size_t i = 0; i < 64; ++i) {
        auto out = fuzzer::mutate_at(bits, MutationStrategy::BitFlip, i, rng);
        for (std::size_t j = 0; j < 64; ++j) {
            EXPECT_EQ(fuzzer::get_bit(out, j) != fuzzer::get_bit(bits, j), i == j);
        }
    }
}

TEST(Mutate, ByteFlipInvertsFromIndexToByteEnd) {
    std::mt19937_64 rng(1);
    Bitstring bits(2, 0);
    auto out = fuzzer::mutate_at(bits, MutationStrategy::ByteFlip, 3, rng);
    EXPECT_EQ(out[1], 0xf8);
    EXPECT_EQ(out[0], 0x00);
    out = fuzzer::mutate_at(bits, MutationStrategy::ByteFlip, 8, rng);
    EXPECT_EQ(out[0], 0xff);
    EXPECT_EQ(out[1], 0x00);
}

TEST(Mutate, ByteShufflePermutesTheSuffixOnly) {
    std::mt19937_64 rng(7);
    Bitstring bits{0x00, 0b10110010};
    for (std::size_t i = 0; i < 8; ++i) {
        for (int rep = 0; rep < 20; ++rep) {
            auto out = fuzzer::mutate_at(bits, MutationStrategy::ByteShuffle, i, rng);
            EXPECT_EQ(out[0], 0x00);
            auto low = static_cast<std::uint8_t>((1u << i) - 1);
            EXPECT_EQ(out[1] & low, bits[1] & low);
            EXPECT_EQ(std::popcount(static_cast<std::uint8_t>(out[1] & ~low)),
                      std::popcount(static_cast<std::uint8_t>(bits[1] & ~low)));
        }
    }
}

TEST(Mutate, ByteShuffleOfZeroesIsIdentity) {
    std::mt19937_64 rng(3);
    Bitstring bits(32, 0);
    for (int rep = 0; rep < 100; ++rep) {
        EXPECT_EQ(fuzzer::mutate(bits, MutationStrategy::ByteShuffle, rng), bits);
    }
}

TEST(Mutate, StrategyNames) {
    EXPECT_EQ(fuzzer::parse_strategy("bitflip"), MutationStrategy::BitFlip);
    EXPECT_EQ(fuzzer::parse_strategy("byteshuffle"), MutationStrategy::ByteShuffle);
    EXPECT_EQ(fuzzer::to_string(MutationStrategy::ByteFlip), "byteflip");
    EXPECT_THROW(fuzzer::parse_strategy("havoc"), Error);
}

TEST(Fuzz, FindsOutOfGasOnTestContract) {
    auto t = target_of("testcontract.msol", "addNumbers(uint256[])");
    FuzzOptions o;
    o.seed = 7;
    auto r = fuzzer::fuzz(t.target, t.a.contract.ast, gasvm::GasCostModel{}, o);
    ASSERT_EQ(r.status, FuzzStatus::OogFound);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_LE(r.tries, o.maxTries);
    EXPECT_EQ(r.perTryOutcomes.size(), r.tries);
    EXPECT_TRUE(gasvm::is_oog(r.perTryOutcomes.back()));
    for (std::size_t i = 0; i + 1 < r.perTryOutcomes.size(); ++i) {
        EXPECT_FALSE(gasvm::is_oog(r.perTryOutcomes[i]));
    }
}

TEST(Fuzz, WitnessesReplayToOutOfGasOnCorpus) {
    int found = 0;
    for (const auto& f : testing::load_corpus()) {
        auto a = testing::analyze(frontend::load_contract(f.source));
        auto targets = depgraph::select_fuzz_targets(a.contract.ast, a.bounds);
        for (std::size_t i = 0; i < targets.size(); ++i) {
            FuzzOptions o;
            o.seed = 11;
            o.targetIndex = i;
            auto r = fuzzer::fuzz(targets[i], a.contract.ast, gasvm::GasCostModel{}, o);
            if (r.status != FuzzStatus::OogFound) {
                continue;
            }
            ++found;
            gasvm::CallSpec call{targets[i].functionSignature, fuzzer::to_args(*r.witness), {}};
            EXPECT_TRUE(gasvm::is_oog(gasvm::execute(a.contract.ast, call, gasvm::GasCostModel{})))
                << f.name << " " << targets[i].functionSignature;
        }
    }
    EXPECT_GE(found, 10);
}

TEST(Fuzz, SameSeedSameCampaign) {
    auto t = target_of("mod250.msol", "settle(uint256)");
    FuzzOptions o;
    o.seed = 99;
    o.maxTries = 30;
    auto a = fuzzer::fuzz(t.target, t.a.contract.ast, gasvm::GasCostModel{}, o);
    auto b = fuzzer::fuzz(t.target, t.a.contract.ast, gasvm::GasCostModel{}, o);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.tries, b.tries);
    EXPECT_EQ(a.witness, b.witness);
}

TEST(Fuzz, TargetIndexChangesTheStream) {
    auto x = fuzzer::make_rng(5, 0);
    auto y = fuzzer::make_rng(5, 1);
    auto z = fuzzer::make_rng(5, 0);
    auto vx = x();
    EXPECT_NE(vx, y());
    EXPECT_EQ(vx, z());
}

TEST(Fuzz, ExhaustsWhenNoInputTriggersOutOfGas) {
    auto a = testing::analyze(testing::load_text(
        "contract C { uint s; function f(uint n) public { for (uint i = 0; i < n % 4; i++) { s += 1; } } }"));
    auto targets = depgraph::select_fuzz_targets(a.contract.ast, a.bounds);
    ASSERT_EQ(targets.size(), 1u);
    FuzzOptions o;
    o.maxTries = 25;
    auto r = fuzzer::fuzz(targets[0], a.contract.ast, gasvm::GasCostModel{}, o);
    EXPECT_EQ(r.status, FuzzStatus::Exhausted);
    EXPECT_EQ(r.tries, 25u);
    EXPECT_FALSE(r.witness.has_value());
}

TEST(Fuzz, NoInfluencingInputsIsUnsupported) {
    auto a = testing::analyze(testing::load_corpus_contract("smallbank.msol"));
    depgraph::FuzzTarget t{"addInterest(uint256)", a.contract.ast.find_function("addInterest"), {}, {0}};
    auto r = fuzzer::fuzz(t, a.contract.ast, gasvm::GasCostModel{}, FuzzOptions{});
    EXPECT_EQ(r.status, FuzzStatus::TargetUnsupported);
    EXPECT_FALSE(r.reason.empty());
    EXPECT_EQ(r.tries, 0u);
}

TEST(Fuzz, RestartMutatesTheInitialVector) {
    auto t = target_of("mod250.msol", "settle(uint256)");
    FuzzOptions o;
    o.restart = true;
    o.maxTries = 200;
    auto r = fuzzer::fuzz(t.target, t.a.contract.ast, gasvm::GasCostModel{}, o);
    // Every candidate is one flipped bit of zero: 2^k, and 2^k % 250 in [241, 249] exists.
    ASSERT_EQ(r.status, FuzzStatus::OogFound);
    U256 w = r.witness->values[0].scalar;
    EXPECT_EQ(w & (w - 1), U256(0));
    U256 iterations = w % 250;
    EXPECT_GE(iterations, U256(241));
}

}  // namespace
}  // namespace gasgauge
