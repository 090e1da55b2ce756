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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gasgauge/depgraph/depgraph.hpp"
#include "gasgauge/gasvm/interpreter.hpp"

namespace gasgauge::fuzzer {

enum class MutationStrategy { BitFlip, ByteFlip, ByteShuffle };

std::string_view to_string(MutationStrategy s);
MutationStrategy parse_strategy(std::string_view text);  // bitflip | byteflip | byteshuffle

struct InputValue {
    std::string name;
    frontend::MiniSolType type;
    U256 scalar{0};                // uint256 / bool / address
    U256 declaredSize{0};          // arrays
    std::vector<U256> elements;    // arrays: min(declaredSize, cap) materialized elements
    bool truncated{false};

    friend bool operator==(const InputValue&, const InputValue&) = default;
};

struct InputVector {
    std::vector<InputValue> values;  // one per parameter, in order
    friend bool operator==(const InputVector&, const InputVector&) = default;
};

// Big-endian bytes; bit index 0 is the least significant bit of the last byte.
using Bitstring = std::vector<std::uint8_t>;

constexpr std::uint64_t kDefaultCap = 1u << 16;

// Zero integers, false booleans, the zero address and empty arrays.
// Throws Error{Unsupported} for record-typed or nested-array parameters.
InputVector initial_inputs(const depgraph::FuzzTarget& target, const frontend::ContractAst& ast);

// One 256-bit word per influencing input (arrays encode declaredSize), in parameter order.
Bitstring encode(const InputVector& inputs, const depgraph::FuzzTarget& target);

// Restarts from `base` for non-influencing inputs; arrays get min(size, cap) elements of `fill`.
InputVector decode(const Bitstring& bits, const depgraph::FuzzTarget& target, const InputVector& base,
                   std::uint64_t cap = kDefaultCap, const U256& fill = 1);

[[nodiscard]] inline bool get_bit(const Bitstring& bits, std::size_t index) {
    return (bits[bits.size() - 1 - index / 8] >> (index % 8)) & 1u;
}
void set_bit(Bitstring& bits, std::size_t index, bool value);

// Mutation at a chosen bit; `rng` is only used by ByteShuffle.
Bitstring mutate_at(const Bitstring& bits, MutationStrategy strategy, std::size_t bitIndex, std::mt19937_64& rng);
Bitstring mutate(const Bitstring& bits, MutationStrategy strategy, std::mt19937_64& rng);

std::vector<gasvm::Value> to_args(const InputVector& inputs);

enum class FuzzStatus { OogFound, Exhausted, TargetUnsupported };
std::string_view to_string(FuzzStatus s);

struct FuzzOptions {
    std::uint32_t maxTries{10};
    MutationStrategy strategy{MutationStrategy::BitFlip};
    std::uint64_t seed{0};
    std::uint64_t targetIndex{0};  // mixes into the RNG stream
    std::uint64_t cap{kDefaultCap};
    U256 fill{1};
    bool restart{false};  // mutate the initial vector each round instead of the last candidate
};

struct FuzzResult {
    std::string signature;
    FuzzStatus status{FuzzStatus::Exhausted};
    std::optional<InputVector> witness;
    std::uint32_t tries{0};
    std::vector<gasvm::ExecOutcome> perTryOutcomes;
    std::string reason;  // TargetUnsupported
};

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t targetIndex);

FuzzResult fuzz(const depgraph::FuzzTarget& target, const frontend::ContractAst& ast, const gasvm::GasCostModel& model,
                const FuzzOptions& options);

}  // namespace gasgauge::fuzzer
