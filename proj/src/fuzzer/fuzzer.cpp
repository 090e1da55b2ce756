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

#include "gasgauge/fuzzer/fuzzer.hpp"

#include <algorithm>

namespace gasgauge::fuzzer {

using frontend::TypeKind;

std::string_view to_string(MutationStrategy s) {
    switch (s) {
        case MutationStrategy::BitFlip: return "bitflip";
        case MutationStrategy::ByteFlip: return "byteflip";
        case MutationStrategy::ByteShuffle: return "byteshuffle";
    }
    return "?";
}

MutationStrategy parse_strategy(std::string_view text) {
    for (auto s : {MutationStrategy::BitFlip, MutationStrategy::ByteFlip, MutationStrategy::ByteShuffle}) {
        if (to_string(s) == text) {
            return s;
        }
    }
    throw Error(ErrorKind::Io, "unknown mutation strategy '" + std::string(text) + "'");
}

std::string_view to_string(FuzzStatus s) {
    switch (s) {
        case FuzzStatus::OogFound: return "OogFound";
        case FuzzStatus::Exhausted: return "Exhausted";
        case FuzzStatus::TargetUnsupported: return "TargetUnsupported";
    }
    return "?";
}

InputVector initial_inputs(const depgraph::FuzzTarget& target, const frontend::ContractAst& ast) {
    const auto& fn = ast.functions.at(static_cast<std::size_t>(target.functionIndex));
    InputVector v;
    for (const auto& p : fn.params) {
        if (p.type.kind == TypeKind::Record || p.type.kind == TypeKind::Mapping) {
            throw Error(ErrorKind::Unsupported, "parameter '" + p.name + "' has unsupported type " + type_name(p.type),
                        p.span);
        }
        v.values.push_back({p.name, p.type, 0, 0, {}, false});
    }
    return v;
}

namespace {

constexpr std::size_t kWordBytes = 32;

void put_word(Bitstring& out, const U256& value) {
    std::size_t start = out.size();
    out.resize(start + kWordBytes, 0);
    U256 v = value;
    for (std::size_t i = 0; i < kWordBytes; ++i) {
        out[start + kWordBytes - 1 - i] = static_cast<std::uint8_t>(v & 0xff);
        v >>= 8;
    }
}

U256 get_word(const Bitstring& bits, std::size_t word) {
    U256 v = 0;
    for (std::size_t i = 0; i < kWordBytes; ++i) {
        v <<= 8;
        v |= bits[word * kWordBytes + i];
    }
    return v;
}

}  // namespace

Bitstring encode(const InputVector& inputs, const depgraph::FuzzTarget& target) {
    Bitstring out;
    for (int p : target.influencingParams) {
        const InputValue& v = inputs.values.at(static_cast<std::size_t>(p));
        put_word(out, v.type.is_array() ? v.declaredSize : v.scalar);
    }
    return out;
}

InputVector decode(const Bitstring& bits, const depgraph::FuzzTarget& target, const InputVector& base,
                   std::uint64_t cap, const U256& fill) {
    if (bits.size() != target.influencingParams.size() * kWordBytes) {
        throw Error(ErrorKind::Internal, "bitstring length does not match the target's influencing inputs");
    }
    InputVector out = base;
    for (std::size_t w = 0; w < target.influencingParams.size(); ++w) {
        InputValue& v = out.values.at(static_cast<std::size_t>(target.influencingParams[w]));
        U256 word = get_word(bits, w);
        if (v.type.is_array()) {
            v.declaredSize = word;
            std::uint64_t n = word < cap ? static_cast<std::uint64_t>(word) : cap;
            v.elements.assign(static_cast<std::size_t>(n), fill);
            v.truncated = word > cap;
        } else if (v.type.kind == TypeKind::Bool) {
            v.scalar = word != 0 ? 1 : 0;
        } else if (v.type.kind == TypeKind::Address) {
            v.scalar = word & ((U256(1) << 160) - 1);
        } else {
            v.scalar = word;
        }
    }
    return out;
}

void set_bit(Bitstring& bits, std::size_t index, bool value) {
    std::uint8_t& byte = bits[bits.size() - 1 - index / 8];
    auto mask = static_cast<std::uint8_t>(1u << (index % 8));
    byte = value ? static_cast<std::uint8_t>(byte | mask) : static_cast<std::uint8_t>(byte & ~mask);
}

Bitstring mutate_at(const Bitstring& bits, MutationStrategy strategy, std::size_t bitIndex, std::mt19937_64& rng) {
    if (bits.empty()) {
        throw Error(ErrorKind::Internal, "cannot mutate an empty bitstring");
    }
    if (bitIndex >= bits.size() * 8) {
        throw Error(ErrorKind::Internal, "bit index out of range");
    }
    Bitstring out = bits;
    std::size_t byteBase = bitIndex - bitIndex % 8;
    switch (strategy) {
        case MutationStrategy::BitFlip: set_bit(out, bitIndex, !get_bit(out, bitIndex)); break;
        case MutationStrategy::ByteFlip:
            for (std::size_t i = bitIndex; i < byteBase + 8; ++i) {
                set_bit(out, i, !get_bit(out, i));
            }
            break;
        case MutationStrategy::ByteShuffle: {
            std::vector<bool> suffix;
            for (std::size_t i = bitIndex; i < byteBase + 8; ++i) {
                suffix.push_back(get_bit(out, i));
            }
            // Fisher-Yates with the campaign RNG keeps runs reproducible across standard libraries.
            for (std::size_t i = suffix.size(); i > 1; --i) {
                std::size_t j = static_cast<std::size_t>(rng() % i);
                bool tmp = suffix[i - 1];
                suffix[i - 1] = suffix[j];
                suffix[j] = tmp;
            }
            for (std::size_t i = 0; i < suffix.size(); ++i) {
                set_bit(out, bitIndex + i, suffix[i]);
            }
            break;
        }
    }
    return out;
}

Bitstring mutate(const Bitstring& bits, MutationStrategy strategy, std::mt19937_64& rng) {
    if (bits.empty()) {
        throw Error(ErrorKind::Internal, "cannot mutate an empty bitstring");
    }
    std::size_t index = static_cast<std::size_t>(rng() % (bits.size() * 8));
    return mutate_at(bits, strategy, index, rng);
}

std::vector<gasvm::Value> to_args(const InputVector& inputs) {
    std::vector<gasvm::Value> args;
    for (const auto& v : inputs.values) {
        if (v.type.is_array()) {
            gasvm::ArrayValue a;
            a.length = v.declaredSize;
            a.dense = v.elements;
            a.fill = v.elements.empty() ? U256(1) : v.elements.back();
            args.emplace_back(std::move(a));
        } else {
            args.emplace_back(v.scalar);
        }
    }
    return args;
}

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t targetIndex) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(targetIndex), static_cast<std::uint32_t>(targetIndex >> 32)};
    return std::mt19937_64(seq);
}

FuzzResult fuzz(const depgraph::FuzzTarget& target, const frontend::ContractAst& ast, const gasvm::GasCostModel& model,
                const FuzzOptions& options) {
    FuzzResult result;
    result.signature = target.functionSignature;
    InputVector initial;
    try {
        initial = initial_inputs(target, ast);
    } catch (const Error& e) {
        result.status = FuzzStatus::TargetUnsupported;
        result.reason = e.what();
        return result;
    }
    if (target.influencingParams.empty()) {
        result.status = FuzzStatus::TargetUnsupported;
        result.reason = "target has no influencing inputs";
        return result;
    }
    std::mt19937_64 rng = make_rng(options.seed, options.targetIndex);
    const Bitstring start = encode(initial, target);
    Bitstring bits = start;
    gasvm::CallSpec call{target.functionSignature, {}, {}};
    for (std::uint32_t t = 1; t <= options.maxTries; ++t) {
        bits = mutate(options.restart ? start : bits, options.strategy, rng);
        InputVector candidate = decode(bits, target, initial, options.cap, options.fill);
        call.args = to_args(candidate);
        gasvm::ExecOutcome outcome = gasvm::execute(ast, call, model);
        result.tries = t;
        bool oog = gasvm::is_oog(outcome);
        result.perTryOutcomes.push_back(std::move(outcome));
        if (oog) {
            result.status = FuzzStatus::OogFound;
            result.witness = std::move(candidate);
            return result;
        }
    }
    result.status = FuzzStatus::Exhausted;
    return result;
}

}  // namespace gasgauge::fuzzer
