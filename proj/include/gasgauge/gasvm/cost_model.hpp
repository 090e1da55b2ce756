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
#include <filesystem>
#include <string>
#include <string_view>

namespace gasgauge::gasvm {

using Gas = std::uint64_t;

// EVM-inspired, not EVM-exact. Every field is configurable.
struct GasCostModel {
    Gas txBase{21000};
    Gas perStatement{3};
    Gas arith{5};
    Gas compare{3};
    Gas memRead{3};
    Gas storageRead{200};
    Gas storageWrite{5000};
    Gas arrayPushStorage{5100};
    Gas loopInit{40};
    Gas blockGasLimit{6'721'975};

    std::uint64_t iterationCap{1'000'000};  // per loop, per execution
    std::uint32_t callDepthCap{1024};

    // Throws Error{Io} for unknown keys or malformed values.
    void set(std::string_view key, std::string_view value);
    // blockGasLimit > txBase, and a forced iteration always costs something.
    void validate() const;

    // key=value lines; '#' starts a comment.
    static GasCostModel parse(std::string_view text);
    static GasCostModel load(const std::filesystem::path& path);
    [[nodiscard]] std::string to_config() const;

    // Fixed cost of the injected loop counter: declaration, check and increment.
    [[nodiscard]] Gas counter_decl_cost() const { return perStatement + memRead; }
    [[nodiscard]] Gas counter_check_cost() const { return memRead + compare; }
    [[nodiscard]] Gas counter_increment_cost() const { return perStatement + memRead + arith + memRead; }
};

}  // namespace gasgauge::gasvm
