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

#include <map>
#include <string>
#include <vector>

#include "gasgauge/frontend/ast.hpp"
#include "gasgauge/loopscan/loops.hpp"

namespace gasgauge::depgraph {

enum class VarClass { State, Local, Fixed, Input };

std::string_view to_string(VarClass c);

struct Root {
    std::string name;  // identifier, or the literal's spelling for Fixed roots
    VarClass cls{VarClass::Fixed};
    std::string type;  // declared type name

    friend bool operator==(const Root&, const Root&) = default;
};

struct BoundVar {
    std::string name;
    VarClass cls{VarClass::Fixed};
    std::string type;
    std::vector<Root> roots;  // Local only; never contains Local entries
    bool unrooted{false};     // Local whose slice reaches no State/Input/Fixed root
    bool unboundedIterable{false};  // mapping used in the bound
};

struct BoundVarSet {
    int loopId{-1};
    std::vector<BoundVar> vars;  // order of first occurrence in the bound
    std::map<std::string, std::vector<Root>> localRoots;
    // State roots written by other functions: "users <- addUsers(address)".
    std::vector<std::string> crossFunctionWriters;
    std::vector<std::string> notes;

    [[nodiscard]] const BoundVar* find(std::string_view name) const;
    [[nodiscard]] bool has_input_root() const;
    // Every State/Input/Fixed root, direct or inducted, deduplicated.
    [[nodiscard]] std::vector<Root> all_roots() const;
};

BoundVarSet classify_bound_variables(const loopscan::LoopInfo& loop, const frontend::FunctionDecl& fn,
                                     const frontend::ContractAst& ast);

struct Induction {
    std::vector<Root> roots;
    bool unrooted{false};
};

// Backward slice over the initializer and every assignment of a local variable.
Induction induct_local(int localIndex, const frontend::FunctionDecl& fn, const frontend::ContractAst& ast);
Induction induct_local(std::string_view localName, const frontend::FunctionDecl& fn,
                       const frontend::ContractAst& ast);

struct FuzzTarget {
    std::string functionSignature;
    int functionIndex{-1};
    std::vector<int> influencingParams;  // parameter indices, in parameter order
    std::vector<int> loopIds;

    [[nodiscard]] std::vector<std::pair<std::string, std::string>> influencing_inputs(
        const frontend::ContractAst& ast) const;  // (name, type)
};

std::vector<FuzzTarget> select_fuzz_targets(const frontend::ContractAst& ast,
                                            const std::vector<BoundVarSet>& classifications);

// Classifies every loop of a detection report, ordered by loop id.
std::vector<BoundVarSet> classify_all(const frontend::ContractAst& ast, const loopscan::DetectionReport& det);

}  // namespace gasgauge::depgraph
