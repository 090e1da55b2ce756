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

#include "gasgauge/frontend/ast.hpp"

namespace gasgauge::frontend {

// Resolves identifiers, assigns local slots and type-checks every function body.
// Throws Error{Semantic} for ill-typed code and Error{Unsupported} for constructs
// outside MiniSol (local arrays, overloading, loops whose body always returns, ...).
void check(ContractAst& ast);

// normalize_source + parse + check: the form every analysis phase consumes.
struct LoadedContract {
    SourceFile original;
    SourceFile normalized;
    ContractAst ast;
};

LoadedContract load_contract(const SourceFile& src);

// Parse + check without normalizing (spans refer to `src` itself).
ContractAst parse_checked(const SourceFile& src);

}  // namespace gasgauge::frontend
