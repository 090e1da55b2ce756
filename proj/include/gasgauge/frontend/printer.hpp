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

#include "gasgauge/frontend/ast.hpp"

namespace gasgauge::frontend {

// Re-emits source text for an AST. The output always reparses to a structurally
// identical tree.
std::string print_contract(const ContractAst& ast);
std::string print_expr(const Expr& e);
std::string print_stmt(const Stmt& s, int indent = 0);

// Span-free structural dump; two trees are structurally equal iff their dumps are.
std::string dump_tree(const ContractAst& ast);

}  // namespace gasgauge::frontend
