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

// Parses one MiniSol contract. Identifiers are left unresolved; run `check` (sema.hpp)
// before analysis or execution. Throws Error{Syntax} or Error{Unsupported}.
ContractAst parse(const SourceFile& src);

}  // namespace gasgauge::frontend
