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

#include "gasgauge/source.hpp"

namespace gasgauge::frontend {

// Produces the canonical copy of a MiniSol file that every later phase works on:
// comments removed, single-statement `for`/`while`/`if`/`else` bodies wrapped in
// braces, one statement per line, four-space indentation and fixed token spacing.
// Works on whole files and on bare statement fragments. Idempotent.
SourceFile normalize_source(const SourceFile& src);

}  // namespace gasgauge::frontend
