// Copyright 2026 The Schemarith Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference for the solver: every assignment of 0..bound to the
// unknowns of a schema list, checked against constraints read directly off
// each instantiation's quantities. Shares no code with the solver or with
// EquationFor.

#ifndef SCHEMARITH_TESTS_SUPPORT_ORACLE_H_
#define SCHEMARITH_TESTS_SUPPORT_ORACLE_H_

#include <cstdint>
#include <map>
#include <set>

#include "schemarith/schema_engine.h"

namespace schemarith::testing {

struct OracleResult {
  int64_t solutions = 0;  // stops counting at the cap
  std::set<Amount> question_values;
  std::map<Quantity, Amount> first;  // first satisfying assignment found
};

OracleResult Enumerate(const Lsi& lsi, Amount bound = 50,
                       int64_t cap = 1'000'000);

// Does the instantiation hold under `value`? All its unknowns must be bound.
bool Holds(const SchemaInstantiation& si,
           const std::map<Quantity, Amount>& value);

}  // namespace schemarith::testing

#endif  // SCHEMARITH_TESTS_SUPPORT_ORACLE_H_
