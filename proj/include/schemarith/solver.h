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

// Fixpoint propagation over the a + b = c equations of a schema list.
//
// An equation with exactly one undetermined slot determines it. Propagation
// runs until nothing changes; then every fully determined equation is checked.
// The verdict depends only on the set of equations, not on their order:
// the set of slots that get determined is the least fixpoint, and a failed
// check exists iff the determined part of the system has no integer solution.

#ifndef SCHEMARITH_SOLVER_H_
#define SCHEMARITH_SOLVER_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schemarith/discourse.h"
#include "schemarith/schema_engine.h"

namespace schemarith {

class Binding {
 public:
  std::optional<Amount> Get(const Quantity& q) const;
  // Binds a Var or the Question. Rebinding is a logic error.
  void Set(const Quantity& q, Amount value);
  bool Bound(const Quantity& q) const { return Get(q).has_value(); }

  const std::map<VarId, Amount>& vars() const { return vars_; }
  std::optional<Amount> question() const { return question_; }

 private:
  std::map<VarId, Amount> vars_;
  std::optional<Amount> question_;
};

struct TraceStep {
  size_t equation = 0;  // index into the LSI
  Equation eq;
  // Unknowns of the equation that were already determined, with values.
  std::vector<std::pair<Quantity, Amount>> knowns;
  Quantity resolved;
  Amount value = 0;
};

struct Verdict {
  enum class Kind { kSolved, kInsufficient, kContradiction, kInvalid };

  Kind kind = Kind::kInsufficient;
  std::optional<Amount> answer;
  std::vector<TraceStep> trace;
  Binding binding;
  // Insufficient: unknowns left open.
  std::vector<Quantity> unresolved;
  // Insufficient only: the question is fixed by the equations as a linear
  // system, but not reachable one unknown at a time.
  bool determined_by_elimination = false;
  // Contradiction: the equation whose check failed, with its slot values.
  // Invalid: the equation that produced the negative amount.
  std::optional<size_t> equation;
  std::array<Amount, 3> values{};
  std::optional<Quantity> negative;
};

// Throws kMalformedLsi when an equation does not match its schema, a stated
// amount is negative, or the store does not hold exactly one question.
Verdict Propagate(const Lsi& lsi, const PropositionStore& store);

// True iff every equation holds under `binding`. Every unknown must be bound;
// an unbound slot makes the result false.
bool Verify(const Lsi& lsi, const Binding& binding);

// "? = X + 4 with X = 10 ⇒ ? = 14".
std::string RenderStep(const TraceStep& step, const PropositionStore& store);

std::string ToString(Verdict::Kind k);

}  // namespace schemarith

#endif  // SCHEMARITH_SOLVER_H_
