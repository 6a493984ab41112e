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

// Schema instantiation. Compare and combine statements are instantiated
// directly; each elementary change event is matched against the one change
// formula for its kind, and the formula's other two lines are looked up among
// the problem's states. Which change instantiations enter the list depends on
// the strategy: the cautious strategy records a chain of changes only when
// the problem states both of its end amounts.

#ifndef SCHEMARITH_SCHEMA_ENGINE_H_
#define SCHEMARITH_SCHEMA_ENGINE_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "schemarith/discourse.h"
#include "schemarith/lexicon.h"
#include "schemarith/parser.h"

namespace schemarith {

// c = a + b. Subtractive relations are stored in this added form.
struct Equation {
  Quantity a;
  Quantity b;
  Quantity c;
  bool operator==(const Equation&) const = default;
};

enum class SchemaKind { kChange, kMore, kLess, kCombine };

struct SchemaInstantiation {
  SchemaKind kind = SchemaKind::kChange;
  ChangeKind change;  // meaningful for kChange only
  // (initially, delta, finally) | (left, than, by) | (part, part, total)
  std::array<Quantity, 3> quantities;
  Equation equation;
  std::string origin;  // what produced it, for reports
};

using Lsi = std::vector<SchemaInstantiation>;

enum class Strategy { kCautious, kTotal };

// Three-line change formula. Lines 1 and 3 describe the initial and final
// amounts; line 2 is the change itself, in canonical passive form.
struct ChangeFormula {
  ChangeKind kind;
  std::array<std::string, 3> lines;
  std::array<char, 3> slots;  // X Y Z for place formulas, R S T for owners
};

// The eight formulas, one per change kind.
const std::array<ChangeFormula, 8>& ChangeFormulas();
const ChangeFormula& FormulaFor(const ChangeKind& kind);

// An event with the amounts before and after it, when known.
struct Segment {
  ElementaryEvent event;
  std::optional<Quantity> before;
  std::optional<Quantity> after;
};

struct FormulaInstantiation {
  const ChangeFormula* formula = nullptr;
  Locus locus;
  ObjectClass object;
  std::optional<Quantity> initial;
  Quantity delta;  // always bound, from the event
  std::optional<Quantity> final;

  bool line1_matched() const { return initial.has_value(); }
  bool line3_matched() const { return final.has_value(); }
  bool promotable() const { return line1_matched() && line3_matched(); }
};

// The segment for a single event read against the problem's own initial and
// final states of its locus, with no chaining.
Segment SegmentAgainstStore(const ElementaryEvent& event,
                            const PropositionStore& store);

FormulaInstantiation MatchChangeFormula(const Segment& segment);

// Formula lines with the bound values substituted, e.g.
// "Ruth had 7 candies." / "3 candies were transferred to Ruth." /
// "Ruth has X candies."
std::array<std::string, 3> FormulaLines(const FormulaInstantiation& fi,
                                        const PropositionStore& store,
                                        const Lexicon& lexicon);

// Requires fi.promotable().
SchemaInstantiation Promote(const FormulaInstantiation& fi);

SchemaInstantiation InstantiateCompare(const CompareSurface& compare,
                                       PropositionStore& store);

// Throws kUnresolvableCombine when fewer than two parts are found. More than
// two parts are chained through partial sums.
std::vector<SchemaInstantiation> InstantiateCombine(
    const CombineSurface& combine, PropositionStore& store,
    const Lexicon& lexicon);

// All compare and combine instantiations, in text order.
Lsi BuildInitialLsi(PropositionStore& store, const Lexicon& lexicon);

// Appends change instantiations for the timelines allowed by `strategy`. The
// total strategy introduces fresh unknowns for missing end amounts.
Lsi BuildLsi(PropositionStore& store, const std::vector<Timeline>& timelines,
             Strategy strategy, Lsi initial);

Equation EquationFor(SchemaKind kind, const ChangeKind& change,
                     const std::array<Quantity, 3>& q);

// "Transfer-In-Place (initially 4, in 2, finally ?)", "More (?, than X, by 4)".
std::string Render(const SchemaInstantiation& si,
                   const PropositionStore& store);
// "? = 4 + 2".
std::string Render(const Equation& eq, const PropositionStore& store);
// Render with Vars replaced by labels and the addends sorted, so that two
// problems differing only in Var numbering give the same string.
std::string CanonicalForm(const Equation& eq, const PropositionStore& store);

std::string ToString(Strategy s);
std::string ToString(SchemaKind k);

}  // namespace schemarith

#endif  // SCHEMARITH_SCHEMA_ENGINE_H_
