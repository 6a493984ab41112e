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

// Controlled-English parser. Turns problem text into raw propositions:
// states, change events, comparisons and combinations. The accepted
// sentence shapes are listed in GRAMMAR.md.

#ifndef SCHEMARITH_PARSER_H_
#define SCHEMARITH_PARSER_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "schemarith/lexicon.h"
#include "schemarith/types.h"

namespace schemarith {

struct Token {
  std::string text;   // as written
  std::string lower;  // lower-cased, used for matching
};

struct Clause {
  std::vector<Token> tokens;
  bool interrogative = false;
  int sentence = 0;
};

struct Sentence {
  int index = 0;
  bool interrogative = false;
  std::vector<Clause> clauses;
};

// "Ruth had 3 apples." / "There are ? apples in the basket."
struct StateProp {
  StateRef ref;
  Quantity quantity;
  bool operator==(const StateProp&) const = default;
};

// A change verb with its participants, before compound splitting.
struct EventSurface {
  std::string verb;  // lemma, e.g. "give", "put in"
  std::optional<Entity> agent;
  std::optional<Entity> recipient;
  std::optional<Entity> source;
  std::optional<Entity> destination;
  ObjectClass object;
  Quantity amount;
  int seq = 0;  // textual order among events
  bool operator==(const EventSurface&) const = default;
};

enum class CompareDirection { kMore, kLess };

// "David has 4 candies more than Ruth has."
struct CompareSurface {
  StateRef left;
  StateRef right;
  Quantity diff;
  CompareDirection direction = CompareDirection::kMore;
  bool operator==(const CompareSurface&) const = default;
};

// A class of agents ("children") whose events or states are to be summed.
struct AgentClass {
  std::string name;
  bool operator==(const AgentClass&) const = default;
};

using CombinePart = std::variant<StateRef, AgentClass>;

// "Tom and Ruth had 8 apples altogether." / "How many tickets did the
// children buy altogether?"
struct CombineSurface {
  std::vector<CombinePart> parts;
  ObjectClass object;
  Quantity total;
  std::string verb_context = "have";  // "have" or an event verb lemma
  Time time = Time::kFinal;
  // Set for "they"; parse_problem replaces it with the resolved owners.
  bool pronoun_parts = false;
  bool operator==(const CombineSurface&) const = default;
};

using RawProposition =
    std::variant<StateProp, EventSurface, CompareSurface, CombineSurface>;

// A raw proposition with the sentence it came from.
struct Proposition {
  RawProposition content;
  int sentence = 0;
};

// Running state across clauses of one problem: names mentioned so far (for
// "she"/"he") and the event counter.
struct ParseContext {
  std::vector<std::string> names;
  int next_seq = 0;
};

// Splits text into sentences and clauses. Throws kEmptyInput.
std::vector<Sentence> Tokenize(std::string_view text, const Lexicon& lexicon);

// Parses one clause. Throws kParseError or kUnknownWord.
std::vector<RawProposition> ParseClause(const Clause& clause,
                                        const Lexicon& lexicon,
                                        ParseContext& context);

// Parses a whole problem. Exactly one Question must result; otherwise throws
// kNoQuestion or kMultipleQuestions.
std::vector<Proposition> ParseProblem(std::string_view text,
                                      const Lexicon& lexicon);

// Canonical English for a proposition, accepted back by ParseClause.
std::string RenderSentence(const RawProposition& prop, const Lexicon& lexicon);

bool HasQuestion(const RawProposition& prop);

}  // namespace schemarith

#endif  // SCHEMARITH_PARSER_H_
