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

// Core value types shared by every stage of the pipeline: amounts, loci,
// state keys and change kinds.

#ifndef SCHEMARITH_TYPES_H_
#define SCHEMARITH_TYPES_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace schemarith {

using Amount = int64_t;
using ObjectClass = std::string;

// Index of an unknown in a PropositionStore. Display names ("X", "Y", ...)
// are assigned by the store.
struct VarId {
  int index = -1;
  auto operator<=>(const VarId&) const = default;
};

// The three-valued amount slot: a stated count, an unknown introduced while
// understanding the problem, or the quantity the question asks for.
class Quantity {
 public:
  struct Question {
    auto operator<=>(const Question&) const = default;
  };

  Quantity() : value_(Question{}) {}
  static Quantity Known(Amount n) { return Quantity(n); }
  static Quantity Var(VarId v) { return Quantity(v); }
  static Quantity Ask() { return Quantity(Question{}); }

  bool is_known() const { return std::holds_alternative<Amount>(value_); }
  bool is_var() const { return std::holds_alternative<VarId>(value_); }
  bool is_question() const { return std::holds_alternative<Question>(value_); }
  // Var or Question: something the solver has to determine.
  bool is_unknown() const { return !is_known(); }

  Amount known() const { return std::get<Amount>(value_); }
  VarId var() const { return std::get<VarId>(value_); }

  auto operator<=>(const Quantity&) const = default;

 private:
  explicit Quantity(std::variant<Amount, VarId, Question> v) : value_(v) {}
  std::variant<Amount, VarId, Question> value_;
};

enum class Time { kInitial, kFinal };

enum class EntityKind { kProperName, kClassNoun };

// A participant. `cardinality` records subject numerals such as "5 girls";
// it is metadata and never enters an equation.
struct Entity {
  std::string name;
  EntityKind kind = EntityKind::kProperName;
  std::optional<Amount> cardinality;

  bool operator==(const Entity&) const = default;
};

enum class LocusKind { kOwnership, kPlace };

// Where a quantity resides: with an owner, or in a place.
struct Locus {
  LocusKind kind = LocusKind::kOwnership;
  std::string name;
  EntityKind entity_kind = EntityKind::kProperName;

  static Locus Owner(std::string name,
                     EntityKind k = EntityKind::kProperName) {
    return Locus{LocusKind::kOwnership, std::move(name), k};
  }
  static Locus Place(std::string name) {
    return Locus{LocusKind::kPlace, std::move(name), EntityKind::kClassNoun};
  }

  auto operator<=>(const Locus&) const = default;
};

// Key of a state proposition: the amount of `object` at `locus` at `time`.
struct StateRef {
  Locus locus;
  ObjectClass object;
  Time time = Time::kInitial;

  auto operator<=>(const StateRef&) const = default;
};

enum class Direction { kIn, kOut, kCreate, kTerminate };

// One of the eight elementary change situations.
struct ChangeKind {
  Direction direction = Direction::kIn;
  LocusKind locus_kind = LocusKind::kOwnership;

  // Gains (In, Create) add the delta to the locus; losses subtract it.
  bool increases() const {
    return direction == Direction::kIn || direction == Direction::kCreate;
  }

  auto operator<=>(const ChangeKind&) const = default;
};

// Errors raised by the understanding pipeline. Exit codes of the CLI are a
// function of `code`.
class ProblemError : public std::runtime_error {
 public:
  enum class Code {
    kEmptyInput,
    kParseError,
    kUnknownWord,
    kUnknownVerb,
    kNoQuestion,
    kMultipleQuestions,
    kDataConflict,
    kUnresolvableCombine,
    kMalformedLsi,
    kLexiconFormat,
  };

  ProblemError(Code code, std::string message, int sentence = -1)
      : std::runtime_error(std::move(message)),
        code_(code),
        sentence_(sentence) {}

  Code code() const { return code_; }
  // Zero-based sentence index, or -1 when the error is not tied to one.
  int sentence() const { return sentence_; }

 private:
  Code code_;
  int sentence_;
};

const char* CodeName(ProblemError::Code code);

std::string ToString(Time t);
std::string ToString(Direction d);
std::string ToString(LocusKind k);
std::string ToString(const ChangeKind& k);
std::string ToString(const Locus& l);

}  // namespace schemarith

#endif  // SCHEMARITH_TYPES_H_
