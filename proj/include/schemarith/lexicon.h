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

// Word tables: change-verb semantics, static verbs, inflections, number
// words, nouns, supersets, names and pronouns. A Lexicon is immutable after
// loading and can be shared freely between threads.
//
// File format: one record per line, `kind<TAB>key<TAB>payload`. Blank lines
// and lines starting with '#' are ignored. See docs/lexicon-format.md.

#ifndef SCHEMARITH_LEXICON_H_
#define SCHEMARITH_LEXICON_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "schemarith/types.h"

namespace schemarith {

// Who in the sentence a component of a compound verb happens to.
enum class Role { kAgent, kRecipient, kSource, kDestination };

struct CompoundComponent {
  ChangeKind kind;
  Role role = Role::kAgent;
  bool operator==(const CompoundComponent&) const = default;
};

struct ElementaryVerb {
  ChangeKind kind;
  bool operator==(const ElementaryVerb&) const = default;
};

struct CompoundVerb {
  std::vector<CompoundComponent> components;
  bool operator==(const CompoundVerb&) const = default;
};

enum class TimeHint { kInitial, kFinal, kFromTense };

struct StaticVerb {
  TimeHint hint = TimeHint::kFromTense;
  bool operator==(const StaticVerb&) const = default;
};

struct NonChangeVerb {
  bool operator==(const NonChangeVerb&) const = default;
};

using VerbClassification =
    std::variant<ElementaryVerb, CompoundVerb, StaticVerb, NonChangeVerb>;

enum class Tense { kPast, kPresent, kParticiple };

struct VerbForm {
  std::string lemma;
  Tense tense = Tense::kPresent;
};

enum class Gender { kFemale, kMale, kPlural };

class Lexicon {
 public:
  // Parses lexicon text. Throws ProblemError(kLexiconFormat) naming the
  // offending line.
  static Lexicon Parse(std::string_view text);
  static Lexicon FromFile(const std::string& path);
  // The lexicon compiled into the library.
  static const Lexicon& Default();

  // nullopt means the lemma is absent from every table. A lemma listed more
  // than once classifies by its first record.
  std::optional<VerbClassification> ClassifyVerb(std::string_view lemma) const;
  // Every record for the lemma, in file order. "send" is both a change of
  // ownership and a change of place.
  std::vector<VerbClassification> Readings(std::string_view lemma) const;
  // Surface form ("gave", "gives", "give") to lemma and tense.
  std::optional<VerbForm> VerbFormOf(std::string_view surface) const;
  // Past-tense surface of a single-word lemma ("give" -> "gave").
  std::string PastOf(std::string_view lemma) const;

  std::optional<ObjectClass> NormalizeNoun(std::string_view surface) const;
  std::string PluralOf(const ObjectClass& noun) const;
  std::string SurfaceOf(const ObjectClass& noun, Amount count) const;

  std::optional<Amount> ParseNumber(std::string_view word) const;

  // Member classes of a superset noun, or empty when `noun` is not one.
  std::set<ObjectClass> SupersetMembers(std::string_view noun) const;

  std::optional<Gender> NameGender(std::string_view name) const;
  bool IsName(std::string_view name) const {
    return NameGender(name).has_value();
  }
  std::optional<Gender> PronounGender(std::string_view word) const;

  const std::map<std::string, VerbClassification>& verbs() const {
    return verbs_;
  }
  const std::map<std::string, std::string>& names() const { return names_; }
  const std::map<ObjectClass, std::string>& nouns() const { return plurals_; }

 private:
  std::map<std::string, VerbClassification> verbs_;
  std::map<std::string, std::vector<VerbClassification>> readings_;
  std::map<std::string, VerbForm> forms_;
  std::map<std::string, std::string> past_;
  std::map<std::string, ObjectClass> noun_forms_;
  std::map<ObjectClass, std::string> plurals_;
  std::map<std::string, Amount> numbers_;
  std::map<ObjectClass, std::set<ObjectClass>> supersets_;
  // Proper names keep their capitalized spelling; lookup is by lower case.
  std::map<std::string, std::string> names_;
  std::map<std::string, Gender> name_genders_;
  std::map<std::string, Gender> pronouns_;
};

std::string ToString(Role r);
std::string ToString(const VerbClassification& v);

// Text of the lexicon compiled into the library.
std::string_view DefaultLexiconText();

}  // namespace schemarith

#endif  // SCHEMARITH_LEXICON_H_
