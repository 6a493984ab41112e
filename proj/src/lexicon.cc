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

#include "schemarith/lexicon.h"

#include <fstream>
#include <sstream>

#include "text_util.h"

namespace schemarith {

using internal::Lower;
using internal::Split;
using internal::Trim;

namespace {

[[noreturn]] void Fail(int line, const std::string& why) {
  throw ProblemError(ProblemError::Code::kLexiconFormat,
                     "lexicon line " + std::to_string(line) + ": " + why);
}

Direction ParseDirection(const std::string& s, int line) {
  if (s == "in") return Direction::kIn;
  if (s == "out") return Direction::kOut;
  if (s == "create") return Direction::kCreate;
  if (s == "terminate") return Direction::kTerminate;
  Fail(line, "bad direction '" + s + "'");
}

LocusKind ParseLocusKind(const std::string& s, int line) {
  if (s == "ownership") return LocusKind::kOwnership;
  if (s == "place") return LocusKind::kPlace;
  Fail(line, "bad locus kind '" + s + "'");
}

Role ParseRole(const std::string& s, int line) {
  if (s == "agent") return Role::kAgent;
  if (s == "recipient") return Role::kRecipient;
  if (s == "source") return Role::kSource;
  if (s == "destination") return Role::kDestination;
  Fail(line, "bad role '" + s + "'");
}

VerbClassification ParseVerbPayload(const std::string& payload, int line) {
  std::vector<std::string> head = Split(payload, ':');
  if (head[0] == "elementary") {
    if (head.size() != 3) Fail(line, "elementary needs direction:locus");
    return ElementaryVerb{
        {ParseDirection(head[1], line), ParseLocusKind(head[2], line)}};
  }
  if (head[0] == "compound") {
    std::string rest = payload.substr(std::string("compound:").size());
    CompoundVerb verb;
    for (const std::string& part : Split(rest, ',')) {
      std::vector<std::string> at = Split(part, '@');
      if (at.size() != 2) Fail(line, "compound component needs @role");
      std::vector<std::string> kind = Split(at[0], ':');
      if (kind.size() != 2) Fail(line, "compound component needs dir:locus");
      verb.components.push_back(
          {{ParseDirection(kind[0], line), ParseLocusKind(kind[1], line)},
           ParseRole(at[1], line)});
    }
    if (verb.components.size() < 2)
      Fail(line, "compound verb needs at least two components");
    return verb;
  }
  if (head[0] == "static") {
    if (head.size() != 2) Fail(line, "static needs a time hint");
    if (head[1] == "initial") return StaticVerb{TimeHint::kInitial};
    if (head[1] == "final") return StaticVerb{TimeHint::kFinal};
    if (head[1] == "tense") return StaticVerb{TimeHint::kFromTense};
    Fail(line, "bad time hint '" + head[1] + "'");
  }
  if (head[0] == "nonchange") return NonChangeVerb{};
  Fail(line, "unknown verb class '" + head[0] + "'");
}

Gender ParseGender(const std::string& s, int line) {
  if (s == "female") return Gender::kFemale;
  if (s == "male") return Gender::kMale;
  if (s == "plural") return Gender::kPlural;
  Fail(line, "bad gender '" + s + "'");
}

}  // namespace

Lexicon Lexicon::Parse(std::string_view text) {
  Lexicon lex;
  int line_no = 0;
  for (const std::string& raw : Split(text, '\n')) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> f = Split(line, '\t');
    if (f.size() != 3) Fail(line_no, "expected 3 tab-separated fields");
    const std::string& kind = f[0];
    std::string key(Trim(f[1]));
    std::string payload(Trim(f[2]));
    if (key.empty()) Fail(line_no, "empty key");

    if (kind == "verb") {
      VerbClassification cls = ParseVerbPayload(payload, line_no);
      lex.verbs_.emplace(Lower(key), cls);
      lex.readings_[Lower(key)].push_back(cls);
    } else if (kind == "form") {
      std::vector<std::string> lt = Split(payload, ':');
      if (lt.size() != 2) Fail(line_no, "form payload is lemma:tense");
      Tense tense;
      if (lt[1] == "past") {
        tense = Tense::kPast;
        lex.past_.emplace(lt[0], Lower(key));
      } else if (lt[1] == "present") {
        tense = Tense::kPresent;
      } else if (lt[1] == "participle") {
        tense = Tense::kParticiple;
      } else {
        Fail(line_no, "bad tense '" + lt[1] + "'");
      }
      lex.forms_[Lower(key)] = VerbForm{lt[0], tense};
    } else if (kind == "noun") {
      std::string singular = Lower(key);
      std::string plural = Lower(payload);
      lex.noun_forms_[singular] = singular;
      lex.noun_forms_[plural] = singular;
      lex.plurals_[singular] = plural;
    } else if (kind == "number") {
      if (!internal::IsDigits(payload)) Fail(line_no, "number needs digits");
      lex.numbers_[Lower(key)] = std::stoll(payload);
    } else if (kind == "superset") {
      std::set<ObjectClass> members;
      for (const std::string& m : Split(payload, ','))
        members.insert(Lower(Trim(m)));
      lex.supersets_[Lower(key)] = std::move(members);
    } else if (kind == "name") {
      lex.names_[Lower(key)] = key;
      lex.name_genders_[Lower(key)] = ParseGender(payload, line_no);
    } else if (kind == "pronoun") {
      lex.pronouns_[Lower(key)] = ParseGender(payload, line_no);
    } else {
      Fail(line_no, "unknown record kind '" + kind + "'");
    }
  }
  return lex;
}

Lexicon Lexicon::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str());
}

const Lexicon& Lexicon::Default() {
  static const Lexicon* lex = new Lexicon(Parse(DefaultLexiconText()));
  return *lex;
}

std::optional<VerbClassification> Lexicon::ClassifyVerb(
    std::string_view lemma) const {
  auto it = verbs_.find(Lower(lemma));
  if (it == verbs_.end()) return std::nullopt;
  return it->second;
}

std::vector<VerbClassification> Lexicon::Readings(
    std::string_view lemma) const {
  auto it = readings_.find(Lower(lemma));
  if (it == readings_.end()) return {};
  return it->second;
}

std::optional<VerbForm> Lexicon::VerbFormOf(std::string_view surface) const {
  auto it = forms_.find(Lower(surface));
  if (it == forms_.end()) return std::nullopt;
  return it->second;
}

std::string Lexicon::PastOf(std::string_view lemma) const {
  auto it = past_.find(std::string(lemma));
  return it == past_.end() ? std::string(lemma) : it->second;
}

std::optional<ObjectClass> Lexicon::NormalizeNoun(
    std::string_view surface) const {
  auto it = noun_forms_.find(Lower(surface));
  if (it == noun_forms_.end()) return std::nullopt;
  return it->second;
}

std::string Lexicon::PluralOf(const ObjectClass& noun) const {
  auto it = plurals_.find(noun);
  return it == plurals_.end() ? noun + "s" : it->second;
}

std::string Lexicon::SurfaceOf(const ObjectClass& noun, Amount count) const {
  return count == 1 ? noun : PluralOf(noun);
}

std::optional<Amount> Lexicon::ParseNumber(std::string_view word) const {
  if (internal::IsDigits(word) && word.size() < 16)
    return std::stoll(std::string(word));
  auto it = numbers_.find(Lower(word));
  if (it == numbers_.end()) return std::nullopt;
  return it->second;
}

std::set<ObjectClass> Lexicon::SupersetMembers(std::string_view noun) const {
  std::string key = Lower(noun);
  if (auto canon = NormalizeNoun(key)) key = *canon;
  auto it = supersets_.find(key);
  return it == supersets_.end() ? std::set<ObjectClass>{} : it->second;
}

std::optional<Gender> Lexicon::NameGender(std::string_view name) const {
  auto it = name_genders_.find(Lower(name));
  if (it == name_genders_.end()) return std::nullopt;
  return it->second;
}

std::optional<Gender> Lexicon::PronounGender(std::string_view word) const {
  auto it = pronouns_.find(Lower(word));
  if (it == pronouns_.end()) return std::nullopt;
  return it->second;
}

std::string ToString(Role r) {
  switch (r) {
    case Role::kAgent: return "agent";
    case Role::kRecipient: return "recipient";
    case Role::kSource: return "source";
    case Role::kDestination: return "destination";
  }
  return "?";
}

std::string ToString(const VerbClassification& v) {
  struct Visitor {
    std::string operator()(const ElementaryVerb& e) const {
      return "Elementary(" + ToString(e.kind) + ")";
    }
    std::string operator()(const CompoundVerb& c) const {
      std::string out = "Compound[";
      for (size_t i = 0; i < c.components.size(); ++i) {
        if (i) out += ", ";
        out += ToString(c.components[i].kind) + " on " +
               ToString(c.components[i].role);
      }
      return out + "]";
    }
    std::string operator()(const StaticVerb& s) const {
      switch (s.hint) {
        case TimeHint::kInitial: return "StaticState(Initial)";
        case TimeHint::kFinal: return "StaticState(Final)";
        case TimeHint::kFromTense: return "StaticState(FromTense)";
      }
      return "StaticState";
    }
    std::string operator()(const NonChangeVerb&) const { return "NonChange"; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace schemarith
