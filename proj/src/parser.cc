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

#include "schemarith/parser.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "text_util.h"

namespace schemarith {

using internal::Capitalize;
using internal::Lower;
using internal::Trim;

namespace {

using Code = ProblemError::Code;

bool IsWordChar(unsigned char c) {
  return std::isalnum(c) || c == '\'' || c == '-' || c >= 0x80;
}

bool IsDeterminer(const std::string& w) {
  return w == "a" || w == "an" || w == "the";
}

// Words the grammar uses that are not lexicon entries.
const std::set<std::string>& FunctionWords() {
  static const std::set<std::string> words = {
      "a",     "an",   "the",  "and",  "to",    "into",     "in",
      "on",    "at",   "from", "out",  "of",    "than",     "more",
      "less",  "fewer", "there", "how", "many", "if",       "it",
      "that",  "now",  "then", "after", "this", "beginning", "altogether",
      "away",  "onto", "inside", "first", "all", "together", "later"};
  return words;
}

std::string ClauseText(const std::vector<Token>& toks) {
  std::vector<std::string> words;
  for (const Token& t : toks) words.push_back(t.text);
  return internal::Join(words, " ");
}

bool HasFiniteVerb(const std::vector<Token>& toks, size_t begin, size_t end,
                   const Lexicon& lex) {
  for (size_t i = begin; i < end; ++i) {
    auto form = lex.VerbFormOf(toks[i].lower);
    if (form && form->tense != Tense::kParticiple) return true;
  }
  return false;
}

// Splits on "and" where both neighbours are full clauses.
std::vector<std::vector<Token>> SplitOnAnd(const std::vector<Token>& toks,
                                           const Lexicon& lex) {
  std::vector<std::vector<Token>> out;
  size_t start = 0;
  for (size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].lower != "and") continue;
    size_t next = i + 1;
    while (next < toks.size() && toks[next].lower != "and") ++next;
    if (HasFiniteVerb(toks, start, i, lex) &&
        HasFiniteVerb(toks, i + 1, next, lex)) {
      out.emplace_back(toks.begin() + start, toks.begin() + i);
      start = i + 1;
    }
  }
  out.emplace_back(toks.begin() + start, toks.end());
  return out;
}

// Drops commas, except that "Tom, Ruth and Ann" becomes "Tom and Ruth and
// Ann" so name lists parse like pairs.
std::vector<Token> DropCommas(std::vector<Token> toks, const Lexicon& lex) {
  for (size_t i = 1; i + 1 < toks.size(); ++i) {
    if (toks[i].lower == "," && lex.IsName(toks[i - 1].lower) &&
        lex.IsName(toks[i + 1].lower))
      toks[i] = {"and", "and"};
  }
  std::erase_if(toks, [](const Token& t) { return t.lower == ","; });
  return toks;
}

bool StartsWith(const std::vector<Token>& toks,
                std::initializer_list<const char*> words) {
  if (toks.size() < words.size()) return false;
  size_t i = 0;
  for (const char* w : words)
    if (toks[i++].lower != w) return false;
  return true;
}

std::vector<Clause> SplitClauses(const std::vector<Token>& toks,
                                 bool interrogative, int sentence,
                                 const Lexicon& lex) {
  std::vector<Token> main = toks;
  std::vector<Token> sub;
  for (size_t i = 0; i + 1 < toks.size(); ++i) {
    if (toks[i].lower == "," && toks[i + 1].lower == "if") {
      main.assign(toks.begin(), toks.begin() + i);
      sub.assign(toks.begin() + i + 2, toks.end());
      break;
    }
  }
  std::vector<Clause> clauses;
  main = DropCommas(std::move(main), lex);
  if (interrogative) {
    clauses.push_back({main, true, sentence});
  } else {
    for (auto& part : SplitOnAnd(main, lex))
      clauses.push_back({std::move(part), false, sentence});
  }
  if (!sub.empty()) {
    sub = DropCommas(std::move(sub), lex);
    if (StartsWith(sub, {"it", "is", "known", "that"}))
      sub.erase(sub.begin(), sub.begin() + 4);
    for (auto& part : SplitOnAnd(sub, lex))
      clauses.push_back({std::move(part), false, sentence});
  }
  return clauses;
}

struct NounPhrase {
  Entity entity;
  std::optional<Amount> numeral;
  bool plural_pronoun = false;
};

struct VerbGroup {
  std::string lemma;
  std::string surface;
  Tense tense = Tense::kPresent;
};

// Recursive-descent parser over the tokens of one clause.
class ClauseParser {
 public:
  ClauseParser(const Clause& clause, const Lexicon& lex, ParseContext& ctx)
      : lex_(lex), ctx_(ctx), clause_(clause) {
    ExtractMarkers();
  }

  std::vector<RawProposition> Parse() {
    if (toks_.empty()) Fail("empty clause");
    if (clause_.interrogative) return {ParseQuestion()};
    if (Peek() == "there") return {ParseExistential()};
    return ParseDeclarative();
  }

 private:
  [[noreturn]] void Fail(const std::string& why) const {
    throw ProblemError(Code::kParseError,
                       "sentence " + std::to_string(clause_.sentence + 1) +
                           ": " + why + " in \"" + ClauseText(clause_.tokens) +
                           "\"",
                       clause_.sentence);
  }

  [[noreturn]] void FailAtCurrent(const std::string& expected) const {
    if (!AtEnd() && !IsKnownWord(Peek())) {
      throw ProblemError(Code::kUnknownWord,
                         "sentence " + std::to_string(clause_.sentence + 1) +
                             ": unknown word '" + toks_[pos_].text + "'",
                         clause_.sentence);
    }
    Fail("expected " + expected +
         (AtEnd() ? " at end" : " before '" + toks_[pos_].text + "'"));
  }

  bool IsKnownWord(const std::string& w) const {
    return FunctionWords().count(w) || lex_.VerbFormOf(w) ||
           lex_.NormalizeNoun(w) || lex_.IsName(w) || lex_.PronounGender(w) ||
           lex_.ParseNumber(w);
  }

  // Removes time markers, sequencing adverbs and "altogether".
  void ExtractMarkers() {
    const auto& in = clause_.tokens;
    auto matches = [&](size_t i, std::initializer_list<const char*> ws) {
      if (i + ws.size() > in.size()) return false;
      size_t k = i;
      for (const char* w : ws)
        if (in[k++].lower != w) return false;
      return true;
    };
    auto set_time = [&](Time t) {
      if (marker_ && *marker_ != t) Fail("conflicting time markers");
      marker_ = t;
    };
    for (size_t i = 0; i < in.size();) {
      if (matches(i, {"in", "the", "beginning"})) {
        set_time(Time::kInitial);
        i += 3;
      } else if (matches(i, {"at", "first"})) {
        set_time(Time::kInitial);
        i += 2;
      } else if (matches(i, {"now"})) {
        set_time(Time::kFinal);
        i += 1;
      } else if (matches(i, {"after", "this"}) ||
                 matches(i, {"after", "that"})) {
        i += 2;
      } else if (matches(i, {"then"}) || matches(i, {"later"})) {
        i += 1;
      } else if (matches(i, {"altogether"})) {
        altogether_ = true;
        i += 1;
      } else if (matches(i, {"in", "all"})) {
        altogether_ = true;
        i += 2;
      } else {
        toks_.push_back(in[i]);
        ++i;
      }
    }
  }

  bool AtEnd() const { return pos_ >= toks_.size(); }
  std::string Peek(size_t k = 0) const {
    return pos_ + k < toks_.size() ? toks_[pos_ + k].lower : std::string();
  }
  bool Accept(const std::string& w) {
    if (Peek() != w) return false;
    ++pos_;
    return true;
  }
  void Expect(const std::string& w) {
    if (!Accept(w)) FailAtCurrent("'" + w + "'");
  }
  void ExpectEnd() {
    if (!AtEnd()) Fail("unexpected '" + toks_[pos_].text + "'");
  }

  std::optional<Amount> TryNumber() {
    if (AtEnd()) return std::nullopt;
    auto n = lex_.ParseNumber(Peek());
    if (n) ++pos_;
    return n;
  }
  Amount ExpectNumber() {
    auto n = TryNumber();
    if (!n) FailAtCurrent("a number");
    return *n;
  }
  ObjectClass ExpectNoun() {
    auto noun = AtEnd() ? std::nullopt : lex_.NormalizeNoun(Peek());
    if (!noun) FailAtCurrent("a noun");
    ++pos_;
    return *noun;
  }

  std::optional<CompareDirection> TryCompareWord() {
    if (Accept("more")) return CompareDirection::kMore;
    if (Accept("less") || Accept("fewer")) return CompareDirection::kLess;
    return std::nullopt;
  }

  std::string ResolvePronoun(Gender g) const {
    for (auto it = ctx_.names.rbegin(); it != ctx_.names.rend(); ++it)
      if (lex_.NameGender(*it) == g) return *it;
    Fail("cannot resolve pronoun '" + toks_[pos_ - 1].text + "'");
  }

  std::optional<NounPhrase> TryNounPhrase() {
    size_t save = pos_;
    Accept("a") || Accept("an") || Accept("the");
    NounPhrase np;
    np.numeral = TryNumber();
    const std::string w = Peek();
    if (!np.numeral && !w.empty()) {
      if (auto g = lex_.PronounGender(w)) {
        ++pos_;
        if (*g == Gender::kPlural) {
          np.plural_pronoun = true;
          np.entity = Entity{w, EntityKind::kClassNoun, std::nullopt};
        } else {
          np.entity = Entity{ResolvePronoun(*g), EntityKind::kProperName,
                             std::nullopt};
        }
        return np;
      }
      if (lex_.IsName(w)) {
        ++pos_;
        std::string name = lex_.names().at(w);
        ctx_.names.push_back(name);
        np.entity = Entity{name, EntityKind::kProperName, std::nullopt};
        return np;
      }
    }
    if (auto noun = w.empty() ? std::nullopt : lex_.NormalizeNoun(w)) {
      ++pos_;
      np.entity = Entity{*noun, EntityKind::kClassNoun, np.numeral};
      return np;
    }
    pos_ = save;
    return std::nullopt;
  }

  NounPhrase ExpectNounPhrase() {
    auto np = TryNounPhrase();
    if (!np) {
      // Skip a determiner so the error names the offending word.
      if (IsDeterminer(Peek())) ++pos_;
      FailAtCurrent("a noun phrase");
    }
    return *np;
  }

  std::vector<NounPhrase> ParseSubjectList() {
    std::vector<NounPhrase> out{ExpectNounPhrase()};
    while (Accept("and")) out.push_back(ExpectNounPhrase());
    return out;
  }

  std::optional<VerbGroup> TryVerb() {
    if (AtEnd()) return std::nullopt;
    auto form = lex_.VerbFormOf(Peek());
    if (!form || form->tense == Tense::kParticiple) return std::nullopt;
    VerbGroup v{form->lemma, toks_[pos_].text, form->tense};
    ++pos_;
    if (v.lemma == "be" && Peek() == "born") {
      ++pos_;
      v.lemma = "be born";
    }
    return v;
  }
  VerbGroup ExpectVerb() {
    auto v = TryVerb();
    if (!v) FailAtCurrent("a verb");
    return *v;
  }

  std::string ExpectPlace() {
    if (!(Accept("in") || Accept("on") || Accept("at") || Accept("inside") ||
          Accept("into")))
      FailAtCurrent("a place phrase");
    Accept("a") || Accept("an") || Accept("the");
    return ExpectNoun();
  }

  // Clause time from verb morphology and the clause's time marker. A static
  // verb's own hint ("remained") replaces morphology. Morphology that
  // contradicts an explicit marker ("had ... now") is rejected.
  Time ResolveTime(Tense tense, TimeHint hint = TimeHint::kFromTense) const {
    Time t;
    if (hint == TimeHint::kInitial) {
      t = Time::kInitial;
    } else if (hint == TimeHint::kFinal) {
      t = Time::kFinal;
    } else {
      t = tense == Tense::kPast ? Time::kInitial : Time::kFinal;
    }
    if (marker_ && *marker_ != t)
      Fail("tense of the verb conflicts with the time marker");
    return t;
  }

  Locus OwnerOf(const NounPhrase& np) const {
    if (np.plural_pronoun) Fail("'they' is only understood in questions");
    return Locus::Owner(np.entity.name, np.entity.kind);
  }

  std::vector<RawProposition> ParseDeclarative() {
    std::vector<NounPhrase> subjects = ParseSubjectList();
    VerbGroup verb = ExpectVerb();
    if (verb.lemma == "have") return {ParsePossession(subjects, verb)};
    if (verb.lemma == "be")
      return ParseLocative(subjects, verb, TimeHint::kFromTense);
    auto cls = lex_.ClassifyVerb(verb.lemma);
    if (cls) {
      if (auto* s = std::get_if<StaticVerb>(&*cls))
        return ParseLocative(subjects, verb, s->hint);
      if (std::holds_alternative<NonChangeVerb>(*cls))
        Fail("'" + verb.surface + "' is not a change verb");
    }
    return {ParseEvent(subjects, verb)};
  }

  RawProposition ParsePossession(const std::vector<NounPhrase>& subjects,
                                 const VerbGroup& verb) {
    Amount n = ExpectNumber();
    auto dir = TryCompareWord();
    ObjectClass noun = ExpectNoun();
    if (!dir) dir = TryCompareWord();
    Time time = ResolveTime(verb.tense);
    if (dir) {
      if (subjects.size() != 1) Fail("comparison needs a single owner");
      Expect("than");
      NounPhrase rhs = ExpectNounPhrase();
      Time rtime = time;
      if (auto v = TryVerb()) {
        if (v->lemma != "have" && v->lemma != "do")
          Fail("unexpected verb '" + v->surface + "' after 'than'");
        rtime = ResolveTime(v->tense);
      }
      ExpectEnd();
      return CompareSurface{{OwnerOf(subjects[0]), noun, time},
                            {OwnerOf(rhs), noun, rtime},
                            Quantity::Known(n),
                            *dir};
    }
    ExpectEnd();
    if (subjects.size() >= 2 || altogether_) {
      if (!altogether_) Fail("conjoined owners need 'altogether'");
      CombineSurface c;
      c.object = noun;
      c.total = Quantity::Known(n);
      c.time = time;
      if (subjects.size() == 1) {
        if (subjects[0].entity.kind != EntityKind::kClassNoun ||
            lex_.SupersetMembers(subjects[0].entity.name).empty())
          Fail("'altogether' needs several owners or a group noun");
        c.parts.push_back(AgentClass{subjects[0].entity.name});
      } else {
        for (const NounPhrase& s : subjects)
          c.parts.push_back(StateRef{OwnerOf(s), noun, time});
      }
      return c;
    }
    return StateProp{{OwnerOf(subjects[0]), noun, time}, Quantity::Known(n)};
  }

  // "3 girls and 5 boys remained in the room." / "4 apples are in the box."
  std::vector<RawProposition> ParseLocative(
      const std::vector<NounPhrase>& subjects, const VerbGroup& verb,
      TimeHint hint) {
    std::string place = ExpectPlace();
    ExpectEnd();
    Time time = ResolveTime(verb.tense, hint);
    std::vector<RawProposition> out;
    for (const NounPhrase& s : subjects) {
      if (!s.numeral || s.entity.kind != EntityKind::kClassNoun)
        Fail("a located amount needs a counted noun");
      out.push_back(StateProp{{Locus::Place(place), s.entity.name, time},
                              Quantity::Known(*s.numeral)});
    }
    return out;
  }

  RawProposition ParseExistential() {
    Expect("there");
    auto be = TryVerb();
    if (!be || be->lemma != "be") FailAtCurrent("'is' or 'are'");
    Amount n = ExpectNumber();
    auto dir = TryCompareWord();
    ObjectClass noun = ExpectNoun();
    if (!dir) dir = TryCompareWord();
    Time time = ResolveTime(be->tense);
    std::string place = ExpectPlace();
    if (dir) {
      Expect("than");
      Accept("there");
      Time rtime = time;
      if (auto v = TryVerb()) {
        if (v->lemma != "be") Fail("expected 'there is/are' after 'than'");
        rtime = ResolveTime(v->tense);
      }
      std::string other = ExpectPlace();
      ExpectEnd();
      return CompareSurface{{Locus::Place(place), noun, time},
                            {Locus::Place(other), noun, rtime},
                            Quantity::Known(n),
                            *dir};
    }
    ExpectEnd();
    return StateProp{{Locus::Place(place), noun, time}, Quantity::Known(n)};
  }

  static std::string Particle(const std::string& prep) {
    if (prep == "into") return "in";
    if (prep == "out of") return "out";
    if (prep == "onto") return "on";
    return prep;
  }

  std::optional<std::string> TryPrep() {
    if (Peek() == "out" && Peek(1) == "of") {
      pos_ += 2;
      return "out of";
    }
    for (const char* p : {"to", "into", "in", "on", "onto", "at", "from"})
      if (Accept(p)) return std::string(p);
    return std::nullopt;
  }

  static bool GoalIsPlace(const VerbClassification& cls) {
    if (auto* e = std::get_if<ElementaryVerb>(&cls)) {
      return e->kind.locus_kind == LocusKind::kPlace ||
             e->kind.direction == Direction::kCreate ||
             e->kind.direction == Direction::kTerminate;
    }
    if (auto* c = std::get_if<CompoundVerb>(&cls)) {
      for (const auto& comp : c->components)
        if (comp.role == Role::kDestination) return true;
    }
    return false;
  }

  RawProposition ParseEvent(const std::vector<NounPhrase>& subjects,
                            const VerbGroup& verb) {
    if (subjects.size() != 1) Fail("a change event needs a single subject");
    const NounPhrase& subject = subjects[0];
    std::string lemma = verb.lemma;
    bool phrasal = false;
    for (const char* particle : {"out", "away", "in", "off"}) {
      if (Peek() == particle && Peek(1) != "of" &&
          lex_.ClassifyVerb(lemma + " " + particle)) {
        lemma += std::string(" ") + particle;
        ++pos_;
        phrasal = true;
        break;
      }
    }

    std::optional<NounPhrase> indirect, counted, bare;
    if (auto np = TryNounPhrase()) {
      if (np->numeral && np->entity.kind == EntityKind::kClassNoun) {
        counted = np;
      } else if (auto next = TryNounPhrase()) {
        if (!next->numeral) Fail("expected an amount after the recipient");
        indirect = np;
        counted = next;
      } else {
        bare = np;
      }
    }
    std::vector<std::pair<std::string, NounPhrase>> pps;
    while (!AtEnd()) {
      auto prep = TryPrep();
      if (!prep) FailAtCurrent("a preposition");
      pps.emplace_back(*prep, ExpectNounPhrase());
    }

    if (!phrasal) {
      for (const auto& [prep, np] : pps) {
        for (const std::string& cand :
             {lemma + " " + prep, lemma + " " + Particle(prep)}) {
          if (!phrasal && lex_.ClassifyVerb(cand)) {
            lemma = cand;
            phrasal = true;
          }
        }
      }
    }
    auto cls = lex_.ClassifyVerb(lemma);
    if (!cls) {
      throw ProblemError(Code::kUnknownWord,
                         "sentence " + std::to_string(clause_.sentence + 1) +
                             ": unknown verb '" + verb.surface + "'",
                         clause_.sentence);
    }
    if (!std::holds_alternative<ElementaryVerb>(*cls) &&
        !std::holds_alternative<CompoundVerb>(*cls))
      Fail("'" + verb.surface + "' is not a change verb");

    EventSurface ev;
    ev.verb = lemma;
    const bool goal_place = GoalIsPlace(*cls);
    auto assign = [&](std::optional<Entity>& slot, const NounPhrase& np) {
      if (np.plural_pronoun) Fail("'they' is only understood in questions");
      if (slot) Fail("participant given twice");
      slot = np.entity;
    };
    for (const auto& [prep, np] : pps) {
      if (prep == "from" || prep == "out of") {
        assign(ev.source, np);
      } else {
        assign(goal_place ? ev.destination : ev.recipient, np);
      }
    }
    if (indirect) assign(ev.recipient, *indirect);
    if (bare) {
      auto* e = std::get_if<ElementaryVerb>(&*cls);
      if (!e || e->kind.locus_kind != LocusKind::kPlace ||
          bare->entity.kind != EntityKind::kClassNoun)
        Fail("unexpected object '" + bare->entity.name + "'");
      assign(e->kind.increases() ? ev.destination : ev.source, *bare);
    }
    if (counted) {
      ev.object = counted->entity.name;
      ev.amount = Quantity::Known(*counted->numeral);
      if (subject.plural_pronoun) Fail("'they' is only understood in questions");
      ev.agent = subject.entity;
    } else if (subject.numeral &&
               subject.entity.kind == EntityKind::kClassNoun) {
      // "Two boys left a room": the subject is what is counted.
      ev.object = subject.entity.name;
      ev.amount = Quantity::Known(*subject.numeral);
    } else {
      Fail("change event has no counted object");
    }
    ev.seq = ctx_.next_seq++;
    return ev;
  }

  RawProposition ParseQuestion() {
    Expect("how");
    Expect("many");
    ObjectClass noun = ExpectNoun();
    VerbGroup v = ExpectVerb();
    if (v.lemma == "be") {
      Expect("there");
      std::string place = ExpectPlace();
      ExpectEnd();
      return StateProp{{Locus::Place(place), noun, ResolveTime(v.tense)},
                       Quantity::Ask()};
    }
    if (v.lemma != "do") Fail("unsupported question form");
    std::vector<NounPhrase> subjects = ParseSubjectList();
    VerbGroup main = ExpectVerb();
    Time time = ResolveTime(v.tense);

    if (main.lemma == "have") {
      ExpectEnd();
      CombineSurface c;
      c.object = noun;
      c.total = Quantity::Ask();
      c.time = time;
      if (subjects.size() == 1 && subjects[0].plural_pronoun) {
        c.pronoun_parts = true;
        return c;
      }
      if (subjects.size() >= 2) {
        for (const NounPhrase& s : subjects)
          c.parts.push_back(StateRef{OwnerOf(s), noun, time});
        return c;
      }
      const NounPhrase& s = subjects[0];
      if (altogether_ && s.entity.kind == EntityKind::kClassNoun &&
          !lex_.SupersetMembers(s.entity.name).empty()) {
        c.parts.push_back(AgentClass{s.entity.name});
        return c;
      }
      return StateProp{{OwnerOf(s), noun, time}, Quantity::Ask()};
    }

    std::string lemma = main.lemma;
    for (const char* particle : {"out", "away", "in", "off"}) {
      if (Peek() == particle && lex_.ClassifyVerb(lemma + " " + particle)) {
        lemma += std::string(" ") + particle;
        ++pos_;
        break;
      }
    }
    ExpectEnd();
    auto cls = lex_.ClassifyVerb(lemma);
    if (!cls) FailAtCurrent("a known verb");
    if (!altogether_) Fail("questions about a single event are not supported");
    CombineSurface c;
    c.object = noun;
    c.total = Quantity::Ask();
    c.verb_context = lemma;
    c.time = time;
    for (const NounPhrase& s : subjects) {
      if (s.plural_pronoun) Fail("'they' cannot group events");
      c.parts.push_back(AgentClass{s.entity.name});
    }
    return c;
  }

  const Lexicon& lex_;
  ParseContext& ctx_;
  const Clause& clause_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::optional<Time> marker_;
  bool altogether_ = false;
};

}  // namespace

std::vector<Sentence> Tokenize(std::string_view text, const Lexicon& lexicon) {
  if (Trim(text).empty())
    throw ProblemError(Code::kEmptyInput, "empty problem text");

  std::vector<std::pair<std::vector<Token>, char>> raw;
  std::vector<Token> current;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) current.push_back({word, Lower(word)});
    word.clear();
  };
  for (char ch : text) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (IsWordChar(c)) {
      word += ch;
      continue;
    }
    flush();
    if (ch == ',') {
      current.push_back({",", ","});
    } else if (ch == '.' || ch == '?' || ch == '!') {
      if (!current.empty()) raw.emplace_back(std::move(current), ch);
      current.clear();
    }
  }
  flush();
  if (!current.empty()) raw.emplace_back(std::move(current), '.');
  if (raw.empty()) throw ProblemError(Code::kEmptyInput, "no sentences");

  std::vector<Sentence> out;
  for (size_t i = 0; i < raw.size(); ++i) {
    auto& [toks, term] = raw[i];
    Sentence s;
    s.index = static_cast<int>(i);
    s.interrogative = term == '?' || StartsWith(toks, {"how", "many"});
    s.clauses = SplitClauses(toks, s.interrogative, s.index, lexicon);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<RawProposition> ParseClause(const Clause& clause,
                                        const Lexicon& lexicon,
                                        ParseContext& context) {
  return ClauseParser(clause, lexicon, context).Parse();
}

bool HasQuestion(const RawProposition& prop) {
  if (auto* s = std::get_if<StateProp>(&prop))
    return s->quantity.is_question();
  if (auto* e = std::get_if<EventSurface>(&prop))
    return e->amount.is_question();
  if (auto* c = std::get_if<CompareSurface>(&prop))
    return c->diff.is_question();
  return std::get<CombineSurface>(prop).total.is_question();
}

std::vector<Proposition> ParseProblem(std::string_view text,
                                      const Lexicon& lexicon) {
  std::vector<Proposition> out;
  ParseContext ctx;
  for (const Sentence& s : Tokenize(text, lexicon)) {
    for (const Clause& c : s.clauses) {
      for (RawProposition& p : ParseClause(c, lexicon, ctx))
        out.push_back({std::move(p), s.index});
    }
  }

  // "they" names every proper-name owner with a state of the asked class.
  for (Proposition& p : out) {
    auto* c = std::get_if<CombineSurface>(&p.content);
    if (!c || !c->pronoun_parts) continue;
    std::vector<std::string> owners;
    for (const Proposition& q : out) {
      auto* s = std::get_if<StateProp>(&q.content);
      if (!s || s->ref.object != c->object ||
          s->ref.locus.kind != LocusKind::kOwnership ||
          s->ref.locus.entity_kind != EntityKind::kProperName)
        continue;
      if (std::find(owners.begin(), owners.end(), s->ref.locus.name) ==
          owners.end())
        owners.push_back(s->ref.locus.name);
    }
    if (owners.size() < 2) {
      throw ProblemError(Code::kUnresolvableCombine,
                         "cannot tell who 'they' are", p.sentence);
    }
    for (const std::string& o : owners)
      c->parts.push_back(StateRef{Locus::Owner(o), c->object, c->time});
    c->pronoun_parts = false;
  }

  int questions = 0;
  for (const Proposition& p : out) questions += HasQuestion(p.content);
  if (questions == 0)
    throw ProblemError(Code::kNoQuestion, "the problem asks no question");
  if (questions > 1)
    throw ProblemError(Code::kMultipleQuestions,
                       "the problem asks " + std::to_string(questions) +
                           " questions");
  return out;
}

namespace {

std::string AmountText(const Quantity& q) {
  if (q.is_known()) return std::to_string(q.known());
  return "?";
}

std::string CountedNoun(const Quantity& q, const ObjectClass& noun,
                        const Lexicon& lex) {
  return AmountText(q) + " " +
         (q.is_known() ? lex.SurfaceOf(noun, q.known()) : lex.PluralOf(noun));
}

std::string EntityPhrase(const Entity& e, const Lexicon& lex) {
  if (e.kind == EntityKind::kProperName) return e.name;
  if (e.cardinality)
    return std::to_string(*e.cardinality) + " " +
           lex.SurfaceOf(e.name, *e.cardinality);
  return "the " + lex.PluralOf(e.name);
}

std::string OwnerPhrase(const Locus& l, const Lexicon& lex) {
  if (l.entity_kind == EntityKind::kProperName) return l.name;
  return "the " + lex.PluralOf(l.name);
}

std::string PlacePhrase(const std::string& place) { return "the " + place; }

std::string Have(Time t) { return t == Time::kInitial ? "had" : "has"; }
std::string Do(Time t) { return t == Time::kInitial ? "did" : "does"; }
std::string Be(Time t, bool singular) {
  if (t == Time::kInitial) return singular ? "was" : "were";
  return singular ? "is" : "are";
}
std::string Dir(CompareDirection d) {
  return d == CompareDirection::kMore ? "more" : "less";
}

std::string RenderState(const StateProp& s, const Lexicon& lex) {
  const StateRef& r = s.ref;
  bool singular = s.quantity.is_known() && s.quantity.known() == 1;
  if (s.quantity.is_question()) {
    if (r.locus.kind == LocusKind::kPlace)
      return "How many " + lex.PluralOf(r.object) + " " + Be(r.time, false) +
             " there in " + PlacePhrase(r.locus.name) + "?";
    return "How many " + lex.PluralOf(r.object) + " " + Do(r.time) + " " +
           OwnerPhrase(r.locus, lex) + " have?";
  }
  if (r.locus.kind == LocusKind::kPlace)
    return "There " + Be(r.time, singular) + " " +
           CountedNoun(s.quantity, r.object, lex) + " in " +
           PlacePhrase(r.locus.name) + ".";
  return Capitalize(OwnerPhrase(r.locus, lex)) + " " + Have(r.time) + " " +
         CountedNoun(s.quantity, r.object, lex) + ".";
}

std::string RenderEvent(const EventSurface& e, const Lexicon& lex) {
  std::string base = e.verb;
  std::string particle;
  if (auto sp = e.verb.find(' '); sp != std::string::npos) {
    base = e.verb.substr(0, sp);
    particle = e.verb.substr(sp + 1);
  }
  std::string verb = base == "be" ? "were" : lex.PastOf(base);
  if (base == "be") verb += " " + particle;

  std::string source_prep = "from";
  std::string dest_prep = "into";
  bool particle_used = base == "be";
  if (!particle_used && (particle == "out" || particle == "from") &&
      e.source) {
    source_prep = particle == "out" ? "out of" : "from";
    particle_used = true;
  } else if (!particle_used && (particle == "in" || particle == "into") &&
             e.destination) {
    dest_prep = "into";
    particle_used = true;
  }
  auto cls = lex.ClassifyVerb(e.verb);
  if (cls) {
    if (auto* el = std::get_if<ElementaryVerb>(&*cls)) {
      if (el->kind.direction == Direction::kCreate ||
          el->kind.direction == Direction::kTerminate)
        dest_prep = "in";
    }
  }

  // Source and destination name places unless the verb moves ownership.
  bool place_roles = true;
  if (cls) {
    if (auto* c = std::get_if<CompoundVerb>(&*cls)) {
      for (const CompoundComponent& comp : c->components)
        if ((comp.role == Role::kSource || comp.role == Role::kDestination) &&
            comp.kind.locus_kind == LocusKind::kOwnership)
          place_roles = false;
    }
  }
  auto where = [&](const Entity& ent) {
    return place_roles && ent.kind == EntityKind::kClassNoun && !ent.cardinality
               ? PlacePhrase(ent.name)
               : EntityPhrase(ent, lex);
  };

  std::string out;
  if (e.agent) {
    out = Capitalize(EntityPhrase(*e.agent, lex)) + " " + verb;
    if (!particle_used && !particle.empty()) out += " " + particle;
    out += " " + CountedNoun(e.amount, e.object, lex);
  } else {
    out = CountedNoun(e.amount, e.object, lex) + " " + verb;
    if (!particle_used && !particle.empty()) out += " " + particle;
  }
  if (e.source) out += " " + source_prep + " " + where(*e.source);
  if (e.destination) out += " " + dest_prep + " " + where(*e.destination);
  if (e.recipient) out += " to " + EntityPhrase(*e.recipient, lex);
  return out + ".";
}

std::string RenderCompare(const CompareSurface& c, const Lexicon& lex) {
  if (c.left.locus.kind == LocusKind::kPlace) {
    return "There " + Be(c.left.time, false) + " " +
           CountedNoun(c.diff, c.left.object, lex) + " " + Dir(c.direction) +
           " in " + PlacePhrase(c.left.locus.name) + " than there " +
           Be(c.right.time, false) + " in " +
           PlacePhrase(c.right.locus.name) + ".";
  }
  return Capitalize(OwnerPhrase(c.left.locus, lex)) + " " +
         Have(c.left.time) + " " + CountedNoun(c.diff, c.left.object, lex) +
         " " + Dir(c.direction) + " than " + OwnerPhrase(c.right.locus, lex) +
         " " + Have(c.right.time) + ".";
}

std::string RenderCombine(const CombineSurface& c, const Lexicon& lex) {
  std::vector<std::string> parts;
  for (const CombinePart& p : c.parts) {
    if (auto* s = std::get_if<StateRef>(&p)) {
      parts.push_back(OwnerPhrase(s->locus, lex));
    } else {
      parts.push_back("the " + lex.PluralOf(std::get<AgentClass>(p).name));
    }
  }
  std::string subject =
      c.pronoun_parts ? std::string("they") : internal::Join(parts, " and ");
  std::string plural = lex.PluralOf(c.object);
  if (c.total.is_question()) {
    std::string aux = c.time == Time::kInitial ? "did" : "do";
    std::string verb = c.verb_context;
    return "How many " + plural + " " + aux + " " + subject + " " + verb +
           " altogether?";
  }
  return Capitalize(subject) + " " +
         (c.time == Time::kInitial ? "had" : "have") + " " +
         CountedNoun(c.total, c.object, lex) + " altogether.";
}

}  // namespace

std::string RenderSentence(const RawProposition& prop, const Lexicon& lex) {
  struct Visitor {
    const Lexicon& lex;
    std::string operator()(const StateProp& s) { return RenderState(s, lex); }
    std::string operator()(const EventSurface& e) {
      return RenderEvent(e, lex);
    }
    std::string operator()(const CompareSurface& c) {
      return RenderCompare(c, lex);
    }
    std::string operator()(const CombineSurface& c) {
      return RenderCombine(c, lex);
    }
  };
  return std::visit(Visitor{lex}, prop);
}

}  // namespace schemarith
