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

#include "schemarith/schema_engine.h"

#include <set>

#include "doctest.h"

namespace schemarith {
namespace {

const Lexicon& Lex() { return Lexicon::Default(); }

const char kProblem1[] =
    "Ruth had 3 apples. She put 2 apples into a basket. How many apples are "
    "there in the basket now, if in the beginning there were 4 apples in the "
    "basket?";
const char kProblem2[] =
    "David gave 3 candies to Ruth, and John gave 2 candies to David. Now "
    "David has 4 candies more than Ruth has. How many candies does David "
    "have now, if Ruth had 7 candies in the beginning ?";

PropositionStore StoreFor(const std::string& text) {
  return PropositionStore::Build(ParseProblem(text, Lex()), Lex());
}

Lsi LsiFor(const std::string& text, Strategy strategy,
           PropositionStore* out_store = nullptr) {
  PropositionStore store = StoreFor(text);
  Lsi initial = BuildInitialLsi(store, Lex());
  auto timelines = BuildTimelines(store);
  Lsi lsi = BuildLsi(store, timelines, strategy, initial);
  if (out_store) *out_store = store;
  return lsi;
}

std::vector<std::string> Rendered(const Lsi& lsi,
                                  const PropositionStore& store) {
  std::vector<std::string> out;
  for (const auto& si : lsi) out.push_back(Render(si, store));
  return out;
}

TEST_CASE("one change formula per change kind") {
  std::set<ChangeKind> kinds;
  for (const ChangeFormula& f : ChangeFormulas()) kinds.insert(f.kind);
  CHECK(kinds.size() == 8);
  const ChangeFormula& in_place =
      FormulaFor({Direction::kIn, LocusKind::kPlace});
  CHECK(in_place.lines[0] == "There were X objects in the place.");
  CHECK(in_place.lines[1] == "Y objects were transferred into the place.");
  CHECK(in_place.lines[2] == "There are Z objects in the place now.");
  const ChangeFormula& out_own =
      FormulaFor({Direction::kOut, LocusKind::kOwnership});
  CHECK(out_own.lines[1] == "The owner forfeited S objects.");
  CHECK(out_own.slots == std::array<char, 3>{'R', 'S', 'T'});
}

TEST_CASE("Problem 1: the put event matches the basket, not Ruth") {
  PropositionStore store = StoreFor(kProblem1);
  REQUIRE(store.events().size() == 1);
  const ElementaryEvent& put = store.events()[0];
  FormulaInstantiation fi =
      MatchChangeFormula(SegmentAgainstStore(put, store));
  CHECK(fi.line1_matched());
  CHECK(fi.line3_matched());
  CHECK(*fi.initial == Quantity::Known(4));
  CHECK(fi.final->is_question());
  auto lines = FormulaLines(fi, store, Lex());
  CHECK(lines[0] == "There were 4 apples in the basket.");
  CHECK(lines[1] == "2 apples were transferred into the basket.");
  CHECK(lines[2] == "There are ? apples in the basket now.");
  SchemaInstantiation si = Promote(fi);
  CHECK(Render(si, store) ==
        "Transfer-In-Place (initially 4, in 2, finally ?)");
  CHECK(Render(si.equation, store) == "? = 4 + 2");
}

TEST_CASE("Problem 2: David's loss finds only the final amount") {
  PropositionStore store = StoreFor(kProblem2);
  const ElementaryEvent& forfeit = store.events()[0];
  REQUIRE(forfeit.locus == Locus::Owner("David"));
  FormulaInstantiation fi =
      MatchChangeFormula(SegmentAgainstStore(forfeit, store));
  CHECK_FALSE(fi.line1_matched());
  CHECK(fi.line3_matched());
  CHECK_FALSE(fi.promotable());
  auto lines = FormulaLines(fi, store, Lex());
  CHECK(lines[0] == "David had R candies.");
  CHECK(lines[1] == "3 candies were transferred from David.");
  CHECK(lines[2] == "David has ? candies now.");
}

TEST_CASE("equations in added form") {
  Quantity a = Quantity::Known(1), b = Quantity::Known(2),
           c = Quantity::Known(3);
  ChangeKind gain{Direction::kIn, LocusKind::kOwnership};
  ChangeKind loss{Direction::kTerminate, LocusKind::kPlace};
  CHECK(EquationFor(SchemaKind::kChange, gain, {a, b, c}) == Equation{a, b, c});
  CHECK(EquationFor(SchemaKind::kChange, loss, {a, b, c}) == Equation{c, b, a});
  CHECK(EquationFor(SchemaKind::kMore, {}, {a, b, c}) == Equation{b, c, a});
  CHECK(EquationFor(SchemaKind::kLess, {}, {a, b, c}) == Equation{a, c, b});
  CHECK(EquationFor(SchemaKind::kCombine, {}, {a, b, c}) == Equation{a, b, c});
}

TEST_CASE("a comparison introduces the unknown it needs") {
  PropositionStore store = StoreFor(kProblem2);
  Lsi initial = BuildInitialLsi(store, Lex());
  REQUIRE(initial.size() == 1);
  CHECK(Render(initial[0], store) == "More (?, than X, by 4)");
  CHECK(Render(initial[0].equation, store) == "? = X + 4");
  CHECK(store.states().size() == 3);
  CHECK(store.states().back().introduced);
}

TEST_CASE("cautious and total strategies on Problem 2") {
  PropositionStore cs, ts;
  Lsi cautious = LsiFor(kProblem2, Strategy::kCautious, &cs);
  Lsi total = LsiFor(kProblem2, Strategy::kTotal, &ts);
  CHECK(Rendered(cautious, cs) ==
        std::vector<std::string>{
            "More (?, than X, by 4)",
            "Transfer-In-Ownership (initially 7, in 3, finally X)"});
  CHECK(total.size() == 5);
  std::multiset<std::string> total_eqs;
  for (const auto& si : total) total_eqs.insert(CanonicalForm(si.equation, ts));
  for (const auto& si : cautious)
    CHECK(total_eqs.count(CanonicalForm(si.equation, cs)) == 1);
}

TEST_CASE("chained changes share intermediate unknowns") {
  PropositionStore store;
  Lsi lsi = LsiFor(
      "Dan had 5 nuts. Dan gave 2 nuts to David. Ruth gave Dan 3 nuts. Now "
      "Dan has 6 nuts. How many nuts does David have?",
      Strategy::kCautious, &store);
  REQUIRE(lsi.size() == 2);
  CHECK(Render(lsi[0], store) ==
        "Transfer-In-Ownership (initially 5, in 3, finally X)");
  CHECK(Render(lsi[1], store) ==
        "Transfer-Out-Ownership (initially X, out 2, finally 6)");
  CHECK(Render(lsi[1].equation, store) == "X = 6 + 2");
}

TEST_CASE("combinations") {
  SUBCASE("named owners") {
    PropositionStore store;
    Lsi lsi = LsiFor("Ruth has 3 dolls. Ann has 4 dolls. How many dolls do "
                     "they have altogether ?",
                     Strategy::kCautious, &store);
    REQUIRE(lsi.size() == 1);
    CHECK(Render(lsi[0], store) == "Combine (3, 4, altogether ?)");
  }
  SUBCASE("a superset combines its members' gains") {
    PropositionStore store;
    Lsi lsi = LsiFor("5 girls bought 6 tickets. 7 boys bought 8 tickets. How "
                     "many tickets did the children buy altogether?",
                     Strategy::kCautious, &store);
    REQUIRE(lsi.size() == 1);
    CHECK(Render(lsi[0], store) == "Combine (6, 8, altogether ?)");
  }
  SUBCASE("three parts are chained through a partial sum") {
    PropositionStore store;
    Lsi lsi = LsiFor("Tom, Ruth and Ann had 9 apples altogether. Tom had 2 "
                     "apples. Ruth had 3 apples. How many apples did Ann "
                     "have?",
                     Strategy::kCautious, &store);
    REQUIRE(lsi.size() == 2);
    CHECK(Render(lsi[0], store) == "Combine (2, 3, altogether X)");
    CHECK(Render(lsi[1], store) == "Combine (X, ?, altogether 9)");
  }
  SUBCASE("a single part cannot be combined") {
    PropositionStore store = StoreFor(
        "5 girls bought 6 tickets. How many tickets did the children buy "
        "altogether?");
    try {
      BuildInitialLsi(store, Lex());
      FAIL("expected an error");
    } catch (const ProblemError& e) {
      CHECK(e.code() == ProblemError::Code::kUnresolvableCombine);
    }
  }
}

TEST_CASE("canonical form ignores variable numbering and addend order") {
  PropositionStore store;
  VarId x = store.NewVar("Own(Ruth)/candy/final");
  VarId y = store.NewVar("Own(Dan)/candy/final");
  Equation e1{Quantity::Var(x), Quantity::Known(4), Quantity::Var(y)};
  Equation e2{Quantity::Known(4), Quantity::Var(x), Quantity::Var(y)};
  CHECK(CanonicalForm(e1, store) == CanonicalForm(e2, store));
  CHECK(CanonicalForm(e1, store) ==
        "{Own(Dan)/candy/final} = 4 + {Own(Ruth)/candy/final}");
}

}  // namespace
}  // namespace schemarith
