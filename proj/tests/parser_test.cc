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

#include "doctest.h"

namespace schemarith {
namespace {

const Lexicon& Lex() { return Lexicon::Default(); }

StateRef Own(const std::string& who, const std::string& obj, Time t) {
  return {Locus::Owner(who), obj, t};
}
StateRef In(const std::string& place, const std::string& obj, Time t) {
  return {Locus::Place(place), obj, t};
}
Entity Person(const std::string& name) { return {name}; }
Entity Thing(const std::string& name) { return {name, EntityKind::kClassNoun}; }

std::vector<RawProposition> Contents(const std::string& text) {
  std::vector<RawProposition> out;
  for (auto& p : ParseProblem(text, Lex())) out.push_back(p.content);
  return out;
}

ProblemError::Code ErrorOf(const std::string& text, int* sentence = nullptr) {
  try {
    ParseProblem(text, Lex());
  } catch (const ProblemError& e) {
    if (sentence) *sentence = e.sentence();
    return e.code();
  }
  FAIL("no error for: " << text);
  return ProblemError::Code::kParseError;
}

TEST_CASE("tokenizer splits sentences and clauses") {
  auto s = Tokenize(
      "David gave 3 candies to Ruth, and John gave 2 candies to David. Now "
      "David has 4 candies more than Ruth has. How many candies does David "
      "have now, if Ruth had 7 candies in the beginning ?",
      Lex());
  REQUIRE(s.size() == 3);
  CHECK(s[0].clauses.size() == 2);
  CHECK(s[1].clauses.size() == 1);
  CHECK(s[2].interrogative);
  REQUIRE(s[2].clauses.size() == 2);
  CHECK(s[2].clauses[0].interrogative);
  CHECK_FALSE(s[2].clauses[1].interrogative);
}

TEST_CASE("'and' joining noun phrases does not split a clause") {
  auto s = Tokenize("Tom and Ruth had 8 apples altogether.", Lex());
  REQUIRE(s.size() == 1);
  CHECK(s[0].clauses.size() == 1);
}

TEST_CASE("Problem 1 parses into four propositions") {
  auto p = Contents(
      "Ruth had 3 apples. She put 2 apples into a basket. How many apples "
      "are there in the basket now, if in the beginning there were 4 apples "
      "in the basket?");
  REQUIRE(p.size() == 4);
  CHECK(std::get<StateProp>(p[0]) ==
        StateProp{Own("Ruth", "apple", Time::kInitial), Quantity::Known(3)});
  const auto& put = std::get<EventSurface>(p[1]);
  CHECK(put.verb == "put in");
  CHECK(put.agent == Person("Ruth"));
  CHECK(put.destination == Thing("basket"));
  CHECK(put.object == "apple");
  CHECK(put.amount == Quantity::Known(2));
  CHECK(std::get<StateProp>(p[2]) ==
        StateProp{In("basket", "apple", Time::kFinal), Quantity::Ask()});
  CHECK(std::get<StateProp>(p[3]) ==
        StateProp{In("basket", "apple", Time::kInitial), Quantity::Known(4)});
}

TEST_CASE("double-object dative and pronoun object") {
  auto p = Contents(
      "John had 5 apples. Mary gave him 3 apples. How many apples does John "
      "have now?");
  const auto& give = std::get<EventSurface>(p[1]);
  CHECK(give.verb == "give");
  CHECK(give.agent == Person("Mary"));
  CHECK(give.recipient == Person("John"));
  CHECK(give.amount == Quantity::Known(3));
}

TEST_CASE("compare statements, more and less") {
  auto p = Contents(
      "Sara has 6 flowers. Clara has 3 flowers more than Sara. How many "
      "flowers does Clara have ?");
  const auto& c = std::get<CompareSurface>(p[1]);
  CHECK(c.left == Own("Clara", "flower", Time::kFinal));
  CHECK(c.right == Own("Sara", "flower", Time::kFinal));
  CHECK(c.diff == Quantity::Known(3));
  CHECK(c.direction == CompareDirection::kMore);

  auto q = Contents(
      "Dan has 4 candies less than Susan has. Susan has 9 candies. How many "
      "candies does Dan have?");
  CHECK(std::get<CompareSurface>(q[0]).direction == CompareDirection::kLess);
}

TEST_CASE("compare between places in the past") {
  auto p = Contents(
      "In the beginning there were 4 eggs more in a refrigerator than there "
      "were in a box. How many eggs were there in the box in the beginning?");
  const auto& c = std::get<CompareSurface>(p[0]);
  CHECK(c.left == In("refrigerator", "egg", Time::kInitial));
  CHECK(c.right == In("box", "egg", Time::kInitial));
}

TEST_CASE("combine with named parts and with 'they'") {
  auto p = Contents(
      "Tom and Ruth had 8 apples altogether. Now Tom has 5 apples. How many "
      "apples did Ruth have in the beginning?");
  const auto& c = std::get<CombineSurface>(p[0]);
  REQUIRE(c.parts.size() == 2);
  CHECK(std::get<StateRef>(c.parts[0]) == Own("Tom", "apple", Time::kInitial));
  CHECK(std::get<StateRef>(c.parts[1]) == Own("Ruth", "apple", Time::kInitial));
  CHECK(c.total == Quantity::Known(8));

  auto q = Contents(
      "Ruth has 3 dolls. Ann has 4 dolls. How many dolls do they have "
      "altogether ?");
  const auto& t = std::get<CombineSurface>(q[2]);
  CHECK_FALSE(t.pronoun_parts);
  REQUIRE(t.parts.size() == 2);
  CHECK(std::get<StateRef>(t.parts[1]) == Own("Ann", "doll", Time::kFinal));
  CHECK(t.total.is_question());
}

TEST_CASE("subject numerals are recorded, not counted") {
  auto p = Contents(
      "5 girls bought 6 tickets. 7 boys bought 8 tickets. How many tickets "
      "did the children buy altogether?");
  const auto& e = std::get<EventSurface>(p[0]);
  REQUIRE(e.agent);
  CHECK(e.agent->name == "girl");
  CHECK(e.agent->kind == EntityKind::kClassNoun);
  CHECK(e.agent->cardinality == 5);
  CHECK(e.amount == Quantity::Known(6));
  const auto& c = std::get<CombineSurface>(p[2]);
  CHECK(c.verb_context == "buy");
  CHECK(std::get<AgentClass>(c.parts[0]).name == "child");
}

TEST_CASE("moving subjects and coordinated place states") {
  auto p = Contents(
      "Two boys left a room. 3 girls and 5 boys remained in the room. How "
      "many boys were there in the room in the beginning?");
  const auto& left = std::get<EventSurface>(p[0]);
  CHECK(left.verb == "leave");
  CHECK(left.object == "boy");
  CHECK(left.amount == Quantity::Known(2));
  CHECK(left.source == Thing("room"));
  CHECK(std::get<StateProp>(p[1]) ==
        StateProp{In("room", "girl", Time::kFinal), Quantity::Known(3)});
  CHECK(std::get<StateProp>(p[2]) ==
        StateProp{In("room", "boy", Time::kFinal), Quantity::Known(5)});
}

TEST_CASE("phrasal verb with particle and preposition") {
  auto p = Contents("3 eggs fell out of the box. How many eggs are there in "
                    "the box now?");
  const auto& e = std::get<EventSurface>(p[0]);
  CHECK(e.verb == "fall out");
  CHECK(e.source == Thing("box"));
}

TEST_CASE("'it is known that' and coordinated conditions") {
  auto p = Contents(
      "Fred had 10 candies. How many candies does Fred have now, if it is "
      "known that Susan had 7 candies in the beginning and Fred has 9 "
      "candies now?");
  REQUIRE(p.size() == 4);
  CHECK(std::get<StateProp>(p[3]) ==
        StateProp{Own("Fred", "candy", Time::kFinal), Quantity::Known(9)});
}

TEST_CASE("errors") {
  CHECK(ErrorOf("") == ProblemError::Code::kEmptyInput);
  CHECK(ErrorOf("  \n ") == ProblemError::Code::kEmptyInput);
  CHECK(ErrorOf("Ruth had 3 apples.") == ProblemError::Code::kNoQuestion);
  CHECK(ErrorOf("How many apples does Ruth have? How many apples does Tom "
                "have?") == ProblemError::Code::kMultipleQuestions);
  int sentence = -1;
  CHECK(ErrorOf("Ruth had 3 apples. Ruth had 3 zorbles. How many apples does "
                "Ruth have?",
                &sentence) == ProblemError::Code::kUnknownWord);
  CHECK(sentence == 1);
  CHECK(ErrorOf("Ruth had 3 apples. Apples apples Ruth. How many apples "
                "does Ruth have?",
                &sentence) == ProblemError::Code::kParseError);
  CHECK(sentence == 1);
}

TEST_CASE("rendered propositions parse back to themselves") {
  const std::vector<RawProposition> props = {
      StateProp{Own("Ruth", "apple", Time::kInitial), Quantity::Known(3)},
      StateProp{In("basket", "apple", Time::kFinal), Quantity::Ask()},
      StateProp{Own("Tom", "egg", Time::kFinal), Quantity::Known(1)},
      CompareSurface{Own("David", "candy", Time::kFinal),
                     Own("Ruth", "candy", Time::kFinal), Quantity::Known(4),
                     CompareDirection::kMore},
  };
  for (const auto& p : props) {
    std::string text = RenderSentence(p, Lex());
    ParseContext ctx;
    auto sentences = Tokenize(text, Lex());
    REQUIRE(sentences.size() == 1);
    REQUIRE(sentences[0].clauses.size() == 1);
    auto back = ParseClause(sentences[0].clauses[0], Lex(), ctx);
    REQUIRE(back.size() == 1);
    CHECK_MESSAGE(back[0] == p, text);
  }
}

TEST_CASE("event rendering") {
  EventSurface give{"give", Person("David"), Person("Ruth"), std::nullopt,
                    std::nullopt, "candy", Quantity::Known(3), 0};
  CHECK(RenderSentence(give, Lex()) == "David gave 3 candies to Ruth.");
  EventSurface put{"put in", Person("Ruth"), std::nullopt, std::nullopt,
                   Thing("basket"), "apple", Quantity::Known(2), 0};
  CHECK(RenderSentence(put, Lex()) == "Ruth put 2 apples into the basket.");
}

}  // namespace
}  // namespace schemarith
