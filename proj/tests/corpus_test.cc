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

#include "schemarith/corpus.h"

#include <filesystem>
#include <fstream>

#include "doctest.h"

namespace schemarith {
namespace {

namespace fs = std::filesystem;

const Lexicon& Lex() { return Lexicon::Default(); }

fs::path FreshDir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("schemarith_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void Write(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

TEST_CASE("the bundled corpus covers both problems, Table 1 and Table 5") {
  auto corpus = DefaultCorpus();
  CHECK(corpus.size() >= 10);
  std::set<std::string> ids;
  for (const auto& e : corpus) {
    ids.insert(e.id);
    CHECK_FALSE(e.text.empty());
    CHECK_FALSE(e.provenance.empty());
    CHECK(e.expected_answer.has_value() == (e.expected_status == "Solved"));
  }
  for (const char* id : {"p1_basket", "p2_candies", "t1_change_in", "t5_1",
                         "t5_6"})
    CHECK(ids.count(id));
}

TEST_CASE("every bundled problem matches under both strategies") {
  auto corpus = DefaultCorpus();
  CorpusRun cautious = RunCorpus(corpus, Lex(), Strategy::kCautious);
  CHECK(cautious.all_match());
  CorpusRun total = RunCorpus(corpus, Lex(), Strategy::kTotal);
  CHECK(total.all_match());
  for (const auto& row : total.rows) {
    REQUIRE(row.cautious_lsi_size.has_value());
    if (row.entry.id == "p2_candies") {
      CHECK(*row.cautious_lsi_size == 2);
      CHECK(row.result.analysis->lsi.size() == 5);
    }
  }
  std::string table = CorpusTable(total);
  CHECK(table.find("5 (2, +3)") != std::string::npos);
  CHECK(table.find("12/12 match") != std::string::npos);
}

TEST_CASE("the source corpus directory matches the embedded copy") {
  auto loaded = LoadCorpus(SCHEMARITH_SOURCE_DIR "/corpus");
  auto embedded = DefaultCorpus();
  REQUIRE(loaded.size() == embedded.size());
  for (size_t i = 0; i < loaded.size(); ++i) {
    CHECK(loaded[i].id == embedded[i].id);
    CHECK(loaded[i].text == embedded[i].text);
    CHECK(loaded[i].expected_answer == embedded[i].expected_answer);
  }
}

TEST_CASE("a perturbed golden answer is reported") {
  fs::path dir = FreshDir("perturbed");
  Write(dir / "a.txt", "Ruth had 3 apples. Ruth got 2 apples. How many "
                       "apples does Ruth have now?");
  Write(dir / "expected.tsv", "a\tSolved\t6\tperturbed\n");
  CorpusRun run = RunCorpus(LoadCorpus(dir), Lex(), Strategy::kCautious);
  CHECK_FALSE(run.all_match());
  CHECK(CorpusTable(run).find("MISMATCH") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("malformed corpus directories are rejected") {
  fs::path dir = FreshDir("malformed");
  Write(dir / "expected.tsv", "missing\tSolved\t6\tx\n");
  CHECK_THROWS_AS(LoadCorpus(dir), std::runtime_error);
  Write(dir / "expected.tsv", "only-two\tSolved\n");
  CHECK_THROWS_AS(LoadCorpus(dir), std::runtime_error);
  Write(dir / "a.txt", "x");
  Write(dir / "expected.tsv", "a\tSolved\tsix\tx\n");
  CHECK_THROWS_AS(LoadCorpus(dir), std::runtime_error);
  fs::remove_all(dir);
  CHECK_THROWS(LoadCorpus(dir));
}

TEST_CASE("an empty run does not count as matching") {
  CHECK_FALSE(RunCorpus({}, Lex(), Strategy::kCautious).all_match());
}

}  // namespace
}  // namespace schemarith
