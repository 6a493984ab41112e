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

// The bundled problem corpus and its expected outcomes.
//
// A corpus directory holds one <id>.txt per problem and an expected.tsv with
// lines "id<TAB>status<TAB>answer<TAB>provenance"; answer is "-" when the
// status is not Solved. Lines starting with '#' are comments.

#ifndef SCHEMARITH_CORPUS_H_
#define SCHEMARITH_CORPUS_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schemarith/lexicon.h"
#include "schemarith/pipeline.h"

namespace schemarith {

struct CorpusEntry {
  std::string id;
  std::string text;
  std::string expected_status;
  std::optional<Amount> expected_answer;
  std::string provenance;
};

// The corpus compiled into the library.
std::vector<CorpusEntry> DefaultCorpus();

// Throws std::runtime_error for unreadable files, malformed expected.tsv
// lines, and ids without a problem file.
std::vector<CorpusEntry> LoadCorpus(const std::filesystem::path& dir);

struct CorpusRow {
  CorpusEntry entry;
  SolveResult result;
  // LSI size under the cautious strategy; filled when running total.
  std::optional<size_t> cautious_lsi_size;
  bool matches = false;
};

struct CorpusRun {
  Strategy strategy = Strategy::kCautious;
  std::vector<CorpusRow> rows;
  double millis = 0;
  bool all_match() const;
};

CorpusRun RunCorpus(const std::vector<CorpusEntry>& entries,
                    const Lexicon& lexicon, Strategy strategy);

// One line per problem plus a summary line.
std::string CorpusTable(const CorpusRun& run);

}  // namespace schemarith

#endif  // SCHEMARITH_CORPUS_H_
