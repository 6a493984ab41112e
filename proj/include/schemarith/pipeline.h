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

// End-to-end run of one problem: parse, split, instantiate, propagate.

#ifndef SCHEMARITH_PIPELINE_H_
#define SCHEMARITH_PIPELINE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schemarith/discourse.h"
#include "schemarith/lexicon.h"
#include "schemarith/parser.h"
#include "schemarith/schema_engine.h"
#include "schemarith/solver.h"

namespace schemarith {

struct Analysis {
  std::vector<Proposition> propositions;
  PropositionStore store;
  // Number of states in the store right after parsing, before any unknowns
  // were introduced.
  size_t states_after_parse = 0;
  // The store right after compare and combine statements were instantiated,
  // before change events were examined: states and the LSI prefix holding
  // those instantiations.
  size_t states_after_initial_lsi = 0;
  size_t initial_lsi_size = 0;
  std::vector<Timeline> timelines;
  Lsi lsi;
  Verdict verdict;
};

struct SolveResult {
  std::string id;
  Strategy strategy = Strategy::kCautious;
  std::optional<Analysis> analysis;  // absent when an error was raised
  std::optional<ProblemError> error;
  double millis = 0;
};

// Never throws ProblemError; errors are returned in the result.
SolveResult Solve(std::string_view text, const Lexicon& lexicon,
                  Strategy strategy, std::string id = "");

// Throwing variant for callers that want the analysis directly.
Analysis Analyze(std::string_view text, const Lexicon& lexicon,
                 Strategy strategy);

// 0 solved, 2 input the tool cannot read (parse errors, no or several
// questions, unresolvable combination), 3 insufficient data, 4 contradictory
// or negative data.
int ExitCodeFor(const SolveResult& result);

// "Solved", "Insufficient", "Contradiction", "Invalid", or the error code
// name ("DataConflict", "ParseError", ...).
std::string StatusOf(const SolveResult& result);

// Splits a file holding several problems separated by blank lines.
std::vector<std::string> SplitProblems(std::string_view text);

}  // namespace schemarith

#endif  // SCHEMARITH_PIPELINE_H_
