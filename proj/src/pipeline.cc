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

#include "schemarith/pipeline.h"

#include <chrono>

#include "text_util.h"

namespace schemarith {

using Code = ProblemError::Code;
using internal::Trim;

Analysis Analyze(std::string_view text, const Lexicon& lexicon,
                 Strategy strategy) {
  Analysis a;
  a.propositions = ParseProblem(text, lexicon);
  a.store = PropositionStore::Build(a.propositions, lexicon);
  a.states_after_parse = a.store.states().size();
  // Compare and combine statements first: the states they introduce count as
  // present when the cautious strategy looks at a chain's end amounts.
  Lsi initial = BuildInitialLsi(a.store, lexicon);
  a.states_after_initial_lsi = a.store.states().size();
  a.initial_lsi_size = initial.size();
  a.timelines = BuildTimelines(a.store);
  a.lsi = BuildLsi(a.store, a.timelines, strategy, std::move(initial));
  a.verdict = Propagate(a.lsi, a.store);
  return a;
}

SolveResult Solve(std::string_view text, const Lexicon& lexicon,
                  Strategy strategy, std::string id) {
  SolveResult r;
  r.id = std::move(id);
  r.strategy = strategy;
  auto start = std::chrono::steady_clock::now();
  try {
    r.analysis = Analyze(text, lexicon, strategy);
  } catch (const ProblemError& e) {
    r.error = e;
  }
  r.millis = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - start)
                 .count();
  return r;
}

int ExitCodeFor(const SolveResult& result) {
  if (result.error) {
    switch (result.error->code()) {
      case Code::kDataConflict:
        return 4;
      default:
        return 2;
    }
  }
  switch (result.analysis->verdict.kind) {
    case Verdict::Kind::kSolved: return 0;
    case Verdict::Kind::kInsufficient: return 3;
    case Verdict::Kind::kContradiction:
    case Verdict::Kind::kInvalid: return 4;
  }
  return 2;
}

std::string StatusOf(const SolveResult& result) {
  if (result.error) return CodeName(result.error->code());
  return ToString(result.analysis->verdict.kind);
}

std::vector<std::string> SplitProblems(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    if (!Trim(current).empty()) out.push_back(std::string(Trim(current)));
    current.clear();
  };
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (Trim(std::string(line)).empty()) {
      flush();
    } else {
      current += std::string(line) + "\n";
    }
    pos = end + 1;
  }
  flush();
  return out;
}

}  // namespace schemarith
