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

// Human-readable and JSON reports. The JSON layout is documented in
// docs/report-schema.md.

#ifndef SCHEMARITH_REPORT_H_
#define SCHEMARITH_REPORT_H_

#include <string>
#include <string_view>
#include <vector>

#include "schemarith/lexicon.h"
#include "schemarith/pipeline.h"

namespace schemarith {

inline constexpr int kReportFormatVersion = 1;

struct ReportInput {
  SolveResult result;
  std::string text;  // the problem as given
};

// Sentences of `text` with their terminators, in the order the parser
// numbers them.
std::vector<std::string> SentenceTexts(std::string_view text);

struct NumberedLine {
  std::string number;  // "1a", "3"
  std::string text;
};

// The store after parsing and compare/combine instantiation: change events as
// written, then states, including unknowns the comparisons introduced.
std::vector<std::string> ParsedPropositions(const Analysis& analysis,
                                            const Lexicon& lexicon);

// The propositions after compound verbs are split: "1a) David forfeited 3
// candies", "1b) Ruth got 3 candies", then comparisons and combinations,
// then states.
std::vector<NumberedLine> AfterSplitting(const Analysis& analysis,
                                         const Lexicon& lexicon);

std::string TextReport(const ReportInput& in, const Lexicon& lexicon,
                       bool trace);

// A whole JSON document for one or more problems. Contains no timings, so
// the output is byte-identical across runs.
std::string JsonReport(const std::vector<ReportInput>& inputs,
                       const Lexicon& lexicon);

}  // namespace schemarith

#endif  // SCHEMARITH_REPORT_H_
