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

// Command-line front end.
//
//   schemarith solve FILE [--trace] [--strategy cautious|total]
//                         [--format text|json]
//   schemarith corpus [--strategy cautious|total] [--corpus-dir DIR]
//
// FILE may hold several problems separated by blank lines; "-" reads stdin.
// The lexicon comes from --lexicon, else $SCHEMARITH_LEXICON, else the
// built-in one.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "schemarith/corpus.h"
#include "schemarith/lexicon.h"
#include "schemarith/pipeline.h"
#include "schemarith/report.h"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitCorpusMismatch = 5;

const std::map<std::string, schemarith::Strategy> kStrategies = {
    {"cautious", schemarith::Strategy::kCautious},
    {"total", schemarith::Strategy::kTotal}};

bool ReadInput(const std::string& path, std::string* out) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    ss << in.rdbuf();
  }
  *out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solve arithmetic word problems with change, compare and "
               "combine schemas"};
  app.require_subcommand(1);
  std::string lexicon_path;
  app.add_option("--lexicon", lexicon_path,
                 "Lexicon file (default: $SCHEMARITH_LEXICON or built-in)");

  schemarith::Strategy strategy = schemarith::Strategy::kCautious;
  std::string input;
  bool trace = false;
  std::string format = "text";
  auto* solve = app.add_subcommand("solve", "Solve the problems in a file");
  solve->add_option("file", input, "Problem file, or - for stdin")->required();
  solve->add_flag("--trace", trace, "Show each propagation step");
  solve->add_option("--strategy", strategy, "Schema instantiation strategy")
      ->transform(CLI::CheckedTransformer(kStrategies, CLI::ignore_case));
  solve->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string corpus_dir;
  auto* corpus = app.add_subcommand("corpus", "Run the problem corpus");
  corpus->add_option("--strategy", strategy, "Schema instantiation strategy")
      ->transform(CLI::CheckedTransformer(kStrategies, CLI::ignore_case));
  corpus->add_option("--corpus-dir", corpus_dir,
                     "Directory with *.txt and expected.tsv "
                     "(default: built-in corpus)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitIo;
  }

  if (lexicon_path.empty()) {
    if (const char* env = std::getenv("SCHEMARITH_LEXICON")) lexicon_path = env;
  }
  std::optional<schemarith::Lexicon> custom;
  try {
    if (!lexicon_path.empty())
      custom = schemarith::Lexicon::FromFile(lexicon_path);
  } catch (const std::exception& e) {
    std::cerr << "schemarith: " << e.what() << "\n";
    return kExitIo;
  }
  const schemarith::Lexicon& lexicon =
      custom ? *custom : schemarith::Lexicon::Default();

  if (*solve) {
    std::string text;
    if (!ReadInput(input, &text)) {
      std::cerr << "schemarith: cannot read " << input << "\n";
      return kExitIo;
    }
    std::vector<std::string> problems = schemarith::SplitProblems(text);
    if (problems.empty()) problems.push_back("");
    std::vector<schemarith::ReportInput> reports;
    int exit_code = 0;
    for (size_t i = 0; i < problems.size(); ++i) {
      std::string id = input == "-" ? "stdin" : input;
      if (problems.size() > 1) id += "#" + std::to_string(i + 1);
      schemarith::ReportInput r{
          schemarith::Solve(problems[i], lexicon, strategy, id), problems[i]};
      exit_code = std::max(exit_code, schemarith::ExitCodeFor(r.result));
      reports.push_back(std::move(r));
    }
    if (format == "json") {
      std::cout << schemarith::JsonReport(reports, lexicon);
    } else {
      for (size_t i = 0; i < reports.size(); ++i) {
        if (i) std::cout << "\n";
        std::cout << schemarith::TextReport(reports[i], lexicon, trace);
      }
    }
    return exit_code;
  }

  std::vector<schemarith::CorpusEntry> entries;
  try {
    entries = corpus_dir.empty() ? schemarith::DefaultCorpus()
                                 : schemarith::LoadCorpus(corpus_dir);
  } catch (const std::exception& e) {
    std::cerr << "schemarith: " << e.what() << "\n";
    return kExitIo;
  }
  schemarith::CorpusRun run = schemarith::RunCorpus(entries, lexicon, strategy);
  std::cout << schemarith::CorpusTable(run);
  return run.all_match() ? 0 : kExitCorpusMismatch;
}
