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

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "embedded_data.h"
#include "text_util.h"

namespace schemarith {

using internal::Split;
using internal::Trim;

namespace {

std::vector<CorpusEntry> ParseExpected(
    std::string_view tsv, const std::map<std::string, std::string>& texts,
    const std::string& where) {
  std::vector<CorpusEntry> out;
  int line_no = 0;
  for (const std::string& raw : Split(tsv, '\n')) {
    ++line_no;
    std::string line(Trim(raw));
    if (line.empty() || line[0] == '#') continue;
    auto fields = Split(line, '\t');
    if (fields.size() < 3) {
      throw std::runtime_error(where + ":" + std::to_string(line_no) +
                               ": expected id, status and answer");
    }
    CorpusEntry e;
    e.id = fields[0];
    e.expected_status = fields[1];
    if (fields[2] != "-") {
      if (!internal::IsDigits(fields[2]))
        throw std::runtime_error(where + ":" + std::to_string(line_no) +
                                 ": bad answer '" + fields[2] + "'");
      e.expected_answer = std::stoll(fields[2]);
    }
    if (fields.size() > 3) e.provenance = fields[3];
    auto it = texts.find(e.id);
    if (it == texts.end())
      throw std::runtime_error(where + ": no problem file for '" + e.id + "'");
    e.text = it->second;
    out.push_back(std::move(e));
  }
  return out;
}

std::string ReadFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<CorpusEntry> DefaultCorpus() {
  std::map<std::string, std::string> texts;
  for (const auto& f : internal::EmbeddedProblems())
    texts[std::string(f.id)] = std::string(f.text);
  return ParseExpected(internal::EmbeddedExpected(), texts,
                       "embedded expected.tsv");
}

std::vector<CorpusEntry> LoadCorpus(const std::filesystem::path& dir) {
  std::map<std::string, std::string> texts;
  for (const auto& de : std::filesystem::directory_iterator(dir)) {
    if (de.path().extension() == ".txt")
      texts[de.path().stem().string()] = ReadFile(de.path());
  }
  auto expected = dir / "expected.tsv";
  return ParseExpected(ReadFile(expected), texts, expected.string());
}

bool CorpusRun::all_match() const {
  for (const CorpusRow& r : rows)
    if (!r.matches) return false;
  return !rows.empty();
}

CorpusRun RunCorpus(const std::vector<CorpusEntry>& entries,
                    const Lexicon& lexicon, Strategy strategy) {
  CorpusRun run;
  run.strategy = strategy;
  auto start = std::chrono::steady_clock::now();
  for (const CorpusEntry& e : entries) {
    CorpusRow row;
    row.entry = e;
    row.result = Solve(e.text, lexicon, strategy, e.id);
    if (strategy == Strategy::kTotal) {
      SolveResult cautious = Solve(e.text, lexicon, Strategy::kCautious, e.id);
      if (cautious.analysis) row.cautious_lsi_size = cautious.analysis->lsi.size();
    }
    std::optional<Amount> answer;
    if (row.result.analysis) answer = row.result.analysis->verdict.answer;
    row.matches = StatusOf(row.result) == e.expected_status &&
                  answer == e.expected_answer;
    run.rows.push_back(std::move(row));
  }
  run.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return run;
}

std::string CorpusTable(const CorpusRun& run) {
  std::ostringstream os;
  char buf[256];
  const bool total = run.strategy == Strategy::kTotal;
  std::snprintf(buf, sizeof buf, "%-14s %-14s %-14s %6s %4s%s %8s  %s\n",
                "id", "expected", "got", "answer", "lsi",
                total ? " (cautious)" : "", "ms", "result");
  os << buf;
  int passed = 0;
  for (const CorpusRow& r : run.rows) {
    std::string answer = "-";
    size_t lsi = 0;
    if (r.result.analysis) {
      lsi = r.result.analysis->lsi.size();
      if (r.result.analysis->verdict.answer)
        answer = std::to_string(*r.result.analysis->verdict.answer);
    }
    std::string cautious;
    if (total) {
      cautious = r.cautious_lsi_size
                     ? " (" + std::to_string(*r.cautious_lsi_size) + ", " +
                           (lsi >= *r.cautious_lsi_size ? "+" : "") +
                           std::to_string(static_cast<long>(lsi) -
                                          static_cast<long>(*r.cautious_lsi_size)) +
                           ")"
                     : " (-)";
      while (cautious.size() < 11) cautious += ' ';
    }
    std::snprintf(buf, sizeof buf, "%-14s %-14s %-14s %6s %4zu%s %8.3f  %s\n",
                  r.entry.id.c_str(), r.entry.expected_status.c_str(),
                  StatusOf(r.result).c_str(), answer.c_str(), lsi,
                  cautious.c_str(), r.result.millis,
                  r.matches ? "ok" : "MISMATCH");
    os << buf;
    passed += r.matches;
  }
  std::snprintf(buf, sizeof buf, "%d/%zu match, %.3f ms total (strategy %s)\n",
                passed, run.rows.size(), run.millis,
                ToString(run.strategy).c_str());
  os << buf;
  return os.str();
}

}  // namespace schemarith
