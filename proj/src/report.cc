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

#include "schemarith/report.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"
#include "text_util.h"

namespace schemarith {

using internal::Trim;
using json = nlohmann::ordered_json;

namespace {

constexpr size_t kLeftWidth = 44;

// Display width, counting each UTF-8 sequence once.
size_t Width(const std::string& s) {
  return std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  });
}

std::string Pad(const std::string& s, size_t width) {
  size_t w = Width(s);
  return w >= width ? s + " " : s + std::string(width - w, ' ');
}

// Greedy word wrap; continuation lines are indented by `indent` spaces.
std::vector<std::string> Wrap(const std::string& text, size_t width,
                              size_t indent) {
  std::vector<std::string> out;
  std::string line;
  std::istringstream words(text);
  std::string w;
  while (words >> w) {
    if (!line.empty() && Width(line) + 1 + Width(w) > width) {
      out.push_back(line);
      line = std::string(indent, ' ');
    } else if (!line.empty() && line.back() != ' ') {
      line += ' ';
    }
    line += w;
  }
  if (!line.empty() || out.empty()) out.push_back(line);
  return out;
}

std::string Letter(size_t i) { return std::string(1, char('a' + i % 26)); }

std::string SentenceLabel(int sentence) {
  return sentence < 0 ? std::string("introduced")
                      : "sentence " + std::to_string(sentence + 1);
}

json QuantityJson(const Quantity& q, const PropositionStore& store) {
  return store.Name(q);
}

std::string VerdictLine(const SolveResult& r) {
  if (r.error) {
    std::string out = "Error " + std::string(CodeName(r.error->code())) +
                      ": " + r.error->what();
    return out;
  }
  const Analysis& a = *r.analysis;
  const Verdict& v = a.verdict;
  const PropositionStore& s = a.store;
  switch (v.kind) {
    case Verdict::Kind::kSolved:
      return "Solved: ? = " + std::to_string(*v.answer);
    case Verdict::Kind::kInsufficient: {
      std::string names;
      for (const Quantity& q : v.unresolved)
        names += (names.empty() ? "" : ", ") + s.Name(q);
      std::string out = "Insufficient data: unresolved " + names;
      if (v.determined_by_elimination)
        out += " (the question is fixed by the equations jointly, but no "
               "single equation determines it)";
      return out;
    }
    case Verdict::Kind::kContradiction: {
      const Equation& eq = a.lsi[*v.equation].equation;
      return "Contradiction in equation " + std::to_string(*v.equation + 1) +
             ": " + Render(eq, s) + " does not hold (" +
             std::to_string(v.values[2]) + " ≠ " +
             std::to_string(v.values[0] + v.values[1]) + ")";
    }
    case Verdict::Kind::kInvalid:
      return "Invalid: equation " + std::to_string(*v.equation + 1) +
             " gives " + s.Name(*v.negative) + " = " +
             std::to_string(*v.binding.Get(*v.negative)) +
             ", a negative amount";
  }
  return "";
}

}  // namespace

std::vector<std::string> SentenceTexts(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    std::string t(Trim(current));
    bool has_word = std::any_of(t.begin(), t.end(), [](unsigned char c) {
      return std::isalnum(c) || c >= 0x80;
    });
    if (has_word) out.push_back(t);
    current.clear();
  };
  for (char ch : text) {
    current += ch == '\n' ? ' ' : ch;
    if (ch == '.' || ch == '?' || ch == '!') flush();
  }
  flush();
  return out;
}

std::vector<std::string> ParsedPropositions(const Analysis& analysis,
                                            const Lexicon& lexicon) {
  std::vector<std::string> out;
  for (const auto& e : analysis.store.raw_events()) {
    std::string text = RenderSentence(e.value, lexicon);
    if (!text.empty() && text.back() == '.') text.pop_back();
    out.push_back(text);
  }
  const auto& states = analysis.store.states();
  for (size_t i = 0; i < analysis.states_after_initial_lsi && i < states.size();
       ++i)
    out.push_back(RenderState(states[i], analysis.store, lexicon));
  return out;
}

std::vector<NumberedLine> AfterSplitting(const Analysis& analysis,
                                         const Lexicon& lexicon) {
  std::vector<NumberedLine> out;
  const PropositionStore& store = analysis.store;
  int n = 0;
  const auto& events = store.events();
  for (size_t i = 0; i < events.size();) {
    size_t j = i;
    while (j < events.size() && events[j].seq == events[i].seq) ++j;
    ++n;
    for (size_t k = i; k < j; ++k) {
      out.push_back({std::to_string(n) + (j - i > 1 ? Letter(k - i) : ""),
                     RenderElementary(events[k], lexicon)});
    }
    i = j;
  }
  std::vector<std::pair<int, std::string>> relations;
  for (const auto& c : store.compares())
    relations.emplace_back(c.sentence, RenderSentence(c.value, lexicon));
  for (const auto& c : store.combines())
    relations.emplace_back(c.sentence, RenderSentence(c.value, lexicon));
  std::stable_sort(relations.begin(), relations.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [sentence, text] : relations) {
    if (!text.empty() && (text.back() == '.' || text.back() == '?'))
      text.pop_back();
    out.push_back({std::to_string(++n), text});
  }
  const auto& states = store.states();
  for (size_t i = 0; i < analysis.states_after_initial_lsi && i < states.size();
       ++i)
    out.push_back({std::to_string(++n), RenderState(states[i], store, lexicon)});
  return out;
}

std::string TextReport(const ReportInput& in, const Lexicon& lexicon,
                       bool trace) {
  const SolveResult& r = in.result;
  std::ostringstream os;
  os << "== " << (r.id.empty() ? std::string("problem") : r.id)
     << " (strategy: " << ToString(r.strategy) << ") ==\n";
  std::vector<std::string> sentences = SentenceTexts(in.text);
  os << "Text:\n";
  for (size_t i = 0; i < sentences.size(); ++i) {
    std::string num = std::to_string(i + 1);
    for (const std::string& line : Wrap(num + ") " + sentences[i], 76,
                                        num.size() + 2))
      os << "  " << line << "\n";
  }
  if (!r.analysis) {
    if (r.error && r.error->sentence() >= 0)
      os << "At sentence " << r.error->sentence() + 1 << ".\n";
    os << "\n" << VerdictLine(r) << "\n";
    return os.str();
  }

  const Analysis& a = *r.analysis;
  const PropositionStore& s = a.store;
  std::vector<std::string> left = ParsedPropositions(a, lexicon);
  std::vector<std::string> right;
  for (size_t i = 0; i < a.initial_lsi_size; ++i)
    right.push_back(Render(a.lsi[i], s));
  os << "\n" << Pad("Propositions", kLeftWidth) << "| Schema instantiations\n";
  os << std::string(kLeftWidth, '-') << "+" << std::string(kLeftWidth, '-')
     << "\n";
  for (size_t i = 0; i < std::max(left.size(), right.size()); ++i) {
    std::vector<std::string> cell;
    if (i < left.size()) cell = Wrap(left[i], kLeftWidth - 1, 2);
    if (cell.empty()) cell.push_back("");
    for (size_t k = 0; k < cell.size(); ++k) {
      std::string rhs = k == 0 && i < right.size() ? " " + right[i] : "";
      os << Pad(cell[k], kLeftWidth) << "|" << rhs << "\n";
    }
  }

  os << "\nAfter splitting:\n";
  for (const NumberedLine& line : AfterSplitting(a, lexicon))
    os << "  " << line.number << ") " << line.text << "\n";

  os << "\nSchema instantiations (" << a.lsi.size() << "):\n";
  for (size_t i = 0; i < a.lsi.size(); ++i)
    os << "  " << (i + 1) << ". " << Render(a.lsi[i], s) << "\n";
  os << "\nEquations:\n";
  for (size_t i = 0; i < a.lsi.size(); ++i)
    os << "  " << (i + 1) << ". " << Render(a.lsi[i].equation, s) << "\n";

  if (trace) {
    os << "\nStates:\n";
    for (const StateEntry& st : s.states())
      os << "  " << RenderState(st, s, lexicon) << "  ["
         << SentenceLabel(st.introduced ? -1 : st.sentence) << "]\n";
    os << "\nTrace:\n";
    if (a.verdict.trace.empty()) os << "  (no equation had a single unknown)\n";
    for (size_t i = 0; i < a.verdict.trace.size(); ++i) {
      const TraceStep& step = a.verdict.trace[i];
      os << "  " << (i + 1) << ". [eq " << step.equation + 1 << "] "
         << RenderStep(step, s) << "\n";
    }
  }
  os << "\n" << VerdictLine(r) << "\n";
  return os.str();
}

std::string JsonReport(const std::vector<ReportInput>& inputs,
                       const Lexicon& lexicon) {
  json doc;
  doc["format_version"] = kReportFormatVersion;
  json problems = json::array();
  for (const ReportInput& in : inputs) {
    const SolveResult& r = in.result;
    json p;
    p["id"] = r.id;
    p["strategy"] = ToString(r.strategy);
    p["status"] = StatusOf(r);
    p["exit_code"] = ExitCodeFor(r);
    p["answer"] = nullptr;
    if (r.analysis && r.analysis->verdict.answer)
      p["answer"] = *r.analysis->verdict.answer;
    p["message"] = VerdictLine(r);
    if (r.error) {
      p["error"] = {{"code", CodeName(r.error->code())},
                    {"message", r.error->what()},
                    {"sentence", r.error->sentence() < 0
                                     ? json(nullptr)
                                     : json(r.error->sentence() + 1)}};
    } else {
      p["error"] = nullptr;
    }

    std::vector<std::string> sentences = SentenceTexts(in.text);
    json js = json::array();
    for (size_t i = 0; i < sentences.size(); ++i)
      js.push_back({{"number", i + 1}, {"text", sentences[i]}});
    p["sentences"] = js;

    if (r.analysis) {
      const Analysis& a = *r.analysis;
      const PropositionStore& s = a.store;
      json states = json::array();
      for (const StateEntry& st : s.states()) {
        states.push_back(
            {{"key", KeyLabel(st.ref)},
             {"quantity", QuantityJson(st.quantity, s)},
             {"text", RenderState(st, s, lexicon)},
             {"introduced", st.introduced},
             {"sentence", st.introduced || st.sentence < 0
                              ? json(nullptr)
                              : json(st.sentence + 1)}});
      }
      p["states"] = states;
      p["propositions"] = ParsedPropositions(a, lexicon);
      json initial = json::array();
      for (size_t i = 0; i < a.initial_lsi_size; ++i)
        initial.push_back(Render(a.lsi[i], s));
      p["initial_lsi"] = initial;
      json split = json::array();
      for (const NumberedLine& line : AfterSplitting(a, lexicon))
        split.push_back({{"number", line.number}, {"text", line.text}});
      p["after_splitting"] = split;
      json vars = json::array();
      for (const VarInfo& v : s.vars())
        vars.push_back({{"name", v.name}, {"stands_for", v.label}});
      p["variables"] = vars;
      json lsi = json::array();
      for (const SchemaInstantiation& si : a.lsi) {
        json q = json::array();
        for (const Quantity& x : si.quantities) q.push_back(QuantityJson(x, s));
        lsi.push_back(
            {{"schema", ToString(si.kind)},
             {"change", si.kind == SchemaKind::kChange
                            ? json(ToString(si.change))
                            : json(nullptr)},
             {"quantities", q},
             {"text", Render(si, s)},
             {"equation", Render(si.equation, s)},
             {"origin", si.origin}});
      }
      p["lsi"] = lsi;
      json trace = json::array();
      for (const TraceStep& step : a.verdict.trace) {
        trace.push_back({{"equation", step.equation + 1},
                         {"resolved", s.Name(step.resolved)},
                         {"value", step.value},
                         {"text", RenderStep(step, s)}});
      }
      p["trace"] = trace;
      const Verdict& v = a.verdict;
      json verdict = {{"kind", ToString(v.kind)}};
      json unresolved = json::array();
      for (const Quantity& q : v.unresolved) unresolved.push_back(s.Name(q));
      verdict["unresolved"] = unresolved;
      verdict["determined_by_elimination"] = v.determined_by_elimination;
      verdict["equation"] =
          v.equation ? json(*v.equation + 1) : json(nullptr);
      verdict["values"] = v.kind == Verdict::Kind::kContradiction
                              ? json(v.values)
                              : json(nullptr);
      verdict["negative"] = v.negative ? json(s.Name(*v.negative))
                                       : json(nullptr);
      p["verdict"] = verdict;
    } else {
      p["states"] = json::array();
      p["propositions"] = json::array();
      p["initial_lsi"] = json::array();
      p["after_splitting"] = json::array();
      p["variables"] = json::array();
      p["lsi"] = json::array();
      p["trace"] = json::array();
      p["verdict"] = nullptr;
    }
    problems.push_back(std::move(p));
  }
  doc["problems"] = problems;
  return doc.dump(2) + "\n";
}

}  // namespace schemarith
