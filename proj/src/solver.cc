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

#include "schemarith/solver.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace schemarith {

using Code = ProblemError::Code;

std::optional<Amount> Binding::Get(const Quantity& q) const {
  if (q.is_known()) return q.known();
  if (q.is_question()) return question_;
  auto it = vars_.find(q.var());
  if (it == vars_.end()) return std::nullopt;
  return it->second;
}

void Binding::Set(const Quantity& q, Amount value) {
  if (q.is_known() || Bound(q))
    throw std::logic_error("slot is already determined");
  if (q.is_question()) {
    question_ = value;
  } else {
    vars_[q.var()] = value;
  }
}

namespace {

std::array<Quantity, 3> Slots(const Equation& eq) { return {eq.a, eq.b, eq.c}; }

void CheckWellFormed(const Lsi& lsi, const PropositionStore& store) {
  if (store.question_count() != 1) {
    throw ProblemError(Code::kMalformedLsi,
                       "expected exactly one question, store has " +
                           std::to_string(store.question_count()));
  }
  for (size_t i = 0; i < lsi.size(); ++i) {
    const SchemaInstantiation& si = lsi[i];
    if (si.equation != EquationFor(si.kind, si.change, si.quantities)) {
      throw ProblemError(Code::kMalformedLsi,
                         "equation " + std::to_string(i + 1) +
                             " does not match its schema");
    }
    for (const Quantity& q : si.quantities) {
      if (q.is_known() && q.known() < 0)
        throw ProblemError(Code::kMalformedLsi, "negative stated amount");
      if (q.is_var() && q.var().index >=
                            static_cast<int>(store.vars().size()))
        throw ProblemError(Code::kMalformedLsi, "unknown variable");
    }
  }
}

// Exact rational for the elimination check.
struct Fraction {
  __int128 num = 0;
  __int128 den = 1;

  static Fraction Of(__int128 n, __int128 d) {
    if (d < 0) n = -n, d = -d;
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) n /= a, d /= a;
    return {n, d};
  }
  bool zero() const { return num == 0; }
  Fraction operator-(const Fraction& o) const {
    return Of(num * o.den - o.num * den, den * o.den);
  }
  Fraction operator*(const Fraction& o) const {
    return Of(num * o.num, den * o.den);
  }
  Fraction operator/(const Fraction& o) const {
    return Of(num * o.den, den * o.num);
  }
};

// Whether the question is uniquely fixed by the unknowns' linear system.
bool QuestionDeterminedByElimination(const Lsi& lsi,
                                     const std::vector<Quantity>& unknowns) {
  auto column = [&](const Quantity& q) -> int {
    for (size_t i = 0; i < unknowns.size(); ++i)
      if (unknowns[i] == q) return static_cast<int>(i);
    return -1;
  };
  const int qcol = column(Quantity::Ask());
  if (qcol < 0) return false;
  const size_t n = unknowns.size();
  std::vector<std::vector<Fraction>> rows;
  for (const SchemaInstantiation& si : lsi) {
    // a + b - c = 0 over the unknown columns; constants are irrelevant for
    // uniqueness.
    std::vector<Fraction> row(n);
    const Equation& eq = si.equation;
    const std::array<std::pair<Quantity, int>, 3> terms = {
        {{eq.a, 1}, {eq.b, 1}, {eq.c, -1}}};
    for (const auto& [q, sign] : terms) {
      int col = column(q);
      if (col >= 0) row[col] = Fraction::Of(row[col].num + sign * row[col].den,
                                            row[col].den);
    }
    rows.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < n && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c].zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Fraction lead = rows[r][c];
    for (Fraction& f : rows[r]) f = f / lead;
    for (size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].zero()) continue;
      Fraction factor = rows[k][c];
      for (size_t j = 0; j < n; ++j)
        rows[k][j] = rows[k][j] - factor * rows[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t i = 0; i < pivot_col.size(); ++i) {
    if (pivot_col[i] != qcol) continue;
    std::set<int> pivots(pivot_col.begin(), pivot_col.end());
    for (size_t j = 0; j < n; ++j)
      if (!pivots.count(static_cast<int>(j)) && !rows[i][j].zero())
        return false;
    return true;
  }
  return false;
}

}  // namespace

Verdict Propagate(const Lsi& lsi, const PropositionStore& store) {
  CheckWellFormed(lsi, store);
  Verdict v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < lsi.size(); ++i) {
      const Equation& eq = lsi[i].equation;
      auto slots = Slots(eq);
      int open = -1;
      int open_count = 0;
      for (int s = 0; s < 3; ++s) {
        if (!v.binding.Bound(slots[s])) {
          open = s;
          ++open_count;
        }
      }
      // c = X + X has one unknown in two slots; the final check rejects odd c.
      const bool doubled = open_count == 2 && slots[0] == slots[1] &&
                           v.binding.Bound(slots[2]);
      if (open_count != 1 && !doubled) continue;
      Amount a = v.binding.Get(eq.a).value_or(0);
      Amount b = v.binding.Get(eq.b).value_or(0);
      Amount c = v.binding.Get(eq.c).value_or(0);
      Amount value = doubled     ? c / 2
                     : open == 0 ? c - b
                     : open == 1 ? c - a
                                 : a + b;
      if (doubled) open = 0;
      TraceStep step;
      step.equation = i;
      step.eq = eq;
      for (int s = 0; s < 3; ++s) {
        if (slots[s] != slots[open] && slots[s].is_unknown())
          step.knowns.emplace_back(slots[s], *v.binding.Get(slots[s]));
      }
      step.resolved = slots[open];
      step.value = value;
      v.binding.Set(slots[open], value);
      v.trace.push_back(std::move(step));
      changed = true;
    }
  }

  for (size_t i = 0; i < lsi.size(); ++i) {
    const Equation& eq = lsi[i].equation;
    auto a = v.binding.Get(eq.a), b = v.binding.Get(eq.b),
         c = v.binding.Get(eq.c);
    if (a && b && c && *a + *b != *c) {
      v.kind = Verdict::Kind::kContradiction;
      v.equation = i;
      v.values = {*a, *b, *c};
      return v;
    }
  }
  for (const TraceStep& step : v.trace) {
    if (step.value < 0) {
      v.kind = Verdict::Kind::kInvalid;
      v.equation = step.equation;
      v.negative = step.resolved;
      return v;
    }
  }
  if (auto answer = v.binding.question()) {
    v.kind = Verdict::Kind::kSolved;
    v.answer = answer;
    return v;
  }
  v.kind = Verdict::Kind::kInsufficient;
  std::vector<Quantity> unknowns;
  for (const SchemaInstantiation& si : lsi) {
    for (const Quantity& q : Slots(si.equation)) {
      if (!q.is_unknown()) continue;
      if (std::find(unknowns.begin(), unknowns.end(), q) == unknowns.end())
        unknowns.push_back(q);
      if (!v.binding.Bound(q) &&
          std::find(v.unresolved.begin(), v.unresolved.end(), q) ==
              v.unresolved.end())
        v.unresolved.push_back(q);
    }
  }
  if (std::find(v.unresolved.begin(), v.unresolved.end(), Quantity::Ask()) ==
      v.unresolved.end())
    v.unresolved.push_back(Quantity::Ask());
  v.determined_by_elimination = QuestionDeterminedByElimination(lsi, unknowns);
  return v;
}

bool Verify(const Lsi& lsi, const Binding& binding) {
  for (const SchemaInstantiation& si : lsi) {
    const Equation& eq = si.equation;
    auto a = binding.Get(eq.a), b = binding.Get(eq.b), c = binding.Get(eq.c);
    if (!a || !b || !c || *a + *b != *c) return false;
  }
  return true;
}

std::string RenderStep(const TraceStep& step, const PropositionStore& store) {
  std::string knowns;
  for (const auto& [q, value] : step.knowns) {
    if (!knowns.empty()) knowns += ", ";
    knowns += store.Name(q) + " = " + std::to_string(value);
  }
  if (knowns.empty()) knowns = "stated amounts";
  return Render(step.eq, store) + " with " + knowns + " ⇒ " +
         store.Name(step.resolved) + " = " + std::to_string(step.value);
}

std::string ToString(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::kSolved: return "Solved";
    case Verdict::Kind::kInsufficient: return "Insufficient";
    case Verdict::Kind::kContradiction: return "Contradiction";
    case Verdict::Kind::kInvalid: return "Invalid";
  }
  return "?";
}

}  // namespace schemarith
