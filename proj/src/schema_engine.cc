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

#include "schemarith/schema_engine.h"

#include <algorithm>
#include <cassert>
#include <set>
#include <tuple>

#include "text_util.h"

namespace schemarith {

using Code = ProblemError::Code;

namespace {

constexpr ChangeKind Kind(Direction d, LocusKind l) { return {d, l}; }

std::string ReplaceAll(std::string s, const std::string& from,
                       const std::string& to) {
  size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

// Replaces a one-letter slot when it stands alone as a word.
std::string ReplaceSlot(const std::string& line, char slot,
                        const std::string& value) {
  std::string out;
  for (size_t i = 0; i < line.size(); ++i) {
    bool alone = line[i] == slot && (i == 0 || line[i - 1] == ' ') &&
                 (i + 1 == line.size() || line[i + 1] == ' ');
    if (alone) {
      out += value;
    } else {
      out += line[i];
    }
  }
  return out;
}

}  // namespace

const std::array<ChangeFormula, 8>& ChangeFormulas() {
  using D = Direction;
  using L = LocusKind;
  static const std::array<ChangeFormula, 8> kFormulas = {{
      {Kind(D::kIn, L::kPlace),
       {"There were X objects in the place.",
        "Y objects were transferred into the place.",
        "There are Z objects in the place now."},
       {'X', 'Y', 'Z'}},
      {Kind(D::kOut, L::kPlace),
       {"There were X objects in the place.",
        "Y objects were transferred out of the place.",
        "There are Z objects in the place now."},
       {'X', 'Y', 'Z'}},
      {Kind(D::kIn, L::kOwnership),
       {"The owner had R objects.", "The owner received S objects.",
        "The owner has T objects now."},
       {'R', 'S', 'T'}},
      {Kind(D::kOut, L::kOwnership),
       {"The owner had R objects.", "The owner forfeited S objects.",
        "The owner has T objects now."},
       {'R', 'S', 'T'}},
      {Kind(D::kCreate, L::kOwnership),
       {"The owner had R objects.", "The owner created S objects.",
        "The owner has T objects now."},
       {'R', 'S', 'T'}},
      {Kind(D::kCreate, L::kPlace),
       {"There were X objects in the place.",
        "Y objects were created in the place.",
        "There are Z objects in the place now."},
       {'X', 'Y', 'Z'}},
      {Kind(D::kTerminate, L::kOwnership),
       {"The owner had R objects.", "The owner terminated S objects.",
        "The owner has T objects now."},
       {'R', 'S', 'T'}},
      {Kind(D::kTerminate, L::kPlace),
       {"There were X objects in the place.",
        "Y objects were terminated in the place.",
        "There are Z objects in the place now."},
       {'X', 'Y', 'Z'}},
  }};
  return kFormulas;
}

const ChangeFormula& FormulaFor(const ChangeKind& kind) {
  for (const ChangeFormula& f : ChangeFormulas())
    if (f.kind == kind) return f;
  throw std::logic_error("no change formula for " + ToString(kind));
}

Segment SegmentAgainstStore(const ElementaryEvent& event,
                            const PropositionStore& store) {
  Segment seg{event, std::nullopt, std::nullopt};
  if (auto h = store.FindState({event.locus, event.object, Time::kInitial}))
    seg.before = store.state(*h).quantity;
  if (auto h = store.FindState({event.locus, event.object, Time::kFinal}))
    seg.after = store.state(*h).quantity;
  return seg;
}

FormulaInstantiation MatchChangeFormula(const Segment& segment) {
  const ElementaryEvent& ev = segment.event;
  FormulaInstantiation fi;
  fi.formula = &FormulaFor(ev.kind);
  fi.locus = ev.locus;
  fi.object = ev.object;
  fi.delta = ev.delta;
  fi.initial = segment.before;
  fi.final = segment.after;
  return fi;
}

std::array<std::string, 3> FormulaLines(const FormulaInstantiation& fi,
                                        const PropositionStore& store,
                                        const Lexicon& lexicon) {
  const ChangeFormula& f = *fi.formula;
  auto fill = [&](std::string line, char slot,
                  const std::optional<Quantity>& q) {
    std::string owner = fi.locus.entity_kind == EntityKind::kProperName
                            ? fi.locus.name
                            : "The " + lexicon.PluralOf(fi.locus.name);
    line = ReplaceAll(line, "The owner", owner);
    line = ReplaceAll(line, "the place", "the " + fi.locus.name);
    line = ReplaceAll(line, "objects", lexicon.PluralOf(fi.object));
    return ReplaceSlot(line, slot, q ? store.Name(*q) : std::string(1, slot));
  };
  ElementaryEvent ev;
  ev.kind = f.kind;
  ev.locus = fi.locus;
  ev.object = fi.object;
  ev.delta = fi.delta;
  return {fill(f.lines[0], f.slots[0], fi.initial),
          Canonicalize(ev, lexicon) + ".",
          fill(f.lines[2], f.slots[2], fi.final)};
}

Equation EquationFor(SchemaKind kind, const ChangeKind& change,
                     const std::array<Quantity, 3>& q) {
  switch (kind) {
    case SchemaKind::kChange:
      // final = initial + delta, or initial = final + delta for losses.
      if (change.increases()) return {q[0], q[1], q[2]};
      return {q[2], q[1], q[0]};
    case SchemaKind::kMore:
      return {q[1], q[2], q[0]};  // left = right + diff
    case SchemaKind::kLess:
      return {q[0], q[2], q[1]};  // right = left + diff
    case SchemaKind::kCombine:
      return {q[0], q[1], q[2]};
  }
  return {};
}

SchemaInstantiation Promote(const FormulaInstantiation& fi) {
  assert(fi.promotable());
  SchemaInstantiation si;
  si.kind = SchemaKind::kChange;
  si.change = fi.formula->kind;
  si.quantities = {*fi.initial, fi.delta, *fi.final};
  si.equation = EquationFor(si.kind, si.change, si.quantities);
  si.origin = ToString(fi.locus) + " " + fi.object;
  return si;
}

SchemaInstantiation InstantiateCompare(const CompareSurface& compare,
                                       PropositionStore& store) {
  StateHandle left = store.LookupOrIntroduceState(compare.left);
  StateHandle right = store.LookupOrIntroduceState(compare.right);
  SchemaInstantiation si;
  si.kind = compare.direction == CompareDirection::kMore ? SchemaKind::kMore
                                                         : SchemaKind::kLess;
  si.quantities = {store.state(left).quantity, store.state(right).quantity,
                   compare.diff};
  si.equation = EquationFor(si.kind, si.change, si.quantities);
  si.origin = "comparison";
  return si;
}

std::vector<SchemaInstantiation> InstantiateCombine(
    const CombineSurface& combine, PropositionStore& store,
    const Lexicon& lexicon) {
  std::vector<Quantity> parts;
  for (const CombinePart& part : combine.parts) {
    if (auto* ref = std::get_if<StateRef>(&part)) {
      parts.push_back(store.state(store.LookupOrIntroduceState(*ref)).quantity);
      continue;
    }
    const std::string& group = std::get<AgentClass>(part).name;
    std::set<ObjectClass> members = lexicon.SupersetMembers(group);
    if (members.empty()) members.insert(group);
    if (combine.verb_context == "have") {
      for (const ObjectClass& m : members) {
        StateRef ref{Locus::Owner(m, EntityKind::kClassNoun), combine.object,
                     combine.time};
        parts.push_back(
            store.state(store.LookupOrIntroduceState(ref)).quantity);
      }
      continue;
    }
    // Amounts the members received, e.g. "5 girls bought 6 tickets".
    for (const ElementaryEvent& ev : store.events()) {
      if (ev.kind == ChangeKind{Direction::kIn, LocusKind::kOwnership} &&
          ev.object == combine.object && members.count(ev.locus.name))
        parts.push_back(ev.delta);
    }
  }
  if (parts.size() < 2) {
    throw ProblemError(Code::kUnresolvableCombine,
                       "found " + std::to_string(parts.size()) +
                           " part(s) to combine for " +
                           lexicon.PluralOf(combine.object));
  }
  std::vector<SchemaInstantiation> out;
  Quantity running = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) {
    SchemaInstantiation si;
    si.kind = SchemaKind::kCombine;
    Quantity total = combine.total;
    if (i + 1 < parts.size())
      total = Quantity::Var(store.NewVar("partial sum " + std::to_string(i) +
                                         " of " + combine.object));
    si.quantities = {running, parts[i], total};
    si.equation = EquationFor(si.kind, si.change, si.quantities);
    si.origin = "combination";
    out.push_back(si);
    running = total;
  }
  return out;
}

Lsi BuildInitialLsi(PropositionStore& store, const Lexicon& lexicon) {
  // Compares and combines interleaved by sentence.
  std::vector<std::tuple<int, int, size_t>> order;
  for (size_t i = 0; i < store.compares().size(); ++i)
    order.emplace_back(store.compares()[i].sentence, 0, i);
  for (size_t i = 0; i < store.combines().size(); ++i)
    order.emplace_back(store.combines()[i].sentence, 1, i);
  std::stable_sort(order.begin(), order.end(), [](const auto& a,
                                                  const auto& b) {
    return std::get<0>(a) < std::get<0>(b);
  });
  Lsi lsi;
  for (const auto& [sentence, kind, i] : order) {
    if (kind == 0) {
      lsi.push_back(InstantiateCompare(store.compares()[i].value, store));
    } else {
      CombineSurface c = store.combines()[i].value;
      for (SchemaInstantiation& si : InstantiateCombine(c, store, lexicon))
        lsi.push_back(std::move(si));
    }
  }
  return lsi;
}

Lsi BuildLsi(PropositionStore& store, const std::vector<Timeline>& timelines,
             Strategy strategy, Lsi lsi) {
  for (const Timeline& tl : timelines) {
    const bool both_present = tl.initial && tl.final;
    if (strategy == Strategy::kCautious && !both_present) continue;
    auto endpoint = [&](const std::optional<StateHandle>& h, Time t) {
      StateHandle handle =
          h ? *h : store.LookupOrIntroduceState({tl.locus, tl.object, t});
      return store.state(handle).quantity;
    };
    Quantity before = endpoint(tl.initial, Time::kInitial);
    Quantity last = endpoint(tl.final, Time::kFinal);
    for (size_t i = 0; i < tl.events.size(); ++i) {
      Quantity after = i + 1 == tl.events.size()
                           ? last
                           : Quantity::Var(tl.intermediates[i]);
      FormulaInstantiation fi =
          MatchChangeFormula(Segment{tl.events[i], before, after});
      SchemaInstantiation si = Promote(fi);
      si.origin = ToString(tl.locus) + " " + tl.object + " step " +
                  std::to_string(i + 1) + "/" +
                  std::to_string(tl.events.size());
      lsi.push_back(std::move(si));
      before = after;
    }
  }
  return lsi;
}

std::string Render(const SchemaInstantiation& si,
                   const PropositionStore& store) {
  const auto& q = si.quantities;
  switch (si.kind) {
    case SchemaKind::kChange: {
      std::string middle;
      switch (si.change.direction) {
        case Direction::kIn: middle = "in"; break;
        case Direction::kOut: middle = "out"; break;
        case Direction::kCreate: middle = "created"; break;
        case Direction::kTerminate: middle = "terminated"; break;
      }
      return ToString(si.change) + " (initially " + store.Name(q[0]) + ", " +
             middle + " " + store.Name(q[1]) + ", finally " +
             store.Name(q[2]) + ")";
    }
    case SchemaKind::kMore:
    case SchemaKind::kLess:
      return std::string(si.kind == SchemaKind::kMore ? "More" : "Less") +
             " (" + store.Name(q[0]) + ", than " + store.Name(q[1]) + ", by " +
             store.Name(q[2]) + ")";
    case SchemaKind::kCombine:
      return "Combine (" + store.Name(q[0]) + ", " + store.Name(q[1]) +
             ", altogether " + store.Name(q[2]) + ")";
  }
  return "?";
}

std::string Render(const Equation& eq, const PropositionStore& store) {
  return store.Name(eq.c) + " = " + store.Name(eq.a) + " + " +
         store.Name(eq.b);
}

std::string CanonicalForm(const Equation& eq, const PropositionStore& store) {
  std::string a = store.Label(eq.a);
  std::string b = store.Label(eq.b);
  if (b < a) std::swap(a, b);
  return store.Label(eq.c) + " = " + a + " + " + b;
}

std::string ToString(Strategy s) {
  return s == Strategy::kCautious ? "cautious" : "total";
}

std::string ToString(SchemaKind k) {
  switch (k) {
    case SchemaKind::kChange: return "change";
    case SchemaKind::kMore: return "more";
    case SchemaKind::kLess: return "less";
    case SchemaKind::kCombine: return "combine";
  }
  return "?";
}

}  // namespace schemarith
