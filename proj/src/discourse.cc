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

#include "schemarith/discourse.h"

#include <algorithm>
#include <map>

#include "text_util.h"

namespace schemarith {

using Code = ProblemError::Code;

namespace {

std::string VarName(int index) {
  static const char* kLetters[] = {"X", "Y", "Z", "U", "V", "W"};
  if (index < 6) return kLetters[index];
  return "X" + std::to_string(index + 1);
}

Locus LocusFor(const Entity& e, LocusKind kind) {
  if (kind == LocusKind::kPlace) return Locus::Place(e.name);
  return Locus::Owner(e.name, e.kind);
}

const std::optional<Entity>& Participant(const EventSurface& ev, Role r) {
  switch (r) {
    case Role::kAgent: return ev.agent;
    case Role::kRecipient: return ev.recipient;
    case Role::kSource: return ev.source;
    case Role::kDestination: return ev.destination;
  }
  return ev.agent;
}

}  // namespace

std::string KeyLabel(const StateRef& ref) {
  return ToString(ref.locus) + "/" + ref.object + "/" + ToString(ref.time);
}

PropositionStore PropositionStore::Build(const std::vector<Proposition>& props,
                                         const Lexicon& lexicon) {
  PropositionStore store;
  for (const Proposition& p : props) {
    if (auto* s = std::get_if<StateProp>(&p.content)) {
      store.AddState(s->ref, s->quantity, false, p.sentence);
    } else if (auto* e = std::get_if<EventSurface>(&p.content)) {
      store.raw_events_.push_back({*e, p.sentence});
      for (ElementaryEvent& el : SplitCompound(*e, lexicon, p.sentence))
        store.events_.push_back(std::move(el));
    } else if (auto* c = std::get_if<CompareSurface>(&p.content)) {
      store.compares_.push_back({*c, p.sentence});
    } else {
      store.combines_.push_back({std::get<CombineSurface>(p.content),
                                 p.sentence});
    }
  }
  return store;
}

StateHandle PropositionStore::AddState(const StateRef& ref, Quantity q,
                                       bool introduced, int sentence) {
  if (auto existing = FindState(ref)) {
    const StateEntry& old = states_[*existing];
    if (old.quantity != q) {
      throw ProblemError(Code::kDataConflict,
                         "sentence " + std::to_string(sentence + 1) +
                             " gives " + Name(q) + " for " + KeyLabel(ref) +
                             ", sentence " + std::to_string(old.sentence + 1) +
                             " gives " + Name(old.quantity),
                         sentence);
    }
    return *existing;
  }
  states_.push_back({ref, q, introduced, sentence});
  return states_.size() - 1;
}

std::optional<StateHandle> PropositionStore::FindState(
    const StateRef& ref) const {
  for (size_t i = 0; i < states_.size(); ++i)
    if (states_[i].ref == ref) return i;
  return std::nullopt;
}

StateHandle PropositionStore::LookupOrIntroduceState(const StateRef& ref) {
  if (auto found = FindState(ref)) return *found;
  VarId v = NewVar(KeyLabel(ref));
  states_.push_back({ref, Quantity::Var(v), true, -1});
  return states_.size() - 1;
}

VarId PropositionStore::NewVar(std::string label) {
  VarId v{static_cast<int>(vars_.size())};
  vars_.push_back({VarName(v.index), std::move(label)});
  return v;
}

int PropositionStore::question_count() const {
  int n = 0;
  for (const StateEntry& s : states_) n += s.quantity.is_question();
  for (const auto& c : combines_) n += c.value.total.is_question();
  for (const auto& c : compares_) n += c.value.diff.is_question();
  for (const auto& e : raw_events_) n += e.value.amount.is_question();
  return n;
}

std::string PropositionStore::Name(const Quantity& q) const {
  if (q.is_known()) return std::to_string(q.known());
  if (q.is_question()) return "?";
  return vars_.at(q.var().index).name;
}

std::string PropositionStore::Label(const Quantity& q) const {
  if (q.is_var()) return "{" + vars_.at(q.var().index).label + "}";
  return Name(q);
}

std::vector<ElementaryEvent> SplitCompound(const EventSurface& event,
                                           const Lexicon& lexicon,
                                           int origin) {
  auto cls = lexicon.ClassifyVerb(event.verb);
  if (!cls) {
    throw ProblemError(Code::kUnknownVerb,
                       "no classification for verb '" + event.verb + "'",
                       origin);
  }
  auto fail = [&](const std::string& why) -> ProblemError {
    return ProblemError(Code::kParseError,
                        "sentence " + std::to_string(origin + 1) + ": " + why,
                        origin);
  };
  std::vector<ElementaryEvent> out;
  auto emit = [&](ChangeKind kind, const Entity& who) {
    out.push_back({kind, LocusFor(who, kind.locus_kind), event.object,
                   event.amount, event.seq, origin, event.verb});
  };

  if (auto* el = std::get_if<ElementaryVerb>(&*cls)) {
    ChangeKind kind = el->kind;
    for (const VerbClassification& reading : lexicon.Readings(event.verb)) {
      const auto* alt = std::get_if<ElementaryVerb>(&reading);
      if (!alt || alt->kind.locus_kind != LocusKind::kPlace) continue;
      const bool in = alt->kind.direction == Direction::kIn;
      if ((in && event.destination) || (!in && event.source)) {
        kind = alt->kind;
        break;
      }
    }
    switch (kind.direction) {
      case Direction::kIn:
      case Direction::kOut: {
        const std::optional<Entity>* who = &event.agent;
        if (kind.locus_kind == LocusKind::kPlace)
          who = kind.direction == Direction::kIn ? &event.destination
                                                 : &event.source;
        if (!*who) throw fail("'" + event.verb + "' names no " +
                              ToString(kind.locus_kind) + " locus");
        emit(kind, **who);
        break;
      }
      case Direction::kCreate:
      case Direction::kTerminate:
        // Created or destroyed in the named place, else in the agent's
        // possession.
        if (event.destination) {
          kind.locus_kind = LocusKind::kPlace;
          emit(kind, *event.destination);
        } else if (event.agent) {
          kind.locus_kind = LocusKind::kOwnership;
          emit(kind, *event.agent);
        } else {
          throw fail("'" + event.verb + "' names neither place nor owner");
        }
        break;
    }
    return out;
  }
  if (auto* c = std::get_if<CompoundVerb>(&*cls)) {
    for (const CompoundComponent& comp : c->components) {
      const std::optional<Entity>& who = Participant(event, comp.role);
      if (who) emit(comp.kind, *who);
    }
    if (out.empty()) throw fail("'" + event.verb + "' names no participant");
    return out;
  }
  throw fail("'" + event.verb + "' is not a change verb");
}

std::string Canonicalize(const ElementaryEvent& event, const Lexicon& lexicon) {
  std::string amount;
  bool singular = false;
  if (event.delta.is_known()) {
    amount = std::to_string(event.delta.known());
    singular = event.delta.known() == 1;
  } else {
    amount = "?";
  }
  std::string subject =
      amount + " " + (singular ? event.object : lexicon.PluralOf(event.object));
  std::string be = singular ? " was " : " were ";
  const bool place = event.kind.locus_kind == LocusKind::kPlace;
  std::string where = place ? "the " + event.locus.name : event.locus.name;
  if (!place && event.locus.entity_kind == EntityKind::kClassNoun)
    where = "the " + lexicon.PluralOf(event.locus.name);
  switch (event.kind.direction) {
    case Direction::kIn:
      return subject + be + "transferred " + (place ? "into " : "to ") + where;
    case Direction::kOut:
      return subject + be + "transferred " + (place ? "out of " : "from ") +
             where;
    case Direction::kCreate:
      return subject + be + "created " + (place ? "in " : "by ") + where;
    case Direction::kTerminate:
      return subject + be + "terminated " + (place ? "in " : "by ") + where;
  }
  return subject;
}

std::string RenderElementary(const ElementaryEvent& event,
                             const Lexicon& lexicon) {
  if (event.kind.locus_kind == LocusKind::kPlace)
    return Canonicalize(event, lexicon);
  std::string owner = event.locus.entity_kind == EntityKind::kProperName
                          ? event.locus.name
                          : "The " + lexicon.PluralOf(event.locus.name);
  std::string verb;
  switch (event.kind.direction) {
    case Direction::kIn: verb = "got"; break;
    case Direction::kOut: verb = "forfeited"; break;
    case Direction::kCreate: verb = "created"; break;
    case Direction::kTerminate: verb = "terminated"; break;
  }
  bool singular = event.delta.is_known() && event.delta.known() == 1;
  std::string amount =
      event.delta.is_known() ? std::to_string(event.delta.known()) : "?";
  return owner + " " + verb + " " + amount + " " +
         (singular ? event.object : lexicon.PluralOf(event.object));
}

std::vector<Timeline> BuildTimelines(PropositionStore& store) {
  std::vector<Timeline> out;
  std::map<std::pair<Locus, ObjectClass>, size_t> index;
  for (const ElementaryEvent& ev : store.events()) {
    auto key = std::make_pair(ev.locus, ev.object);
    auto [it, inserted] = index.emplace(key, out.size());
    if (inserted) {
      Timeline tl;
      tl.locus = ev.locus;
      tl.object = ev.object;
      out.push_back(std::move(tl));
    }
    out[it->second].events.push_back(ev);
  }
  for (Timeline& tl : out) {
    std::stable_sort(tl.events.begin(), tl.events.end(),
                     [](const ElementaryEvent& a, const ElementaryEvent& b) {
                       if (a.kind.increases() != b.kind.increases())
                         return a.kind.increases();
                       if (a.delta.is_known() != b.delta.is_known())
                         return a.delta.is_known();
                       if (a.delta.is_known() &&
                           a.delta.known() != b.delta.known())
                         return a.delta.known() < b.delta.known();
                       return a.seq < b.seq;
                     });
    tl.initial = store.FindState({tl.locus, tl.object, Time::kInitial});
    tl.final = store.FindState({tl.locus, tl.object, Time::kFinal});
    std::string base = ToString(tl.locus) + "/" + tl.object + "/after step ";
    for (size_t i = 0; i + 1 < tl.events.size(); ++i)
      tl.intermediates.push_back(store.NewVar(base + std::to_string(i + 1)));
  }
  return out;
}

std::string RenderState(const StateEntry& state, const PropositionStore& store,
                        const Lexicon& lexicon) {
  const StateRef& r = state.ref;
  std::string amount = store.Name(state.quantity);
  std::string noun = state.quantity.is_known() && state.quantity.known() == 1
                         ? r.object
                         : lexicon.PluralOf(r.object);
  if (r.locus.kind == LocusKind::kPlace) {
    std::string be = r.time == Time::kInitial ? "were" : "are";
    return "There " + be + " " + amount + " " + noun + " in the " +
           r.locus.name;
  }
  std::string owner = r.locus.entity_kind == EntityKind::kProperName
                          ? r.locus.name
                          : "The " + lexicon.PluralOf(r.locus.name);
  return owner + (r.time == Time::kInitial ? " had " : " has ") + amount +
         " " + noun;
}

}  // namespace schemarith
