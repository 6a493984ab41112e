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

// The proposition store of one problem: states keyed by (locus, object,
// time), elementary change events produced by splitting compound verbs,
// and the comparison/combination statements awaiting instantiation.

#ifndef SCHEMARITH_DISCOURSE_H_
#define SCHEMARITH_DISCOURSE_H_

#include <optional>
#include <string>
#include <vector>

#include "schemarith/lexicon.h"
#include "schemarith/parser.h"
#include "schemarith/types.h"

namespace schemarith {

struct ElementaryEvent {
  ChangeKind kind;
  Locus locus;
  ObjectClass object;
  Quantity delta;
  int seq = 0;
  int origin = 0;    // sentence index
  std::string verb;  // lemma of the verb it was split from
  bool operator==(const ElementaryEvent&) const = default;
};

struct StateEntry {
  StateRef ref;
  Quantity quantity;
  // True for states created to hold a fresh unknown ("Ruth has X candies").
  bool introduced = false;
  int sentence = -1;
};

struct VarInfo {
  std::string name;   // display name: X, Y, Z, ...
  std::string label;  // what it stands for; stable under sentence reordering
};

template <typename T>
struct Located {
  T value;
  int sentence = 0;
};

using StateHandle = size_t;

class PropositionStore {
 public:
  // Adds every parsed proposition, splitting change events into elementary
  // ones. Throws kDataConflict for two different amounts under one key and
  // kUnknownVerb for events whose verb has no classification.
  static PropositionStore Build(const std::vector<Proposition>& props,
                                const Lexicon& lexicon);

  // Returns the state stored under `ref`, or appends "locus has V objects"
  // with a fresh unknown V. Never unifies across time, locus or object.
  StateHandle LookupOrIntroduceState(const StateRef& ref);
  std::optional<StateHandle> FindState(const StateRef& ref) const;

  VarId NewVar(std::string label);

  const std::vector<StateEntry>& states() const { return states_; }
  const StateEntry& state(StateHandle h) const { return states_.at(h); }
  const std::vector<ElementaryEvent>& events() const { return events_; }
  const std::vector<Located<EventSurface>>& raw_events() const {
    return raw_events_;
  }
  const std::vector<Located<CompareSurface>>& compares() const {
    return compares_;
  }
  const std::vector<Located<CombineSurface>>& combines() const {
    return combines_;
  }
  const std::vector<VarInfo>& vars() const { return vars_; }
  int question_count() const;

  // "4", "X" or "?".
  std::string Name(const Quantity& q) const;
  // Like Name but Vars are replaced by their label.
  std::string Label(const Quantity& q) const;

 private:
  StateHandle AddState(const StateRef& ref, Quantity q, bool introduced,
                       int sentence);

  std::vector<StateEntry> states_;
  std::vector<ElementaryEvent> events_;
  std::vector<Located<EventSurface>> raw_events_;
  std::vector<Located<CompareSurface>> compares_;
  std::vector<Located<CombineSurface>> combines_;
  std::vector<VarInfo> vars_;
};

// The chain of changes on one (locus, object). Event i takes the amount from
// the state before it to the state after it; intermediates[i] sits between
// events i and i+1.
struct Timeline {
  Locus locus;
  ObjectClass object;
  std::optional<StateHandle> initial;
  std::optional<StateHandle> final;
  std::vector<ElementaryEvent> events;
  std::vector<VarId> intermediates;
};

// One elementary event per compound component whose participant is named;
// exactly one for an elementary verb. Throws kUnknownVerb.
std::vector<ElementaryEvent> SplitCompound(const EventSurface& event,
                                           const Lexicon& lexicon,
                                           int origin = 0);

// "3 candies were transferred from David".
std::string Canonicalize(const ElementaryEvent& event, const Lexicon& lexicon);

// The event as a sentence with an elementary verb: "David forfeited 3
// candies", "Ruth got 3 candies". Place changes use the canonical form.
std::string RenderElementary(const ElementaryEvent& event,
                             const Lexicon& lexicon);

// Groups events by (locus, object). Within a timeline, gains come before
// losses, then smaller deltas first, then text order; intermediate amounts
// therefore never drop below both endpoints.
std::vector<Timeline> BuildTimelines(PropositionStore& store);

// Table-style rendering of a state: "Ruth has X candies".
std::string RenderState(const StateEntry& state, const PropositionStore& store,
                        const Lexicon& lexicon);

// Stable description of a state key, used in Var labels.
std::string KeyLabel(const StateRef& ref);

}  // namespace schemarith

#endif  // SCHEMARITH_DISCOURSE_H_
