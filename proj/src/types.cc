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

#include "schemarith/types.h"

namespace schemarith {

const char* CodeName(ProblemError::Code code) {
  using C = ProblemError::Code;
  switch (code) {
    case C::kEmptyInput: return "EmptyInput";
    case C::kParseError: return "ParseError";
    case C::kUnknownWord: return "UnknownWord";
    case C::kUnknownVerb: return "UnknownVerb";
    case C::kNoQuestion: return "NoQuestion";
    case C::kMultipleQuestions: return "MultipleQuestions";
    case C::kDataConflict: return "DataConflict";
    case C::kUnresolvableCombine: return "UnresolvableCombine";
    case C::kMalformedLsi: return "MalformedLSI";
    case C::kLexiconFormat: return "LexiconFormat";
  }
  return "Unknown";
}

std::string ToString(Time t) {
  return t == Time::kInitial ? "initial" : "final";
}

std::string ToString(Direction d) {
  switch (d) {
    case Direction::kIn: return "in";
    case Direction::kOut: return "out";
    case Direction::kCreate: return "create";
    case Direction::kTerminate: return "terminate";
  }
  return "?";
}

std::string ToString(LocusKind k) {
  return k == LocusKind::kOwnership ? "ownership" : "place";
}

// Schema names as printed in the formula table.
std::string ToString(const ChangeKind& k) {
  std::string where = k.locus_kind == LocusKind::kOwnership ? "Ownership"
                                                            : "Place";
  switch (k.direction) {
    case Direction::kIn: return "Transfer-In-" + where;
    case Direction::kOut: return "Transfer-Out-" + where;
    case Direction::kCreate: return "Creation-" + where;
    case Direction::kTerminate: return "Termination-" + where;
  }
  return "?";
}

std::string ToString(const Locus& l) {
  return (l.kind == LocusKind::kOwnership ? "Own(" : "Place(") + l.name + ")";
}

}  // namespace schemarith
