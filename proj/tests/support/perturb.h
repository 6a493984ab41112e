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

// Text perturbations for robustness tests: sentence transpositions and
// irrelevant state sentences about entities the problem never mentions.

#ifndef SCHEMARITH_TESTS_SUPPORT_PERTURB_H_
#define SCHEMARITH_TESTS_SUPPORT_PERTURB_H_

#include <random>
#include <set>
#include <string>

#include "schemarith/lexicon.h"
#include "schemarith/pipeline.h"

namespace schemarith::testing {

bool PronounFree(const std::string& text, const Lexicon& lexicon);

// The sentences of `text` in a random order.
std::string Permute(const std::string& text, std::mt19937& rng);

// Inserts `count` state sentences at random positions. Each names a person
// or place absent from `text`; objects are drawn from the problem's own
// object classes and two unrelated ones.
std::string AddExtraneous(const std::string& text, int count,
                          const Lexicon& lexicon, std::mt19937& rng);

// Equations of the analysis in renaming-invariant form.
std::multiset<std::string> CanonicalEquations(const Analysis& analysis);

}  // namespace schemarith::testing

#endif  // SCHEMARITH_TESTS_SUPPORT_PERTURB_H_
