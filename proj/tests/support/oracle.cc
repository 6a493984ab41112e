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

#include "support/oracle.h"

#include <algorithm>
#include <vector>

namespace schemarith::testing {

namespace {

Amount ValueOf(const Quantity& q, const std::map<Quantity, Amount>& value) {
  return q.is_known() ? q.known() : value.at(q);
}

struct Search {
  const Lsi& lsi;
  Amount bound;
  int64_t cap;
  std::vector<Quantity> order;
  // checks[i]: instantiations whose last unknown is order[i].
  std::vector<std::vector<size_t>> checks;
  std::map<Quantity, Amount> value;
  OracleResult result;

  void Run(size_t depth) {
    if (result.solutions >= cap) return;
    if (depth == order.size()) {
      if (result.solutions == 0) result.first = value;
      ++result.solutions;
      result.question_values.insert(value.count(Quantity::Ask())
                                        ? value.at(Quantity::Ask())
                                        : -1);
      return;
    }
    for (Amount v = 0; v <= bound; ++v) {
      value[order[depth]] = v;
      bool ok = true;
      for (size_t i : checks[depth]) {
        if (!Holds(lsi[i], value)) {
          ok = false;
          break;
        }
      }
      if (ok) Run(depth + 1);
    }
    value.erase(order[depth]);
  }
};

}  // namespace

bool Holds(const SchemaInstantiation& si,
           const std::map<Quantity, Amount>& value) {
  Amount x = ValueOf(si.quantities[0], value);
  Amount y = ValueOf(si.quantities[1], value);
  Amount z = ValueOf(si.quantities[2], value);
  switch (si.kind) {
    case SchemaKind::kChange:
      // (initially, delta, finally)
      return si.change.increases() ? x + y == z : x - y == z;
    case SchemaKind::kMore:
      // left has `by` more than right
      return x - y == z;
    case SchemaKind::kLess:
      return y - x == z;
    case SchemaKind::kCombine:
      return x + y == z;
  }
  return false;
}

OracleResult Enumerate(const Lsi& lsi, Amount bound, int64_t cap) {
  Search s{lsi, bound, cap, {}, {}, {}, {}};
  // Greedy order: next the unknown that closes the most instantiations, so
  // that pruning starts early. Any order gives the same solution set.
  std::set<Quantity> all;
  for (const auto& si : lsi)
    for (const auto& q : si.quantities)
      if (q.is_unknown()) all.insert(q);
  std::set<Quantity> placed;
  auto open_count = [&](const SchemaInstantiation& si) {
    int n = 0;
    for (const auto& q : si.quantities)
      n += q.is_unknown() && !placed.count(q);
    return n;
  };
  while (placed.size() < all.size()) {
    Quantity best;
    int best_score = -1;
    for (const Quantity& q : all) {
      if (placed.count(q)) continue;
      int score = 0;
      for (const auto& si : lsi) {
        bool has = std::find(si.quantities.begin(), si.quantities.end(), q) !=
                   si.quantities.end();
        if (has) score += open_count(si) == 1 ? 100 : 1;
      }
      if (score > best_score) best = q, best_score = score;
    }
    placed.insert(best);
    s.order.push_back(best);
  }
  s.checks.resize(s.order.size());
  std::vector<size_t> no_unknowns;
  for (size_t i = 0; i < lsi.size(); ++i) {
    int last = -1;
    for (const auto& q : lsi[i].quantities) {
      if (!q.is_unknown()) continue;
      auto it = std::find(s.order.begin(), s.order.end(), q);
      last = std::max(last, static_cast<int>(it - s.order.begin()));
    }
    if (last < 0) {
      no_unknowns.push_back(i);
    } else {
      s.checks[last].push_back(i);
    }
  }
  for (size_t i : no_unknowns)
    if (!Holds(lsi[i], s.value)) return s.result;
  s.Run(0);
  return s.result;
}

}  // namespace schemarith::testing
