// Copyright 2026 The Heliotrack Authors
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

#ifndef HELIOTRACK_ORACLE_HPP
#define HELIOTRACK_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "heliotrack/errors.hpp"
#include "heliotrack/rational.hpp"
#include "heliotrack/step_function.hpp"

namespace heliotrack {

// Independent brute-force references. Deliberately naive: these are the
// ground truth the solvers are checked against, so they share no search
// strategy with the DP. Guard rails reject instances beyond desk scale.

struct BruteForceMECResult {
  Rational gain;
  Solution witness;
};

// Exhaustive search over multisets of at most m integer-endpoint intervals
// with total length at most omega_star. Restricting endpoints to integers is
// lossless: an optimal solution exists whose intervals are discrete except
// for one edge-anchored interval, and since gain is nondecreasing in length
// that one may take the full remaining integer budget. The witness is
// deterministic (first optimum in lexicographic enumeration order).
inline BruteForceMECResult brute_force_mec(const StepFunction& f,
                                           std::int64_t m,
                                           std::int64_t omega_star) {
  if (m < 0 || omega_star < 0) {
    throw InvalidQueryError("m and omega* must be >= 0");
  }
  if (omega_star > f.extent()) {
    throw InvalidQueryError("omega* exceeds extent");
  }
  if (f.num_steps() > 8 || f.extent() > 16 || m > 5 || omega_star > 12) {
    throw InstanceTooLargeError(
        "brute-force MEC accepts n <= 8, extent <= 16, m <= 5, omega* <= 12");
  }

  struct Candidate {
    Interval interval;
    std::int64_t length;
    Rational gain;
  };
  std::vector<Candidate> candidates;
  for (std::int64_t a = 0; a < f.extent(); ++a) {
    for (std::int64_t b = a + 1; b <= f.extent() && b - a <= omega_star; ++b) {
      Interval t{Rational(a), Rational(b)};
      candidates.push_back({t, b - a, gain(f, t)});
    }
  }

  Rational best_gain(0);
  std::vector<std::size_t> best_pick;
  std::vector<std::size_t> pick;

  // Non-decreasing candidate indices enumerate each multiset exactly once,
  // in lexicographic order.
  auto search = [&](auto&& self, std::size_t from, std::int64_t moves_left,
                    std::int64_t budget_left, const Rational& acc) -> void {
    if (acc > best_gain) {
      best_gain = acc;
      best_pick = pick;
    }
    if (moves_left == 0 || budget_left == 0) return;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      if (candidates[i].length > budget_left) continue;
      pick.push_back(i);
      self(self, i, moves_left - 1, budget_left - candidates[i].length,
           acc + candidates[i].gain);
      pick.pop_back();
    }
  };
  search(search, 0, m, omega_star, Rational(0));

  BruteForceMECResult out;
  out.gain = best_gain;
  for (std::size_t i : best_pick) out.witness.add(candidates[i].interval);
  out.witness.sort_entries();
  return out;
}

struct KnapsackItem {
  std::int64_t weight = 0;
  Rational profit;
};

// Unbounded knapsack instance: each item may be used any number of times.
struct KnapsackInstance {
  std::vector<KnapsackItem> items;
  std::int64_t capacity = 0;

  void validate() const {
    if (items.empty()) throw ValidationError("knapsack instance has no items");
    if (capacity < 1) throw ValidationError("capacity must be >= 1");
    for (const KnapsackItem& item : items) {
      if (item.weight < 1) throw ValidationError("item weight must be >= 1");
      if (item.profit <= 0) throw ValidationError("item profit must be > 0");
    }
  }
};

struct UKPResult {
  Rational profit;
  std::vector<std::int64_t> counts;
};

// Exhaustive enumeration of count vectors. Ties keep the lexicographically
// smallest counts.
inline UKPResult brute_force_ukp(const KnapsackInstance& k) {
  k.validate();
  double combinations = 1;
  for (const KnapsackItem& item : k.items) {
    combinations *= static_cast<double>(k.capacity / item.weight + 1);
    if (combinations > 1e7) {
      throw InstanceTooLargeError("too many count vectors to enumerate");
    }
  }

  UKPResult best{Rational(0), std::vector<std::int64_t>(k.items.size(), 0)};
  std::vector<std::int64_t> counts(k.items.size(), 0);
  auto enumerate = [&](auto&& self, std::size_t item, std::int64_t weight_left,
                       const Rational& acc) -> void {
    if (item == k.items.size()) {
      if (acc > best.profit) best = {acc, counts};
      return;
    }
    const std::int64_t max_count = weight_left / k.items[item].weight;
    for (std::int64_t c = 0; c <= max_count; ++c) {
      counts[item] = c;
      self(self, item + 1, weight_left - c * k.items[item].weight,
           acc + k.items[item].profit * c);
    }
    counts[item] = 0;
  };
  enumerate(enumerate, 0, k.capacity, Rational(0));
  return best;
}

struct MECInstance {
  StepFunction f;
  std::int64_t m = 0;
  std::int64_t omega_star = 0;
};

// Builds the energy-collection instance equivalent to an unbounded knapsack:
// item j becomes a step of length w_j and height A_j/w_j (so its full gain is
// exactly A_j), consecutive items are separated by zero-height steps of
// length W+1 (any discrete interval across a boundary then exceeds the
// budget), omega* = W, and m = sum of floor(W/w_j).
inline MECInstance knapsack_to_mec(const KnapsackInstance& k) {
  k.validate();
  std::vector<std::int64_t> lengths;
  std::vector<Rational> values;
  std::int64_t m = 0;
  for (std::size_t j = 0; j < k.items.size(); ++j) {
    if (j > 0) {
      lengths.push_back(k.capacity + 1);
      values.push_back(Rational(0));
    }
    lengths.push_back(k.items[j].weight);
    values.push_back(k.items[j].profit / k.items[j].weight);
    m += k.capacity / k.items[j].weight;
  }
  return MECInstance{
      StepFunction(std::move(lengths), std::move(values), Rational(1)), m,
      k.capacity};
}

}  // namespace heliotrack

#endif  // HELIOTRACK_ORACLE_HPP
