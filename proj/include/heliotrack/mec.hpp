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

#ifndef HELIOTRACK_MEC_HPP
#define HELIOTRACK_MEC_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "heliotrack/errors.hpp"
#include "heliotrack/rational.hpp"
#include "heliotrack/step_function.hpp"

namespace heliotrack {

// Maximal energy collection: best total gain using at most m dwell intervals
// of total length at most omega_star.

// A discrete interval that contains at least one local-maximum step.
struct MDInterval {
  Interval interval;
  std::int64_t length = 0;
  Rational gain;
};

// Candidate intervals for the discrete DP, enumerated in (start, end) order.
struct MDIntervalSet {
  std::vector<MDInterval> items;
};

// All discrete edge-pair intervals of length <= omega_star that contain a
// local-maximum step, with gains precomputed. At most n(n+1)/2 members.
// Dominated members are kept; they never change the optimum.
inline MDIntervalSet enumerate_md_intervals(const StepFunction& f,
                                            std::int64_t omega_star) {
  if (omega_star < 0) throw InvalidQueryError("omega* must be >= 0");
  if (omega_star > f.extent()) {
    throw LengthExceedsExtentError("omega* " + std::to_string(omega_star) +
                                   " exceeds extent " +
                                   std::to_string(f.extent()));
  }
  const std::size_t n = f.num_steps();
  // maxima_before[i] = number of local-maximum steps with index < i.
  std::vector<std::int64_t> maxima_before(n + 1, 0);
  for (std::size_t k : local_maxima(f)) maxima_before[k + 1] = 1;
  for (std::size_t i = 1; i <= n; ++i) maxima_before[i] += maxima_before[i - 1];

  MDIntervalSet out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b <= n; ++b) {
      const std::int64_t length = f.edges()[b] - f.edges()[a];
      if (length > omega_star) break;  // edges increase with b
      if (maxima_before[b] - maxima_before[a] == 0) continue;
      Interval t(Rational(f.edges()[a]), Rational(f.edges()[b]));
      out.items.push_back({t, length, gain(f, t)});
    }
  }
  return out;
}

// Production DP table D'[j][l]: best gain with at most j md-intervals of
// total length at most l, plus a per-cell back-reference for reconstruction.
class DPTable {
 public:
  // Back-reference codes; non-negative values index the candidate set.
  static constexpr std::int32_t kChoiceBase = -3;        // a zero boundary cell
  static constexpr std::int32_t kChoicePrevMove = -1;    // copied from [j-1][l]
  static constexpr std::int32_t kChoicePrevLength = -2;  // copied from [j][l-1]

  DPTable(std::int64_t j_max, std::int64_t l_max)
      : j_max_(j_max),
        l_max_(l_max),
        values_(static_cast<std::size_t>((j_max + 1) * (l_max + 1))),
        choices_(values_.size(), kChoiceBase) {}

  std::int64_t j_max() const { return j_max_; }
  std::int64_t l_max() const { return l_max_; }

  const Rational& value(std::int64_t j, std::int64_t l) const {
    return values_[index(j, l)];
  }
  std::int32_t choice(std::int64_t j, std::int64_t l) const {
    return choices_[index(j, l)];
  }

  void set(std::int64_t j, std::int64_t l, Rational value,
           std::int32_t choice) {
    const std::size_t i = index(j, l);
    values_[i] = std::move(value);
    choices_[i] = choice;
  }

 private:
  std::size_t index(std::int64_t j, std::int64_t l) const {
    if (j < 0 || j > j_max_ || l < 0 || l > l_max_) {
      throw OutOfDomainError("DP index out of range");
    }
    return static_cast<std::size_t>(j * (l_max_ + 1) + l);
  }

  std::int64_t j_max_;
  std::int64_t l_max_;
  std::vector<Rational> values_;
  std::vector<std::int32_t> choices_;
};

// Fills the production table:
//   D'[j][l] = max( D'[j-1][l], D'[j][l-1],
//                   max over b with len(b) <= l of gain(b) + D'[j-1][l-len(b)] )
// with zero boundaries. Interval reuse is unbounded across j. Only the best
// candidate of each length can ever win a cell, so candidates are collapsed
// per length first; cell values are unchanged by the collapse.
// Ties prefer not using an interval, then shorter candidates.
inline DPTable dp_discrete(const MDIntervalSet& B, std::int64_t j_max,
                           std::int64_t l_max) {
  if (j_max < 0 || l_max < 0) {
    throw InvalidQueryError("DP dimensions must be >= 0");
  }
  DPTable table(j_max, l_max);

  // best_for_length[L] = candidate index with maximal gain among members of
  // length L; enumeration order breaks gain ties toward the smallest start.
  std::vector<std::int32_t> best_for_length(
      static_cast<std::size_t>(l_max) + 1, -1);
  for (std::size_t idx = 0; idx < B.items.size(); ++idx) {
    const MDInterval& item = B.items[idx];
    if (item.length < 1) throw ValidationError("md-interval of length 0");
    if (item.length > l_max) continue;
    std::int32_t& slot = best_for_length[static_cast<std::size_t>(item.length)];
    if (slot < 0 || item.gain > B.items[static_cast<std::size_t>(slot)].gain) {
      slot = static_cast<std::int32_t>(idx);
    }
  }
  std::vector<std::pair<std::int64_t, std::int32_t>> candidates;
  for (std::int64_t len = 1; len <= l_max; ++len) {
    if (best_for_length[static_cast<std::size_t>(len)] >= 0) {
      candidates.emplace_back(len,
                              best_for_length[static_cast<std::size_t>(len)]);
    }
  }

  for (std::int64_t j = 1; j <= j_max; ++j) {
    for (std::int64_t l = 1; l <= l_max; ++l) {
      Rational best = table.value(j - 1, l);
      std::int32_t choice = DPTable::kChoicePrevMove;
      if (table.value(j, l - 1) > best) {
        best = table.value(j, l - 1);
        choice = DPTable::kChoicePrevLength;
      }
      for (const auto& [len, idx] : candidates) {
        if (len > l) break;
        Rational cand =
            B.items[static_cast<std::size_t>(idx)].gain + table.value(j - 1, l - len);
        if (cand > best) {
          best = std::move(cand);
          choice = idx;
        }
      }
      table.set(j, l, std::move(best), choice);
    }
  }
  return table;
}

// Literal three-index recurrence, kept as a verification reference:
//   D[i][j][l] = 0                                  if 0 in {i, j, l}
//              = D[i-1][j][l]                       if l < len(b_i)
//              = max(D[i-1][j][l],
//                    gain(b_i) + D[i][j-1][l-len(b_i)])  otherwise.
// Memory is cubic; guarded to small instances.
class DP3Table {
 public:
  DP3Table(std::size_t i_max, std::int64_t j_max, std::int64_t l_max)
      : i_max_(i_max), j_max_(j_max), l_max_(l_max),
        values_((i_max + 1) * static_cast<std::size_t>(j_max + 1) *
                static_cast<std::size_t>(l_max + 1)) {}

  std::size_t i_max() const { return i_max_; }
  std::int64_t j_max() const { return j_max_; }
  std::int64_t l_max() const { return l_max_; }

  const Rational& value(std::size_t i, std::int64_t j, std::int64_t l) const {
    return values_[index(i, j, l)];
  }
  Rational& cell(std::size_t i, std::int64_t j, std::int64_t l) {
    return values_[index(i, j, l)];
  }

 private:
  std::size_t index(std::size_t i, std::int64_t j, std::int64_t l) const {
    if (i > i_max_ || j < 0 || j > j_max_ || l < 0 || l > l_max_) {
      throw OutOfDomainError("DP index out of range");
    }
    return (i * static_cast<std::size_t>(j_max_ + 1) +
            static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(l_max_ + 1) +
           static_cast<std::size_t>(l);
  }

  std::size_t i_max_;
  std::int64_t j_max_;
  std::int64_t l_max_;
  std::vector<Rational> values_;
};

inline DP3Table dp_discrete_3d(const MDIntervalSet& B, std::int64_t j_max,
                               std::int64_t l_max) {
  if (j_max < 0 || l_max < 0) {
    throw InvalidQueryError("DP dimensions must be >= 0");
  }
  constexpr std::size_t kMaxCells = 5'000'000;
  const std::size_t cells = (B.items.size() + 1) *
                            static_cast<std::size_t>(j_max + 1) *
                            static_cast<std::size_t>(l_max + 1);
  if (cells > kMaxCells) {
    throw InstanceTooLargeError("3D verification table would need " +
                                std::to_string(cells) + " cells");
  }
  DP3Table d(B.items.size(), j_max, l_max);
  for (std::size_t i = 1; i <= B.items.size(); ++i) {
    const MDInterval& b = B.items[i - 1];
    for (std::int64_t j = 1; j <= j_max; ++j) {
      for (std::int64_t l = 1; l <= l_max; ++l) {
        if (l < b.length) {
          d.cell(i, j, l) = d.value(i - 1, j, l);
        } else {
          Rational use = b.gain + d.value(i, j - 1, l - b.length);
          const Rational& skip = d.value(i - 1, j, l);
          d.cell(i, j, l) = std::max(skip, use);
        }
      }
    }
  }
  return d;
}

struct CombineResult {
  Rational gain;              // I*
  std::int64_t split_length;  // l*: budget given to the discrete part
};

// I* = max over integer l of D'[j_max][l] + G(omega* - l); smallest
// maximizing l wins. Monotonicity of D' in l absorbs shorter-than-l
// discrete parts.
inline CombineResult combine(const DPTable& D, const GainProfile& G,
                             std::int64_t omega_star) {
  if (omega_star < 0 || D.l_max() < omega_star ||
      G.max_length() < omega_star) {
    throw InvalidQueryError("combine needs tables covering [0, omega*]");
  }
  CombineResult best{D.value(D.j_max(), 0) + G.gain(omega_star), 0};
  for (std::int64_t l = 1; l <= omega_star; ++l) {
    Rational cand = D.value(D.j_max(), l) + G.gain(omega_star - l);
    if (cand > best.gain) best = {std::move(cand), l};
  }
  return best;
}

// Walks the back-references from D'[j_max][split] collecting md-intervals,
// then appends the profile witness for the remaining length when it
// contributes gain. Throws if the rebuilt plan does not reproduce the table
// value exactly.
inline Solution reconstruct(const DPTable& D, const MDIntervalSet& B,
                            std::int64_t split_length, const GainProfile& G,
                            std::int64_t omega_star) {
  if (split_length < 0 || split_length > D.l_max() ||
      split_length > omega_star) {
    throw InvalidQueryError("split length out of range");
  }
  Solution plan;
  Rational collected(0);
  std::int64_t j = D.j_max();
  std::int64_t l = split_length;
  while (j > 0 && l > 0) {
    const std::int32_t choice = D.choice(j, l);
    if (choice == DPTable::kChoiceBase) break;
    if (choice == DPTable::kChoicePrevMove) {
      --j;
    } else if (choice == DPTable::kChoicePrevLength) {
      --l;
    } else if (choice >= 0 &&
               choice < static_cast<std::int32_t>(B.items.size())) {
      const MDInterval& b = B.items[static_cast<std::size_t>(choice)];
      if (b.length > l) {
        throw InternalInconsistencyError("back-reference longer than budget");
      }
      plan.add(b.interval);
      collected += b.gain;
      --j;
      l -= b.length;
    } else {
      throw InternalInconsistencyError("corrupt DP back-reference");
    }
  }
  if (collected != D.value(D.j_max(), split_length)) {
    throw InternalInconsistencyError(
        "reconstructed discrete gain does not match the DP value");
  }
  const std::int64_t rest = omega_star - split_length;
  if (rest > 0 && G.gain(rest) > 0) {
    plan.add(G.witness(rest));
  }
  plan.sort_entries();
  return plan;
}

struct MECSolution {
  Rational total_gain;
  Solution intervals;
  Rational used_length;
  // Budget handed to the discrete DP part; absent for greedy/unimodal plans.
  std::optional<std::int64_t> chosen_split;
};

// Unimodal shortcut: m copies of the best window of length omega*/m
// (fractional lengths stay exact rationals).
inline MECSolution solve_mec_unimodal(const StepFunction& f, std::int64_t m,
                                      const Rational& omega_star) {
  if (m < 1) throw InvalidQueryError("m must be >= 1");
  if (omega_star <= 0) throw InvalidQueryError("omega* must be positive");
  if (omega_star > f.extent()) {
    throw LengthExceedsExtentError("omega* exceeds extent");
  }
  if (!is_unimodal(f)) {
    throw NotUnimodalError("step function is not unimodal");
  }
  WindowResult w = max_gain_window(f, omega_star / m);
  MECSolution out;
  out.total_gain = w.gain * m;
  out.intervals.add(w.window, m);
  out.used_length = omega_star;
  return out;
}

// The unimodal recipe applied regardless of modality; suboptimal on k-modal
// profiles but a useful experimental baseline.
inline MECSolution greedy_baseline(const StepFunction& f, std::int64_t m,
                                   const Rational& omega_star) {
  if (m < 1) throw InvalidQueryError("m must be >= 1");
  if (omega_star <= 0) throw InvalidQueryError("omega* must be positive");
  if (omega_star > f.extent()) {
    throw LengthExceedsExtentError("omega* exceeds extent");
  }
  WindowResult w = max_gain_window(f, omega_star / m);
  MECSolution out;
  out.total_gain = w.gain * m;
  out.intervals.add(w.window, m);
  out.used_length = omega_star;
  return out;
}

// Gain of a tracker that moves once per quantum: omega* unit dwells at the
// best relative offset.
inline Rational csp_track_gain(const StepFunction& f, std::int64_t omega_star) {
  if (omega_star < 1) throw InvalidQueryError("omega* must be >= 1");
  if (omega_star > f.extent()) {
    throw LengthExceedsExtentError("omega* exceeds extent");
  }
  return max_gain_window(f, Rational(1)).gain * omega_star;
}

struct MECOptions {
  // Use the O(n) unimodal shortcut when the profile is unimodal.
  bool use_unimodal_shortcut = false;
  // Cross-check the production table against the cubic reference form.
  bool verify_3d = false;
};

inline MECSolution solve_mec(const StepFunction& f, std::int64_t m,
                             std::int64_t omega_star, MECOptions opts = {}) {
  if (m < 1) throw InvalidQueryError("m must be >= 1");
  if (omega_star < 1) throw InvalidQueryError("omega* must be >= 1");
  if (omega_star > f.extent()) {
    throw LengthExceedsExtentError("omega* " + std::to_string(omega_star) +
                                   " exceeds extent " +
                                   std::to_string(f.extent()));
  }
  if (opts.use_unimodal_shortcut && is_unimodal(f)) {
    return solve_mec_unimodal(f, m, Rational(omega_star));
  }
  MDIntervalSet B = enumerate_md_intervals(f, omega_star);
  DPTable D = dp_discrete(B, m - 1, omega_star);
  if (opts.verify_3d) {
    DP3Table ref = dp_discrete_3d(B, m - 1, omega_star);
    for (std::int64_t j = 0; j <= m - 1; ++j) {
      for (std::int64_t l = 0; l <= omega_star; ++l) {
        if (ref.value(B.items.size(), j, l) != D.value(j, l)) {
          throw InternalInconsistencyError(
              "2D table disagrees with the reference 3D recurrence");
        }
      }
    }
  }
  GainProfile G = gain_profile(f, omega_star);
  CombineResult top = combine(D, G, omega_star);
  Solution plan = reconstruct(D, B, top.split_length, G, omega_star);
  if (total_gain(f, plan) != top.gain) {
    throw InternalInconsistencyError(
        "reconstructed plan does not reproduce the optimal gain");
  }
  MECSolution out;
  out.total_gain = top.gain;
  out.intervals = std::move(plan);
  out.used_length = out.intervals.total_length();
  out.chosen_split = top.split_length;
  return out;
}

// One record per movement: the cumulative Sun displacement at which the dwell
// begins. A trailing record with no dwell marks idle budget.
struct ScheduleEntry {
  Rational displacement;
  std::optional<Interval> dwell;
  Rational duration;
};

inline std::vector<ScheduleEntry> emit_schedule(const Solution& T,
                                                const Rational& omega_star,
                                                const Rational& theta_s =
                                                    Rational(0)) {
  if (theta_s < 0 || theta_s > omega_star) {
    throw InvalidQueryError("theta_s must lie in [0, omega*]");
  }
  const Rational budget = omega_star - theta_s;
  if (T.total_length() > budget) {
    throw BudgetExceededError("plan length " +
                              format_rational(T.total_length()) +
                              " exceeds displacement budget " +
                              format_rational(budget));
  }
  Solution sorted = T;
  sorted.sort_entries();
  std::vector<ScheduleEntry> schedule;
  Rational at(0);
  for (const Solution::Entry& e : sorted.entries) {
    if (e.interval.empty()) continue;
    for (std::int64_t k = 0; k < e.count; ++k) {
      schedule.push_back({at, e.interval, e.interval.length()});
      at += e.interval.length();
    }
  }
  if (at < budget) {
    schedule.push_back({at, std::nullopt, budget - at});
  }
  return schedule;
}

}  // namespace heliotrack

#endif  // HELIOTRACK_MEC_HPP
