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

#ifndef HELIOTRACK_STEP_FUNCTION_HPP
#define HELIOTRACK_STEP_FUNCTION_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heliotrack/errors.hpp"
#include "heliotrack/rational.hpp"

namespace heliotrack {

// Piecewise-constant irradiance profile over the relative angle between the
// Sun and the collector. Step lengths are positive integers in quantum units,
// heights are non-negative rationals (ray-count rate per unit angle). The
// domain is [0, extent()) with edges at the cumulative step boundaries.
//
// Immutable after construction; every free function in this header is pure.
class StepFunction {
 public:
  StepFunction(std::vector<std::int64_t> step_lengths,
               std::vector<Rational> step_values, Rational quantum = Rational(1))
      : quantum_(std::move(quantum)),
        lengths_(std::move(step_lengths)),
        values_(std::move(step_values)) {
    if (lengths_.empty()) throw EmptyInputError("step function has no steps");
    if (lengths_.size() != values_.size()) {
      throw ValidationError("step lengths and values differ in count");
    }
    if (quantum_ <= 0) throw ValidationError("quantum must be positive");
    edges_.reserve(lengths_.size() + 1);
    prefix_.reserve(lengths_.size() + 1);
    edges_.push_back(0);
    prefix_.push_back(Rational(0));
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
      if (lengths_[i] < 1) throw ValidationError("step length must be >= 1");
      if (values_[i] < 0) throw ValidationError("step value must be >= 0");
      edges_.push_back(edges_.back() + lengths_[i]);
      prefix_.push_back(prefix_.back() + values_[i] * lengths_[i]);
    }
  }

  // Scales raw step lengths (degrees) onto the quantum grid. Every raw length
  // must be an integer multiple of the quantum within relative tolerance 1e-9.
  // Adjacent equal-valued steps are kept distinct so the caller's edge set is
  // preserved.
  static StepFunction quantize(const std::vector<Rational>& raw_lengths,
                               const std::vector<Rational>& raw_values,
                               const Rational& quantum) {
    if (raw_lengths.empty()) throw EmptyInputError("no raw steps");
    if (raw_lengths.size() != raw_values.size()) {
      throw ValidationError("raw lengths and values differ in count");
    }
    if (quantum <= 0) throw ValidationError("quantum must be positive");
    static const Rational kRelTol(1, 1000000000);
    std::vector<std::int64_t> lengths;
    lengths.reserve(raw_lengths.size());
    for (const Rational& raw : raw_lengths) {
      if (raw <= 0) throw ValidationError("raw step length must be positive");
      Rational ratio = raw / quantum;
      BigInt nearest = floor_big(ratio + Rational(1, 2));
      Rational miss = ratio - Rational(nearest);
      if (miss < 0) miss = -miss;
      if (nearest < 1 || miss > kRelTol * ratio) {
        throw NonCommensurateError("step length " + format_rational(raw) +
                                   " is not a multiple of quantum " +
                                   format_rational(quantum));
      }
      lengths.push_back(to_int64(nearest));
    }
    return StepFunction(std::move(lengths), raw_values, quantum);
  }

  std::size_t num_steps() const { return lengths_.size(); }
  std::int64_t extent() const { return edges_.back(); }
  const Rational& quantum() const { return quantum_; }
  const std::vector<std::int64_t>& step_lengths() const { return lengths_; }
  const std::vector<Rational>& step_values() const { return values_; }
  const std::vector<std::int64_t>& edges() const { return edges_; }
  std::int64_t step_length(std::size_t i) const { return lengths_[i]; }
  const Rational& step_value(std::size_t i) const { return values_[i]; }

  // Index of the step whose half-open span [edge(i), edge(i+1)) contains pos.
  std::size_t step_index_at(const Rational& pos) const {
    if (pos < 0 || pos >= extent()) {
      throw OutOfDomainError("position " + format_rational(pos) +
                             " outside [0, " + std::to_string(extent()) + ")");
    }
    // Find the last edge <= pos.
    auto it = std::upper_bound(edges_.begin(), edges_.end(), pos,
                               [](const Rational& p, std::int64_t e) {
                                 return p < e;
                               });
    return static_cast<std::size_t>(it - edges_.begin()) - 1;
  }

  const Rational& value_at(const Rational& pos) const {
    return values_[step_index_at(pos)];
  }

  bool is_edge(const Rational& pos) const {
    if (!is_integer(pos)) return false;
    if (pos < 0 || pos > extent()) return false;
    BigInt p = numerator(pos);
    return std::binary_search(edges_.begin(), edges_.end(),
                              to_int64(p));
  }

  // Area under the function over [0, pos].
  Rational area_to(const Rational& pos) const {
    if (pos < 0 || pos > extent()) {
      throw OutOfDomainError("position " + format_rational(pos) +
                             " outside [0, " + std::to_string(extent()) + "]");
    }
    if (pos == extent()) return prefix_.back();
    std::size_t i = step_index_at(pos);
    return prefix_[i] + values_[i] * (pos - edges_[i]);
  }

 private:
  Rational quantum_;
  std::vector<std::int64_t> lengths_;
  std::vector<Rational> values_;
  std::vector<std::int64_t> edges_;  // n+1 entries, edges_[0] = 0
  std::vector<Rational> prefix_;     // n+1 entries, area of the first i steps
};

// Half-open dwell [start, end) in quantum units. Endpoints may be fractional.
struct Interval {
  Rational start;
  Rational end;

  Interval() : start(0), end(0) {}
  Interval(Rational s, Rational e) : start(std::move(s)), end(std::move(e)) {
    if (start < 0 || end < start) {
      throw ValidationError("interval endpoints out of order");
    }
  }

  Rational length() const { return end - start; }
  bool empty() const { return start == end; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.start == b.start && a.end == b.end;
  }
  friend bool operator<(const Interval& a, const Interval& b) {
    if (a.start != b.start) return a.start < b.start;
    return a.end < b.end;
  }
};

inline std::string format_interval(const Interval& t) {
  return "[" + format_rational(t.start) + ", " + format_rational(t.end) + ")";
}

// A tracking plan: a multiset of dwell intervals with repetition counts.
// Zero-length intervals are representable but never count as movements.
struct Solution {
  struct Entry {
    Interval interval;
    std::int64_t count = 1;
  };

  std::vector<Entry> entries;

  void add(const Interval& t, std::int64_t count = 1) {
    if (count <= 0) throw ValidationError("entry count must be positive");
    for (Entry& e : entries) {
      if (e.interval == t) {
        e.count += count;
        return;
      }
    }
    entries.push_back({t, count});
  }

  Rational total_length() const {
    Rational sum(0);
    for (const Entry& e : entries) sum += e.interval.length() * e.count;
    return sum;
  }

  // Number of movements: zero-length dwells are excluded.
  std::int64_t cardinality() const {
    std::int64_t n = 0;
    for (const Entry& e : entries) {
      if (!e.interval.empty()) n += e.count;
    }
    return n;
  }

  void sort_entries() {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) {
                return a.interval < b.interval;
              });
  }
};

// Area below f over t (half-open overlap semantics), computed exactly.
inline Rational gain(const StepFunction& f, const Interval& t) {
  if (t.start < 0 || t.end > f.extent()) {
    throw OutOfDomainError("interval " + format_interval(t) +
                           " outside [0, " + std::to_string(f.extent()) + "]");
  }
  if (t.empty()) return Rational(0);
  return f.area_to(t.end) - f.area_to(t.start);
}

inline Rational total_gain(const StepFunction& f, const Solution& T) {
  Rational sum(0);
  for (const Solution::Entry& e : T.entries) {
    sum += gain(f, e.interval) * e.count;
  }
  return sum;
}

// Both endpoints on step edges.
inline bool is_discrete(const StepFunction& f, const Interval& t) {
  return f.is_edge(t.start) && f.is_edge(t.end);
}

// At least one endpoint on a step edge.
inline bool is_semi_discrete(const StepFunction& f, const Interval& t) {
  return f.is_edge(t.start) || f.is_edge(t.end);
}

// Steps that are local maxima, one representative (leftmost) index per
// plateau of equal positive values. f is treated as 0 outside its domain, so
// all-zero plateaus are never maxima. Indices are 0-based.
inline std::vector<std::size_t> local_maxima(const StepFunction& f) {
  const auto& v = f.step_values();
  std::vector<std::size_t> maxima;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j + 1 < v.size() && v[j + 1] == v[i]) ++j;
    const Rational left = i == 0 ? Rational(0) : v[i - 1];
    const Rational right = j + 1 == v.size() ? Rational(0) : v[j + 1];
    if (v[i] > 0 && left <= v[i] && v[i] >= right) maxima.push_back(i);
    i = j + 1;
  }
  return maxima;
}

inline bool is_unimodal(const StepFunction& f) {
  return local_maxima(f).size() == 1;
}

// Discrete interval containing at least one local-maximum step.
inline bool is_md(const StepFunction& f, const Interval& t) {
  if (!is_discrete(f, t)) return false;
  for (std::size_t i : local_maxima(f)) {
    if (t.start <= f.edges()[i] && f.edges()[i + 1] <= t.end) return true;
  }
  return false;
}

struct WindowResult {
  Interval window;
  Rational gain;
};

// Best window of a fixed (possibly fractional) length. The optimum is always
// attained by a window anchored at a step edge on at least one side, so only
// the <= 2(n+1) candidates {[e, e+l), [e-l, e)} need checking. Ties break to
// the smallest start.
inline WindowResult max_gain_window(const StepFunction& f, const Rational& l) {
  if (l <= 0) throw InvalidQueryError("window length must be positive");
  if (l > f.extent()) {
    throw LengthExceedsExtentError("window length " + format_rational(l) +
                                   " exceeds extent " +
                                   std::to_string(f.extent()));
  }
  std::optional<WindowResult> best;
  auto consider = [&](const Rational& start) {
    if (start < 0 || start + l > f.extent()) return;
    Interval w(start, start + l);
    Rational g = gain(f, w);
    if (!best || g > best->gain ||
        (g == best->gain && w.start < best->window.start)) {
      best = WindowResult{w, g};
    }
  };
  for (std::int64_t e : f.edges()) {
    consider(Rational(e));
    consider(Rational(e) - l);
  }
  return *best;  // e = 0 always yields a candidate since l <= extent
}

// G_l for every integer l in [0, omega_star], with a witness window per
// length. G_0 is 0 with an empty witness.
class GainProfile {
 public:
  struct Entry {
    Rational gain;
    Interval witness;
  };

  explicit GainProfile(std::vector<Entry> entries)
      : entries_(std::move(entries)) {}

  std::int64_t max_length() const {
    return static_cast<std::int64_t>(entries_.size()) - 1;
  }
  const Rational& gain(std::int64_t l) const { return entry(l).gain; }
  const Interval& witness(std::int64_t l) const { return entry(l).witness; }
  const Entry& entry(std::int64_t l) const {
    if (l < 0 || l > max_length()) {
      throw OutOfDomainError("gain profile has no length " +
                             std::to_string(l));
    }
    return entries_[static_cast<std::size_t>(l)];
  }

 private:
  std::vector<Entry> entries_;
};

inline GainProfile gain_profile(const StepFunction& f,
                                std::int64_t omega_star) {
  if (omega_star < 0) throw InvalidQueryError("omega* must be >= 0");
  if (omega_star > f.extent()) {
    throw LengthExceedsExtentError("omega* " + std::to_string(omega_star) +
                                   " exceeds extent " +
                                   std::to_string(f.extent()));
  }
  std::vector<GainProfile::Entry> entries;
  entries.reserve(static_cast<std::size_t>(omega_star) + 1);
  entries.push_back({Rational(0), Interval()});
  for (std::int64_t l = 1; l <= omega_star; ++l) {
    WindowResult w = max_gain_window(f, Rational(l));
    entries.push_back({w.gain, w.window});
  }
  return GainProfile(std::move(entries));
}

// Longest maximal run of consecutive steps with heights inside [u1, u2],
// optionally clipped to [0, domain_end]. Ties break leftmost. Returns absent
// when no positive-length feasible run exists.
inline std::optional<Interval> max_feasible_interval(
    const StepFunction& f, const Rational& u1, const Rational& u2,
    std::optional<std::int64_t> domain_end = std::nullopt) {
  if (u1 > u2) throw InvalidQueryError("band is empty (u1 > u2)");
  const std::int64_t limit =
      domain_end ? std::min(*domain_end, f.extent()) : f.extent();
  std::optional<Interval> best;
  std::size_t i = 0;
  while (i < f.num_steps()) {
    if (f.step_value(i) < u1 || f.step_value(i) > u2) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < f.num_steps() && f.step_value(j + 1) >= u1 &&
           f.step_value(j + 1) <= u2) {
      ++j;
    }
    std::int64_t lo = f.edges()[i];
    std::int64_t hi = std::min(f.edges()[j + 1], limit);
    if (hi > lo && (!best || Rational(hi - lo) > best->length())) {
      best = Interval(Rational(lo), Rational(hi));
    }
    i = j + 1;
  }
  return best;
}

// Length of the feasible run to the right of pos (0 when f(pos) violates the
// band). pos may be fractional; pos == extent yields 0.
inline Rational feasible_run_length_from(const StepFunction& f,
                                         const Rational& u1,
                                         const Rational& u2,
                                         const Rational& pos) {
  if (u1 > u2) throw InvalidQueryError("band is empty (u1 > u2)");
  if (pos < 0 || pos > f.extent()) {
    throw OutOfDomainError("position outside [0, extent]");
  }
  if (pos == f.extent()) return Rational(0);
  std::size_t i = f.step_index_at(pos);
  if (f.step_value(i) < u1 || f.step_value(i) > u2) return Rational(0);
  std::size_t j = i;
  while (j + 1 < f.num_steps() && f.step_value(j + 1) >= u1 &&
         f.step_value(j + 1) <= u2) {
    ++j;
  }
  return Rational(f.edges()[j + 1]) - pos;
}

}  // namespace heliotrack

#endif  // HELIOTRACK_STEP_FUNCTION_HPP
