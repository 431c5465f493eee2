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

#ifndef HELIOTRACK_MTM_HPP
#define HELIOTRACK_MTM_HPP

#include <cstdint>
#include <optional>

#include "heliotrack/errors.hpp"
#include "heliotrack/rational.hpp"
#include "heliotrack/step_function.hpp"

namespace heliotrack {

// Minimum tracking motion: fewest collector movements that keep the
// irradiance inside [u1, u2] while the Sun sweeps from theta_s to omega_star.
struct MTMQuery {
  Rational u1;
  Rational u2;
  Rational theta_s = Rational(0);
  // Sweep budget in quantum units; defaults to the extent of f.
  std::optional<std::int64_t> omega_star;
};

struct MTMSolution {
  std::int64_t move_count = 0;
  Rational initial_dwell;  // l0: feasible run consumed before the first move
  Solution schedule;       // multiset of dwell intervals, one per movement
};

// Closed form: m = ceil((omega* - theta_s - l0) / len(t*)) where t* is the
// longest feasible run and l0 the feasible run from theta_s. The schedule is
// m-1 copies of t* plus one trailing sub-interval anchored at t*'s start, so
// the multiset keeps the solver O(n) regardless of m.
inline MTMSolution solve_mtm(const StepFunction& f, const MTMQuery& q) {
  if (q.u1 > q.u2) throw InvalidQueryError("band is empty (u1 > u2)");
  const std::int64_t omega = q.omega_star.value_or(f.extent());
  if (omega < 0 || omega > f.extent()) {
    throw InvalidQueryError("omega* must lie in [0, extent]");
  }
  if (q.theta_s < 0 || q.theta_s > omega) {
    throw InvalidQueryError("theta_s must lie in [0, omega*]");
  }

  MTMSolution out;
  out.initial_dwell = Rational(0);
  const Rational to_cover = Rational(omega) - q.theta_s;
  if (to_cover == 0) return out;

  Rational l0 = feasible_run_length_from(f, q.u1, q.u2, q.theta_s);
  if (l0 > to_cover) l0 = to_cover;
  out.initial_dwell = l0;
  const Rational remaining = to_cover - l0;
  if (remaining == 0) return out;

  std::optional<Interval> best = max_feasible_interval(f, q.u1, q.u2, omega);
  if (!best) {
    throw NoFeasibleIntervalError(
        "no step height lies in [" + format_rational(q.u1) + ", " +
        format_rational(q.u2) + "] but a movement is required");
  }
  const Rational run = best->length();
  out.move_count = ceil_to_int64(remaining / run);
  const Rational tail = remaining - run * (out.move_count - 1);
  if (tail == run) {
    out.schedule.add(*best, out.move_count);
  } else {
    if (out.move_count > 1) out.schedule.add(*best, out.move_count - 1);
    out.schedule.add(Interval(best->start, best->start + tail), 1);
  }
  out.schedule.sort_entries();
  return out;
}

}  // namespace heliotrack

#endif  // HELIOTRACK_MTM_HPP
