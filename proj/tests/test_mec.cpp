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

#include <catch2/catch_amalgamated.hpp>

#include "heliotrack/mec.hpp"

#include <vector>

#include "heliotrack/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/test_oracles.hpp"

using namespace heliotrack;
using testsupport::Rng;

namespace {

Rational R(std::int64_t num, std::int64_t den = 1) {
  return Rational(num, den);
}

// At most one interval may be non-discrete, and that one must still be
// anchored at an edge.
bool witness_structure_ok(const StepFunction& f, const Solution& T) {
  int non_discrete = 0;
  for (const Solution::Entry& e : T.entries) {
    if (!is_discrete(f, e.interval)) {
      non_discrete += static_cast<int>(e.count);
      if (!is_semi_discrete(f, e.interval)) return false;
    }
  }
  return non_discrete <= 1;
}

}  // namespace

TEST_CASE("md-interval enumeration filters edge pairs", "[mec]") {
  SECTION("spike and plateau") {
    MDIntervalSet B = enumerate_md_intervals(testsupport::spike_and_plateau(), 6);
    REQUIRE(B.items.size() == 3);
    CHECK(B.items[0].interval == Interval(R(0), R(1)));
    CHECK(B.items[0].gain == 10);
    CHECK(B.items[1].interval == Interval(R(0), R(6)));
    CHECK(B.items[1].gain == 10);
    CHECK(B.items[2].interval == Interval(R(6), R(10)));
    CHECK(B.items[2].gain == 16);
  }
  SECTION("small hill") {
    MDIntervalSet B = enumerate_md_intervals(testsupport::small_hill(), 3);
    REQUIRE(B.items.size() == 3);
    CHECK(B.items[0].interval == Interval(R(0), R(3)));
    CHECK(B.items[0].gain == 5);
    CHECK(B.items[1].interval == Interval(R(2), R(3)));
    CHECK(B.items[1].gain == 3);
    CHECK(B.items[2].interval == Interval(R(2), R(5)));
    CHECK(B.items[2].gain == 5);
  }
  SECTION("an all-zero profile has no candidates") {
    CHECK(enumerate_md_intervals(testsupport::flat_zero(), 3).items.empty());
  }
}

TEST_CASE("every enumerated candidate is md and within budget",
          "[mec][property]") {
  Rng rng(8675309);
  for (int trial = 0; trial < 40; ++trial) {
    const StepFunction f = testsupport::random_step_function(rng);
    const std::int64_t omega = rng.uniform(1, f.extent());
    MDIntervalSet B = enumerate_md_intervals(f, omega);
    const std::size_t n = f.num_steps();
    CHECK(B.items.size() <= n * (n + 1) / 2);
    std::size_t recount = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b <= n; ++b) {
        Interval t(R(f.edges()[a]), R(f.edges()[b]));
        if (is_md(f, t) && t.length() <= omega) ++recount;
      }
    }
    CHECK(B.items.size() == recount);
    for (const MDInterval& item : B.items) {
      CHECK(is_md(f, item.interval));
      CHECK(item.length <= omega);
      CHECK(item.gain == gain(f, item.interval));
    }
  }
}

TEST_CASE("discrete DP fills the production table", "[mec]") {
  const StepFunction f = testsupport::spike_and_plateau();
  MDIntervalSet B = enumerate_md_intervals(f, 6);
  DPTable D = dp_discrete(B, 2, 6);

  CHECK(D.value(2, 6) == 26);  // spike twice is beaten by spike + plateau
  for (std::int64_t j = 0; j <= 2; ++j) CHECK(D.value(j, 0) == 0);
  for (std::int64_t l = 0; l <= 6; ++l) CHECK(D.value(0, l) == 0);

  SECTION("cells match a brute-force multiset search") {
    for (std::int64_t j = 0; j <= 2; ++j) {
      for (std::int64_t l = 0; l <= 6; ++l) {
        CHECK(D.value(j, l) == testsupport::best_multiset_gain(B.items, j, l));
      }
    }
  }
}

TEST_CASE("single-interval DP row on the twin-peak profile", "[mec]") {
  // The best single md-interval of length <= 3 is [0,3) with gain 7; the
  // value is fixed by the brute-force search, not assumed.
  const StepFunction f = testsupport::twin_peaks();
  MDIntervalSet B = enumerate_md_intervals(f, f.extent());
  const Rational expected = testsupport::best_multiset_gain(B.items, 1, 3);
  CHECK(expected == 7);
  DPTable D = dp_discrete(B, 1, 3);
  CHECK(D.value(1, 3) == expected);
}

TEST_CASE("2D table equals the cubic reference recurrence", "[mec][property]") {
  Rng rng(31415926);
  for (int trial = 0; trial < 30; ++trial) {
    const StepFunction f = testsupport::random_step_function(rng);
    const std::int64_t omega = rng.uniform(1, f.extent());
    const std::int64_t j_max = rng.uniform(0, 4);
    MDIntervalSet B = enumerate_md_intervals(f, omega);
    DPTable D2 = dp_discrete(B, j_max, omega);
    DP3Table D3 = dp_discrete_3d(B, j_max, omega);
    for (std::int64_t j = 0; j <= j_max; ++j) {
      for (std::int64_t l = 0; l <= omega; ++l) {
        CHECK(D3.value(B.items.size(), j, l) == D2.value(j, l));
      }
    }
    // Zero boundaries and monotonicity in every index.
    for (std::size_t i = 0; i <= B.items.size(); ++i) {
      for (std::int64_t j = 0; j <= j_max; ++j) {
        for (std::int64_t l = 0; l <= omega; ++l) {
          if (i == 0 || j == 0 || l == 0) {
            CHECK(D3.value(i, j, l) == 0);
            continue;
          }
          CHECK(D3.value(i, j, l) >= D3.value(i - 1, j, l));
          CHECK(D3.value(i, j, l) >= D3.value(i, j - 1, l));
          CHECK(D3.value(i, j, l) >= D3.value(i, j, l - 1));
        }
      }
    }
  }
}

TEST_CASE("combine maximizes the split between tasks", "[mec]") {
  SECTION("spike and plateau, three moves") {
    const StepFunction f = testsupport::spike_and_plateau();
    MDIntervalSet B = enumerate_md_intervals(f, 6);
    DPTable D = dp_discrete(B, 2, 6);
    GainProfile G = gain_profile(f, 6);
    CombineResult top = combine(D, G, 6);
    CHECK(top.gain == 36);
    CHECK(top.split_length == 2);
  }
  SECTION("twin peaks, four moves over four units") {
    const StepFunction f = testsupport::twin_peaks();
    MDIntervalSet B = enumerate_md_intervals(f, 4);
    DPTable D = dp_discrete(B, 3, 4);
    GainProfile G = gain_profile(f, 4);
    CombineResult top = combine(D, G, 4);
    CHECK(top.gain == 20);  // four unit dwells on the tall peak
  }
  SECTION("one move degenerates to the best whole window") {
    const StepFunction f = testsupport::twin_peaks();
    MDIntervalSet B = enumerate_md_intervals(f, 5);
    DPTable D = dp_discrete(B, 0, 5);
    GainProfile G = gain_profile(f, 5);
    CombineResult top = combine(D, G, 5);
    CHECK(top.gain == G.gain(5));
    CHECK(top.split_length == 0);
  }
}

TEST_CASE("reconstruct rebuilds a plan worth exactly the optimum", "[mec]") {
  SECTION("golden plan for the spike-and-plateau profile") {
    const StepFunction f = testsupport::spike_and_plateau();
    MDIntervalSet B = enumerate_md_intervals(f, 6);
    DPTable D = dp_discrete(B, 2, 6);
    GainProfile G = gain_profile(f, 6);
    CombineResult top = combine(D, G, 6);
    Solution plan = reconstruct(D, B, top.split_length, G, 6);
    REQUIRE(plan.entries.size() == 2);
    CHECK(plan.entries[0].interval == Interval(R(0), R(1)));
    CHECK(plan.entries[0].count == 2);
    CHECK(plan.entries[1].interval == Interval(R(6), R(10)));
    CHECK(plan.entries[1].count == 1);
    CHECK(total_gain(f, plan) == top.gain);
  }
  SECTION("zero-gain witnesses are dropped") {
    const StepFunction f = testsupport::flat_zero();
    MDIntervalSet B = enumerate_md_intervals(f, 3);
    DPTable D = dp_discrete(B, 2, 3);
    GainProfile G = gain_profile(f, 3);
    Solution plan = reconstruct(D, B, combine(D, G, 3).split_length, G, 3);
    CHECK(plan.entries.empty());
  }
  SECTION("corrupt tables are surfaced, not repaired") {
    MDIntervalSet B;
    B.items.push_back({Interval(R(0), R(1)), 1, R(5)});
    DPTable D(1, 2);
    D.set(1, 2, R(5), 99);  // back-reference to a nonexistent candidate
    GainProfile G({{R(0), Interval()}, {R(0), Interval()}, {R(0), Interval()}});
    CHECK_THROWS_AS(reconstruct(D, B, 2, G, 2), InternalInconsistencyError);

    DPTable mismatched(1, 2);
    mismatched.set(1, 2, R(5), DPTable::kChoicePrevMove);
    CHECK_THROWS_AS(reconstruct(mismatched, B, 2, G, 2),
                    InternalInconsistencyError);
  }
}

TEST_CASE("solve_mec end to end", "[mec]") {
  SECTION("spike and plateau beats any fixed window") {
    MECSolution sol = solve_mec(testsupport::spike_and_plateau(), 3, 6);
    CHECK(sol.total_gain == 36);
    CHECK(sol.chosen_split == 2);
    CHECK(sol.used_length == 6);
  }
  SECTION("two unit dwells on the tall peak") {
    MECSolution sol = solve_mec(testsupport::twin_peaks(), 2, 2);
    CHECK(sol.total_gain == 10);
    REQUIRE(sol.intervals.entries.size() == 1);
    CHECK(sol.intervals.entries[0].interval == Interval(R(2), R(3)));
    CHECK(sol.intervals.entries[0].count == 2);
  }
  SECTION("three moves over four units, against the oracle") {
    const StepFunction f = testsupport::twin_peaks();
    MECSolution sol = solve_mec(f, 3, 4);
    CHECK(sol.total_gain == brute_force_mec(f, 3, 4).gain);
    CHECK(sol.total_gain == 17);
  }
  SECTION("verification flag cross-checks the cubic table") {
    MECOptions opts;
    opts.verify_3d = true;
    CHECK(solve_mec(testsupport::spike_and_plateau(), 3, 6, opts).total_gain ==
          36);
  }
  SECTION("argument validation") {
    const StepFunction f = testsupport::twin_peaks();
    CHECK_THROWS_AS(solve_mec(f, 0, 4), InvalidQueryError);
    CHECK_THROWS_AS(solve_mec(f, 2, 0), InvalidQueryError);
    CHECK_THROWS_AS(solve_mec(f, 2, 10), LengthExceedsExtentError);
  }
}

TEST_CASE("unimodal shortcut repeats the best window", "[mec]") {
  const StepFunction hill = testsupport::small_hill();

  MECSolution two = solve_mec_unimodal(hill, 2, R(2));
  CHECK(two.total_gain == 6);
  REQUIRE(two.intervals.entries.size() == 1);
  CHECK(two.intervals.entries[0].interval == Interval(R(2), R(3)));
  CHECK(two.intervals.entries[0].count == 2);

  // Fractional window length 3/2.
  MECSolution frac = solve_mec_unimodal(hill, 2, R(3));
  CHECK(frac.total_gain == 7);
  CHECK(frac.intervals.entries[0].interval.length() == R(3, 2));

  MECSolution whole = solve_mec_unimodal(hill, 1, R(hill.extent()));
  CHECK(whole.total_gain == gain(hill, Interval(R(0), R(hill.extent()))));

  CHECK_THROWS_AS(solve_mec_unimodal(testsupport::twin_peaks(), 2, R(4)),
                  NotUnimodalError);
}

TEST_CASE("greedy baseline applies the window recipe regardless of shape",
          "[mec]") {
  MECSolution greedy = greedy_baseline(testsupport::spike_and_plateau(), 3, R(6));
  CHECK(greedy.total_gain == 30);
  CHECK(greedy.intervals.entries[0].interval == Interval(R(0), R(2)));

  CHECK(greedy_baseline(testsupport::small_hill(), 2, R(3)).total_gain == 7);

  // With a single move the recipes coincide.
  const StepFunction f = testsupport::twin_peaks();
  CHECK(greedy_baseline(f, 1, R(5)).total_gain == solve_mec(f, 1, 5).total_gain);
}

TEST_CASE("csp-track gain is the unit-window gain times the budget", "[mec]") {
  CHECK(csp_track_gain(testsupport::twin_peaks(), 4) == 20);
  CHECK(csp_track_gain(testsupport::spike_and_plateau(), 2) == 20);
  CHECK(csp_track_gain(testsupport::flat_zero(), 3) == 0);
}

TEST_CASE("schedules expand counted dwells in start order", "[mec]") {
  SECTION("two repeats of one dwell") {
    Solution T;
    T.add(Interval(R(2), R(3)), 2);
    auto schedule = emit_schedule(T, R(2));
    REQUIRE(schedule.size() == 2);
    CHECK(schedule[0].displacement == 0);
    CHECK(schedule[1].displacement == 1);
    CHECK(schedule[0].dwell == Interval(R(2), R(3)));
  }
  SECTION("an empty plan is all idle") {
    auto schedule = emit_schedule(Solution{}, R(4));
    REQUIRE(schedule.size() == 1);
    CHECK_FALSE(schedule[0].dwell.has_value());
    CHECK(schedule[0].duration == 4);
  }
  SECTION("optimal plan uses the whole budget") {
    MECSolution sol = solve_mec(testsupport::spike_and_plateau(), 3, 6);
    auto schedule = emit_schedule(sol.intervals, R(6));
    REQUIRE(schedule.size() == 3);
    for (const ScheduleEntry& e : schedule) CHECK(e.dwell.has_value());
  }
  SECTION("leftover budget becomes an explicit idle record") {
    Solution T;
    T.add(Interval(R(0), R(1)), 1);
    auto schedule = emit_schedule(T, R(3));
    REQUIRE(schedule.size() == 2);
    CHECK_FALSE(schedule[1].dwell.has_value());
    CHECK(schedule[1].displacement == 1);
    CHECK(schedule[1].duration == 2);
  }
  SECTION("budget overruns are rejected") {
    Solution T;
    T.add(Interval(R(0), R(3)), 1);
    CHECK_THROWS_AS(emit_schedule(T, R(2)), BudgetExceededError);
  }
}

TEST_CASE("solver invariants on random instances", "[mec][property]") {
  Rng rng(600613);
  for (int trial = 0; trial < 60; ++trial) {
    const StepFunction f = testsupport::random_step_function(rng);
    const std::int64_t omega = rng.uniform(1, std::min<std::int64_t>(8, f.extent()));
    const std::int64_t m = rng.uniform(1, 4);

    MECSolution dp = solve_mec(f, m, omega);
    CHECK(dp.total_gain == brute_force_mec(f, m, omega).gain);
    CHECK(dp.total_gain == total_gain(f, dp.intervals));
    CHECK(dp.intervals.cardinality() <= m);
    CHECK(dp.used_length <= omega);
    CHECK(witness_structure_ok(f, dp.intervals));

    // The greedy multiset is feasible for the same limits.
    CHECK(dp.total_gain >= greedy_baseline(f, m, R(omega)).total_gain);

    // More moves or more displacement never hurt.
    CHECK(solve_mec(f, m + 1, omega).total_gain >= dp.total_gain);
    if (omega < f.extent()) {
      CHECK(solve_mec(f, m, omega + 1).total_gain >= dp.total_gain);
    }

    // A movement per quantum unit matches the unit-stepping tracker.
    CHECK(solve_mec(f, omega, omega).total_gain == csp_track_gain(f, omega));
  }
}

TEST_CASE("both paths agree on unimodal profiles", "[mec][property]") {
  Rng rng(280284);
  for (int trial = 0; trial < 40; ++trial) {
    const StepFunction f = testsupport::random_unimodal_step_function(rng);
    const std::int64_t omega = rng.uniform(1, f.extent());
    const std::int64_t m = rng.uniform(1, 6);
    MECSolution direct = solve_mec(f, m, omega);
    MECSolution shortcut = solve_mec_unimodal(f, m, R(omega));
    CHECK(direct.total_gain == shortcut.total_gain);

    MECOptions opts;
    opts.use_unimodal_shortcut = true;
    CHECK(solve_mec(f, m, omega, opts).total_gain == direct.total_gain);
  }
}
