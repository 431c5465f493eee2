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

#ifndef HELIOTRACK_SCENARIO_HPP
#define HELIOTRACK_SCENARIO_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "heliotrack/errors.hpp"
#include "heliotrack/rational.hpp"
#include "heliotrack/step_function.hpp"

namespace heliotrack {

// Synthetic multi-modal irradiance profiles. Each mirror of a collector
// element contributes a unit-height rectangular acceptance pulse around the
// 90-degree alignment; perturbed mirror angles shift the pulses and the
// quantized pulse sum forms the step function. An assembly profile sums
// several element profiles under random integer shifts and crops the central
// region of interest.
//
// Reproducibility: all randomness comes from std::mt19937_64 (whose output
// sequence the C++ standard pins down) mapped to ranges with plain modulo
// arithmetic, so identical parameters give identical profiles on any
// platform. Perturbations are drawn on a 1/1024-degree grid and stay exact
// rationals end to end.

enum class FailureMode {
  kNone,
  kHceRotated,  // receiver tilted: every pulse narrows by a fixed factor
  kBroken,      // three mirrors gone: their pulses are dropped
};

struct ScenarioParams {
  std::uint64_t seed = 0;
  int mirrors_per_sce = 28;  // 7x4 grid
  Rational base_tilt_deg = Rational(1, 5);
  Rational perturb_range_deg = Rational(2);
  int sce_count = 12;
  int shift_range_deg = 3;
  std::pair<Rational, Rational> crop_window_deg = {Rational(75), Rational(101)};
  Rational quantum_deg = Rational(1);
  FailureMode failure_mode = FailureMode::kNone;
  // Acceptance width of a single aligned mirror, in degrees. Narrow enough
  // that default assemblies keep several local maxima instead of averaging
  // into one smooth bell.
  Rational pulse_width_deg = Rational(1, 2);
  // Pulse-width multiplier applied in the kHceRotated mode.
  Rational hce_narrow_factor = Rational(1, 2);
};

namespace scenario_detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
inline constexpr std::uint64_t kShiftSalt = 0x5348494654ull;  // "SHIFT"

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// lo + (next output mod span); the documented portable range mapping.
inline std::int64_t draw_int(std::mt19937_64& rng, std::int64_t lo,
                             std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

inline void validate_common(const ScenarioParams& p) {
  if (p.mirrors_per_sce < 1) {
    throw InvalidParamsError("mirrors_per_sce must be >= 1");
  }
  if (p.failure_mode == FailureMode::kBroken && p.mirrors_per_sce < 3) {
    throw InvalidParamsError("broken mode removes 3 mirrors; need >= 3");
  }
  if (p.pulse_width_deg <= 0) {
    throw InvalidParamsError("pulse_width_deg must be positive");
  }
  if (p.perturb_range_deg < 0) {
    throw InvalidParamsError("perturb_range_deg must be >= 0");
  }
  if (p.hce_narrow_factor <= 0 || p.hce_narrow_factor > 1) {
    throw InvalidParamsError("hce_narrow_factor must lie in (0, 1]");
  }
  if (p.quantum_deg <= 0 || !is_integer(Rational(180) / p.quantum_deg)) {
    throw InvalidParamsError("quantum_deg must divide the 180-degree sweep");
  }
  if (p.base_tilt_deg < 0) {
    throw InvalidParamsError("base_tilt_deg must be >= 0");
  }
}

inline void validate_sca(const ScenarioParams& p) {
  validate_common(p);
  if (p.sce_count < 1) throw InvalidParamsError("sce_count must be >= 1");
  if (p.shift_range_deg < 0) {
    throw InvalidParamsError("shift_range_deg must be >= 0");
  }
  if (p.shift_range_deg > 0 && !is_integer(Rational(1) / p.quantum_deg)) {
    throw InvalidParamsError(
        "integer-degree shifts need a quantum dividing 1 degree");
  }
  const auto& [lo, hi] = p.crop_window_deg;
  if (lo < 0 || hi > 180 || lo >= hi) {
    throw InvalidParamsError("crop window must satisfy 0 <= lo < hi <= 180");
  }
  if (!is_integer(lo / p.quantum_deg) || !is_integer(hi / p.quantum_deg)) {
    throw InvalidParamsError("crop window must sit on the quantum grid");
  }
}

inline std::int64_t cell_count(const Rational& degrees,
                               const Rational& quantum) {
  const Rational n = degrees / quantum;
  return to_int64(numerator(n));
}

// Per-cell heights of one element profile over [0, 180) degrees. A cell's
// height is the number of pulses covering its midpoint, matching the
// ray-count reading of the heights; element profiles therefore sum
// pointwise, cell by cell.
inline std::vector<Rational> sce_cells(const ScenarioParams& p) {
  validate_common(p);
  const std::int64_t cells = cell_count(Rational(180), p.quantum_deg);
  std::mt19937_64 rng(p.seed);

  // Perturbations are drawn for every mirror first, then failure draws, so
  // the same seed keeps mirror geometry identical across failure modes.
  const BigInt bound_big = ceil_big(p.perturb_range_deg * 1024) - 1;
  const std::int64_t bound = bound_big < 0 ? 0 : to_int64(bound_big);
  std::vector<Rational> centers;
  centers.reserve(static_cast<std::size_t>(p.mirrors_per_sce));
  for (int j = 0; j < p.mirrors_per_sce; ++j) {
    const Rational tilt = (j % 2 == 0) ? p.base_tilt_deg : -p.base_tilt_deg;
    const Rational noise(draw_int(rng, -bound, bound), 1024);
    centers.push_back(Rational(90) + tilt + noise);
  }

  std::vector<bool> dropped(centers.size(), false);
  if (p.failure_mode == FailureMode::kBroken) {
    int removed = 0;
    while (removed < 3) {
      const auto pick = static_cast<std::size_t>(
          draw_int(rng, 0, p.mirrors_per_sce - 1));
      if (!dropped[pick]) {
        dropped[pick] = true;
        ++removed;
      }
    }
  }

  Rational width = p.pulse_width_deg;
  if (p.failure_mode == FailureMode::kHceRotated) {
    width *= p.hce_narrow_factor;
  }

  std::vector<Rational> heights(static_cast<std::size_t>(cells), Rational(0));
  const Rational half = width / 2;
  for (std::size_t j = 0; j < centers.size(); ++j) {
    if (dropped[j]) continue;
    const Rational lo = centers[j] - half;
    const Rational hi = centers[j] + half;
    // Cells whose midpoint q*(c + 1/2) falls inside the half-open pulse.
    std::int64_t first = ceil_to_int64(lo / p.quantum_deg - Rational(1, 2));
    std::int64_t last = ceil_to_int64(hi / p.quantum_deg - Rational(1, 2)) - 1;
    if (first < 0) first = 0;
    if (last >= cells) last = cells - 1;
    for (std::int64_t c = first; c <= last; ++c) {
      heights[static_cast<std::size_t>(c)] += 1;
    }
  }
  return heights;
}

inline StepFunction cells_to_step_function(const std::vector<Rational>& cells,
                                           const Rational& quantum) {
  std::vector<std::int64_t> lengths;
  std::vector<Rational> values;
  for (const Rational& v : cells) {
    if (!values.empty() && values.back() == v) {
      ++lengths.back();
    } else {
      lengths.push_back(1);
      values.push_back(v);
    }
  }
  return StepFunction(std::move(lengths), std::move(values), quantum);
}

}  // namespace scenario_detail

// One collector element over the full [0, 180)-degree sweep.
inline StepFunction generate_sce(const ScenarioParams& p) {
  return scenario_detail::cells_to_step_function(
      scenario_detail::sce_cells(p), p.quantum_deg);
}

// A full assembly: sce_count element profiles (seeds derived from the base
// seed; index 0 reuses it unchanged), each shifted by a random integer number
// of degrees, summed, cropped to the window of interest and re-based to 0.
inline StepFunction generate_sca(const ScenarioParams& p) {
  using namespace scenario_detail;
  validate_sca(p);
  const std::int64_t cells = cell_count(Rational(180), p.quantum_deg);
  const std::int64_t cells_per_degree =
      p.shift_range_deg > 0 ? cell_count(Rational(1), p.quantum_deg) : 0;

  std::mt19937_64 shift_rng(splitmix64(p.seed ^ kShiftSalt));
  std::vector<Rational> total(static_cast<std::size_t>(cells), Rational(0));
  for (int i = 0; i < p.sce_count; ++i) {
    ScenarioParams element = p;
    element.seed = p.seed + static_cast<std::uint64_t>(i) * kGolden;
    const std::vector<Rational> part = sce_cells(element);
    const std::int64_t shift_deg =
        draw_int(shift_rng, -p.shift_range_deg, p.shift_range_deg);
    const std::int64_t shift_cells = shift_deg * cells_per_degree;
    for (std::int64_t c = 0; c < cells; ++c) {
      const std::int64_t src = c - shift_cells;
      if (src >= 0 && src < cells) {
        total[static_cast<std::size_t>(c)] +=
            part[static_cast<std::size_t>(src)];
      }
    }
  }

  const std::int64_t lo = cell_count(p.crop_window_deg.first, p.quantum_deg);
  const std::int64_t hi = cell_count(p.crop_window_deg.second, p.quantum_deg);
  std::vector<Rational> window(total.begin() + lo, total.begin() + hi);
  return cells_to_step_function(window, p.quantum_deg);
}

}  // namespace heliotrack

#endif  // HELIOTRACK_SCENARIO_HPP
