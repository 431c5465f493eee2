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

#ifndef HELIOTRACK_TESTS_SUPPORT_FIXTURES_HPP
#define HELIOTRACK_TESTS_SUPPORT_FIXTURES_HPP

#include <vector>

#include "heliotrack/step_function.hpp"

namespace testsupport {

// Two separated peaks of heights 5 and 4; extent 9.
inline heliotrack::StepFunction twin_peaks() {
  return heliotrack::StepFunction(
      {2, 1, 3, 1, 2},
      {heliotrack::Rational(1), heliotrack::Rational(5), heliotrack::Rational(2),
       heliotrack::Rational(4), heliotrack::Rational(1)});
}

// A tall spike, a dead zone, then a wide plateau; extent 10. The best plan
// mixes repeats of the spike with one long dwell on the plateau, which the
// fixed-window recipe cannot represent.
inline heliotrack::StepFunction spike_and_plateau() {
  return heliotrack::StepFunction(
      {1, 5, 4}, {heliotrack::Rational(10), heliotrack::Rational(0),
                  heliotrack::Rational(4)});
}

// Single bump; extent 5. Unimodal.
inline heliotrack::StepFunction small_hill() {
  return heliotrack::StepFunction(
      {2, 1, 2}, {heliotrack::Rational(1), heliotrack::Rational(3),
                  heliotrack::Rational(1)});
}

inline heliotrack::StepFunction flat_zero(std::int64_t length = 5) {
  return heliotrack::StepFunction({length}, {heliotrack::Rational(0)});
}

}  // namespace testsupport

#endif  // HELIOTRACK_TESTS_SUPPORT_FIXTURES_HPP
