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

#include "heliotrack/io.hpp"

#include <sstream>

#include "heliotrack/rational.hpp"
#include "support/fixtures.hpp"
#include "support/test_oracles.hpp"

using namespace heliotrack;
using heliotrack::io::json;
using testsupport::Rng;

namespace {

Rational R(std::int64_t num, std::int64_t den = 1) {
  return Rational(num, den);
}

}  // namespace

TEST_CASE("rational literals parse and print canonically", "[io]") {
  CHECK(parse_rational("3/4") == R(3, 4));
  CHECK(parse_rational("-5/3") == R(-5, 3));
  CHECK(parse_rational("5") == R(5));
  CHECK(parse_rational("0.25") == R(1, 4));
  CHECK(parse_rational("-3.5") == R(-7, 2));
  CHECK(parse_rational(" 2 ") == R(2));
  CHECK(parse_rational("2/4") == R(1, 2));
  CHECK(parse_rational(".5") == R(1, 2));

  CHECK(format_rational(R(3, 4)) == "3/4");
  CHECK(format_rational(R(5)) == "5");
  CHECK(format_rational(R(-7, 2)) == "-7/2");

  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
  CHECK_THROWS_AS(parse_rational("-"), ParseError);
}

TEST_CASE("format and parse are inverse on random rationals", "[io][property]") {
  Rng rng(112358);
  for (int trial = 0; trial < 100; ++trial) {
    Rational r(rng.uniform(-5000, 5000), rng.uniform(1, 997));
    CHECK(parse_rational(format_rational(r)) == r);
  }
}

TEST_CASE("JSON rationals accept strings and numbers", "[io]") {
  CHECK(io::rational_from_json(json("3/4")) == R(3, 4));
  CHECK(io::rational_from_json(json(5)) == R(5));
  CHECK(io::rational_from_json(json(0.25)) == R(1, 4));
  CHECK_THROWS_AS(io::rational_from_json(json(nullptr)), ParseError);
  CHECK(io::rational_to_json(R(3, 4)) == json("3/4"));
  CHECK(io::rational_to_json(R(1, 4), /*as_float=*/true) == json(0.25));
}

TEST_CASE("step functions round-trip through JSON", "[io]") {
  const StepFunction f(
      {2, 1, 3}, {R(1, 2), R(5), R(0)}, R(1, 4));
  json j = io::step_function_to_json(f, json{{"origin", "test"}});
  CHECK(j.at("meta").at("origin") == "test");
  StepFunction back = io::step_function_from_json(j);
  CHECK(back.step_lengths() == f.step_lengths());
  CHECK(back.step_values() == f.step_values());
  CHECK(back.quantum() == f.quantum());
}

TEST_CASE("step-function JSON rejects malformed data", "[io]") {
  CHECK_THROWS_AS(io::step_function_from_json(json::object()), ParseError);
  CHECK_THROWS_AS(
      io::step_function_from_json(json{{"steps", json::array()}}),
      EmptyInputError);
  CHECK_THROWS_AS(io::step_function_from_json(json{
                      {"steps", {{{"len", 0}, {"val", "1"}}}}}),
                  ValidationError);
  CHECK_THROWS_AS(io::step_function_from_json(json{
                      {"steps", {{{"len", 2}, {"val", "-1"}}}}}),
                  ValidationError);
  CHECK_THROWS_AS(io::step_function_from_json(json{
                      {"steps", {{{"len", 1.5}, {"val", "1"}}}}}),
                  ParseError);
}

TEST_CASE("step functions round-trip through CSV", "[io]") {
  const StepFunction f = testsupport::twin_peaks();
  std::ostringstream out;
  io::step_function_to_csv(out, f);
  std::istringstream in(out.str());
  StepFunction back = io::step_function_from_csv(in, R(1));
  CHECK(back.step_lengths() == f.step_lengths());
  CHECK(back.step_values() == f.step_values());

  SECTION("quantum comes from the caller") {
    std::istringstream rows("len,val\n2,1/2\n");
    StepFunction g = io::step_function_from_csv(rows, R(1, 4));
    CHECK(g.quantum() == R(1, 4));
  }
  SECTION("header is mandatory") {
    std::istringstream rows("length,value\n2,1\n");
    CHECK_THROWS_AS(io::step_function_from_csv(rows, R(1)), ParseError);
  }
  SECTION("rows need both columns") {
    std::istringstream rows("len,val\n2\n");
    CHECK_THROWS_AS(io::step_function_from_csv(rows, R(1)), ParseError);
  }
  SECTION("negative values are rejected") {
    std::istringstream rows("len,val\n2,-1\n");
    CHECK_THROWS_AS(io::step_function_from_csv(rows, R(1)), ValidationError);
  }
  SECTION("zero lengths are rejected") {
    std::istringstream rows("len,val\n0,1\n");
    CHECK_THROWS_AS(io::step_function_from_csv(rows, R(1)), ValidationError);
  }
}

TEST_CASE("solution and schedule serialization", "[io]") {
  Solution T;
  T.add(Interval(R(2), R(3)), 2);
  json arr = io::solution_to_json(T);
  REQUIRE(arr.size() == 1);
  CHECK(arr[0].at("start") == "2");
  CHECK(arr[0].at("end") == "3");
  CHECK(arr[0].at("count") == 2);

  MECSolution sol;
  sol.total_gain = R(36);
  sol.intervals = T;
  sol.used_length = R(2);
  sol.chosen_split = 2;
  auto schedule = emit_schedule(T, R(3));
  json out = io::mec_solution_to_json(sol, &schedule);
  CHECK(out.at("gain") == "36");
  CHECK(out.at("split_l") == 2);
  REQUIRE(out.at("schedule").size() == 3);
  CHECK(out.at("schedule")[2].contains("idle"));

  MECSolution greedy = sol;
  greedy.chosen_split.reset();
  CHECK(io::mec_solution_to_json(greedy).at("split_l").is_null());

  MTMSolution mtm;
  mtm.move_count = 3;
  mtm.initial_dwell = R(2);
  mtm.schedule = T;
  json m = io::mtm_solution_to_json(mtm);
  CHECK(m.at("m") == 3);
  CHECK(m.at("l0") == "2");
  CHECK(m.at("intervals").size() == 1);
}

TEST_CASE("knapsack and reduced instances round-trip", "[io]") {
  json j{{"capacity", 5},
         {"items", {{{"w", 2}, {"a", "3"}}, {{"w", 3}, {"a", "5"}}}}};
  KnapsackInstance k = io::knapsack_from_json(j);
  CHECK(k.capacity == 5);
  REQUIRE(k.items.size() == 2);
  CHECK(k.items[1].profit == 5);
  CHECK(io::knapsack_to_json(k) == j);

  MECInstance inst = knapsack_to_mec(k);
  json ij = io::mec_instance_to_json(inst);
  MECInstance back = io::mec_instance_from_json(ij);
  CHECK(back.m == inst.m);
  CHECK(back.omega_star == inst.omega_star);
  CHECK(back.f.step_lengths() == inst.f.step_lengths());

  SECTION("validation propagates") {
    json empty{{"capacity", 5}, {"items", json::array()}};
    CHECK_THROWS_AS(io::knapsack_from_json(empty), ValidationError);
    json bad{{"capacity", 0}, {"items", {{{"w", 2}, {"a", "3"}}}}};
    CHECK_THROWS_AS(io::knapsack_from_json(bad), ValidationError);
  }
}
