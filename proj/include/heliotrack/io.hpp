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

#ifndef HELIOTRACK_IO_HPP
#define HELIOTRACK_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "heliotrack/errors.hpp"
#include "heliotrack/mec.hpp"
#include "heliotrack/mtm.hpp"
#include "heliotrack/oracle.hpp"
#include "heliotrack/rational.hpp"
#include "heliotrack/step_function.hpp"

namespace heliotrack::io {

using json = nlohmann::json;

// Rationals travel as canonical "p/q" strings by default; numbers are
// accepted on input and emitted only when the caller asks for floats.
inline Rational rational_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return Rational(BigInt(v.get<std::uint64_t>()));
  if (v.is_number_float()) return rational_from_double(v.get<double>());
  throw ParseError("expected a rational (string or number), got " +
                   std::string(v.type_name()));
}

inline json rational_to_json(const Rational& r, bool as_float = false) {
  if (as_float) return to_double(r);
  return format_rational(r);
}

inline std::int64_t int_from_json(const json& v, const char* what) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw ParseError(std::string(what) + " must be an integer");
  }
  return v.get<std::int64_t>();
}

// ---- step-function files ----------------------------------------------
//
// JSON: {"quantum_deg": "1", "steps": [{"len": 2, "val": "1"}, ...],
//        "meta": {...}}
// CSV:  header "len,val", one step per row; the quantum arrives separately.

inline json step_function_to_json(const StepFunction& f,
                                  json meta = json::object()) {
  json steps = json::array();
  for (std::size_t i = 0; i < f.num_steps(); ++i) {
    steps.push_back({{"len", f.step_length(i)},
                     {"val", format_rational(f.step_value(i))}});
  }
  return json{{"quantum_deg", format_rational(f.quantum())},
              {"steps", std::move(steps)},
              {"meta", std::move(meta)}};
}

inline StepFunction step_function_from_json(const json& j) {
  if (!j.is_object() || !j.contains("steps")) {
    throw ParseError("step-function JSON needs a \"steps\" array");
  }
  const json& steps = j.at("steps");
  if (!steps.is_array() || steps.empty()) {
    throw EmptyInputError("\"steps\" must be a non-empty array");
  }
  Rational quantum(1);
  if (j.contains("quantum_deg")) quantum = rational_from_json(j.at("quantum_deg"));
  std::vector<std::int64_t> lengths;
  std::vector<Rational> values;
  lengths.reserve(steps.size());
  values.reserve(steps.size());
  for (const json& s : steps) {
    const std::int64_t len = int_from_json(s.at("len"), "step length");
    if (len < 1) throw ValidationError("step length must be >= 1");
    Rational val = rational_from_json(s.at("val"));
    if (val < 0) throw ValidationError("step value must be >= 0");
    lengths.push_back(len);
    values.push_back(std::move(val));
  }
  return StepFunction(std::move(lengths), std::move(values), quantum);
}

inline StepFunction step_function_from_csv(std::istream& in,
                                           const Rational& quantum) {
  std::string line;
  if (!std::getline(in, line)) throw EmptyInputError("empty CSV");
  auto strip = [](std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
    std::size_t b = 0;
    while (b < s.size() && s[b] == ' ') ++b;
    return s.substr(b);
  };
  if (strip(line) != "len,val") {
    throw ParseError("CSV header must be exactly \"len,val\"");
  }
  std::vector<std::int64_t> lengths;
  std::vector<Rational> values;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ParseError("CSV row is missing the val column: " + line);
    }
    Rational len = parse_rational(line.substr(0, comma));
    if (!is_integer(len) || len < 1) {
      throw ValidationError("step length must be a positive integer: " + line);
    }
    Rational val = parse_rational(line.substr(comma + 1));
    if (val < 0) throw ValidationError("step value must be >= 0: " + line);
    lengths.push_back(to_int64(numerator(len)));
    values.push_back(std::move(val));
  }
  if (lengths.empty()) throw EmptyInputError("CSV has no step rows");
  return StepFunction(std::move(lengths), std::move(values), quantum);
}

inline void step_function_to_csv(std::ostream& out, const StepFunction& f) {
  out << "len,val\n";
  for (std::size_t i = 0; i < f.num_steps(); ++i) {
    out << f.step_length(i) << "," << format_rational(f.step_value(i)) << "\n";
  }
}

inline bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

inline StepFunction read_step_function_file(const std::string& path,
                                            const Rational& csv_quantum =
                                                Rational(1)) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file: " + path);
  if (has_suffix(path, ".csv")) {
    return step_function_from_csv(in, csv_quantum);
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return step_function_from_json(j);
}

// ---- solutions ----------------------------------------------------------

inline json solution_to_json(const Solution& T, bool as_float = false) {
  json arr = json::array();
  for (const Solution::Entry& e : T.entries) {
    arr.push_back({{"start", rational_to_json(e.interval.start, as_float)},
                   {"end", rational_to_json(e.interval.end, as_float)},
                   {"count", e.count}});
  }
  return arr;
}

inline json schedule_to_json(const std::vector<ScheduleEntry>& schedule,
                             bool as_float = false) {
  json arr = json::array();
  for (const ScheduleEntry& e : schedule) {
    json rec{{"displacement", rational_to_json(e.displacement, as_float)}};
    if (e.dwell) {
      rec["start"] = rational_to_json(e.dwell->start, as_float);
      rec["end"] = rational_to_json(e.dwell->end, as_float);
    } else {
      rec["idle"] = rational_to_json(e.duration, as_float);
    }
    arr.push_back(std::move(rec));
  }
  return arr;
}

inline json mec_solution_to_json(const MECSolution& sol,
                                 const std::vector<ScheduleEntry>* schedule =
                                     nullptr,
                                 bool as_float = false) {
  json out{{"gain", rational_to_json(sol.total_gain, as_float)},
           {"split_l",
            sol.chosen_split ? json(*sol.chosen_split) : json(nullptr)},
           {"intervals", solution_to_json(sol.intervals, as_float)}};
  if (schedule) out["schedule"] = schedule_to_json(*schedule, as_float);
  return out;
}

inline json mtm_solution_to_json(const MTMSolution& sol,
                                 bool as_float = false) {
  return json{{"m", sol.move_count},
              {"l0", rational_to_json(sol.initial_dwell, as_float)},
              {"intervals", solution_to_json(sol.schedule, as_float)}};
}

// ---- knapsack and reduced instances -------------------------------------
//
// Knapsack: {"capacity": 5, "items": [{"w": 2, "a": "3"}, ...]}
// Reduced instance: {"m": ..., "omega_star": ..., "f": <step function>}

inline KnapsackInstance knapsack_from_json(const json& j) {
  KnapsackInstance k;
  if (!j.is_object() || !j.contains("capacity") || !j.contains("items")) {
    throw ParseError("knapsack JSON needs \"capacity\" and \"items\"");
  }
  k.capacity = int_from_json(j.at("capacity"), "capacity");
  if (!j.at("items").is_array()) throw ParseError("\"items\" must be an array");
  for (const json& it : j.at("items")) {
    KnapsackItem item;
    item.weight = int_from_json(it.at("w"), "item weight");
    item.profit = rational_from_json(it.at("a"));
    k.items.push_back(std::move(item));
  }
  k.validate();
  return k;
}

inline json knapsack_to_json(const KnapsackInstance& k) {
  json items = json::array();
  for (const KnapsackItem& item : k.items) {
    items.push_back({{"w", item.weight},
                     {"a", format_rational(item.profit)}});
  }
  return json{{"capacity", k.capacity}, {"items", std::move(items)}};
}

inline json mec_instance_to_json(const MECInstance& inst) {
  return json{{"m", inst.m},
              {"omega_star", inst.omega_star},
              {"f", step_function_to_json(inst.f)}};
}

inline MECInstance mec_instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("f")) {
    throw ParseError("instance JSON needs \"m\", \"omega_star\" and \"f\"");
  }
  return MECInstance{step_function_from_json(j.at("f")),
                     int_from_json(j.at("m"), "m"),
                     int_from_json(j.at("omega_star"), "omega_star")};
}

}  // namespace heliotrack::io

#endif  // HELIOTRACK_IO_HPP
