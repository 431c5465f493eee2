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

#ifndef HELIOTRACK_RATIONAL_HPP
#define HELIOTRACK_RATIONAL_HPP

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "heliotrack/errors.hpp"

namespace heliotrack {

// All gains, heights and interval endpoints are exact rationals. Solvers never
// touch floating point; doubles appear only at the presentation layer.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline BigInt floor_big(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);  // always > 0 in canonical form
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

inline BigInt ceil_big(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  BigInt q = num / den;
  if (num > 0 && q * den != num) ++q;
  return q;
}

inline std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw ValidationError("integer value out of 64-bit range: " + v.str());
  }
  return v.convert_to<std::int64_t>();
}

inline std::int64_t floor_to_int64(const Rational& r) {
  return to_int64(floor_big(r));
}

inline std::int64_t ceil_to_int64(const Rational& r) {
  return to_int64(ceil_big(r));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Canonical text form: "p" when the denominator is 1, otherwise "p/q" in
// lowest terms with a positive denominator.
inline std::string format_rational(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p/q", plain integers, and decimal literals ("0.25", "-3.5").
inline Rational parse_rational(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  std::string_view s = text.substr(begin, end - begin);
  if (s.empty()) throw ParseError("empty rational literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
    if (s.empty()) throw ParseError("sign with no digits");
  }

  auto parse_digits = [](std::string_view d) -> BigInt {
    if (d.empty()) throw ParseError("expected digits in rational literal");
    BigInt v = 0;
    for (char c : d) {
      if (c < '0' || c > '9')
        throw ParseError(std::string("bad character in rational literal: '") +
                         c + "'");
      v = v * 10 + (c - '0');
    }
    return v;
  };

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_digits(s.substr(0, slash));
    BigInt den = parse_digits(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator");
    result = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw ParseError("bare decimal point");
    BigInt whole = ip.empty() ? BigInt(0) : parse_digits(ip);
    BigInt frac = fp.empty() ? BigInt(0) : parse_digits(fp);
    BigInt scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    result = Rational(whole * scale + frac, scale);
  } else {
    result = Rational(parse_digits(s));
  }
  if (negative) result = -result;
  return result;
}

// Exact conversion of a finite double (doubles are binary rationals).
inline Rational rational_from_double(double value) {
  if (!(value == value) || value > std::numeric_limits<double>::max() ||
      value < std::numeric_limits<double>::lowest()) {
    throw ParseError("non-finite number is not a rational");
  }
  return Rational(value);
}

}  // namespace heliotrack

#endif  // HELIOTRACK_RATIONAL_HPP
