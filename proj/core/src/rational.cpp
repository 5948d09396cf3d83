// Copyright 2026 The rfg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rfg/rational.hpp"

#include <cctype>
#include <sstream>

#include "rfg/error.hpp"

namespace rfg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_digits(std::string_view s, std::string_view original) {
  if (!all_digits(s)) {
    fail(Errc::parse_error, "bad rational '" + std::string(original) + "'");
  }
  BigInt out = 0;
  for (char c : s) {
    out *= 10;
    out += c - '0';
  }
  return out;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  if (rest.empty()) {
    fail(Errc::parse_error, "bad rational '" + std::string(text) + "'");
  }

  BigInt num;
  BigInt den = 1;
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num = parse_digits(rest.substr(0, slash), text);
    den = parse_digits(rest.substr(slash + 1), text);
    if (den == 0) {
      fail(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    }
  } else if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = rest.substr(0, dot);
    std::string_view frac_part = rest.substr(dot + 1);
    if (int_part.empty()) int_part = "0";
    num = parse_digits(int_part, text);
    for (char c : frac_part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        fail(Errc::parse_error, "bad rational '" + std::string(text) + "'");
      }
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    num = parse_digits(rest, text);
  }
  if (negative) num = -num;
  return Rat(num, den);
}

std::string to_ratio_string(const Rat& value) {
  std::ostringstream out;
  out << numerator(value);
  if (denominator(value) != 1) {
    out << '/' << denominator(value);
  }
  return out.str();
}

std::string to_decimal_string(const Rat& value, int precision) {
  if (precision < 0) {
    fail(Errc::parameter_out_of_range, "negative precision");
  }
  BigInt num = numerator(value);
  BigInt den = denominator(value);
  bool negative = num < 0;
  if (negative) num = -num;

  BigInt scale = 1;
  for (int i = 0; i < precision; ++i) scale *= 10;
  // Round half away from zero: floor((2 * num * scale + den) / (2 * den)).
  BigInt scaled = (2 * num * scale + den) / (2 * den);
  BigInt int_part = scaled / scale;
  BigInt frac_part = scaled % scale;

  std::ostringstream out;
  if (negative && (int_part != 0 || frac_part != 0)) out << '-';
  out << int_part;
  if (precision > 0) {
    std::string frac = frac_part.str();
    out << '.' << std::string(precision - frac.size(), '0') << frac;
  }
  return out.str();
}

}  // namespace rfg
