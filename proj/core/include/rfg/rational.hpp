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

#ifndef RFG_RATIONAL_HPP_
#define RFG_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace rfg {

// All payoff arithmetic is exact. Ties and knife-edge parameter comparisons
// must never depend on floating-point rounding.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// A player's valuation of a profile: the best fixed-point payoff, or
// nullopt when no fixed point exists. std::optional's ordering places
// nullopt strictly below every engaged value, which is exactly the
// "any outcome beats no outcome" convention.
using ProfileValue = std::optional<Rat>;

// Accepts "p/q", plain integers, and decimal literals ("0.4" == 2/5).
// Decimal input is converted exactly, never through floating point.
Rat parse_rational(std::string_view text);

// "p/q" when the denominator is not 1, otherwise just "p".
std::string to_ratio_string(const Rat& value);

// Fixed-point decimal rendering with exactly `precision` fractional digits,
// round half away from zero. Deterministic byte-for-byte.
std::string to_decimal_string(const Rat& value, int precision);

}  // namespace rfg

#endif  // RFG_RATIONAL_HPP_
