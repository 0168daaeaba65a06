// Copyright 2026 The isrgame Authors
//
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

#ifndef ISR_RATIONAL_HPP
#define ISR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace isr {

// One "util" of transferable utility. Every money-like quantity in this
// library is an exact rational with arbitrary-precision numerator and
// denominator; binary floating point never enters the math.
using Util = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses a plain decimal string: optional sign, one or more digits, and an
// optional fraction part ("7", "-0.25", "+5.5"). Anything else (exponents,
// lone dots, whitespace, fraction slashes) yields nullopt.
std::optional<Util> parse_decimal(std::string_view text);

// Formats a rational for reports and scenario files. When the reduced
// denominator divides 10^k for some k <= 12 the value is printed as a plain
// decimal with no trailing zeros ("5.5", "7"); otherwise as "p/q".
std::string format_util(const Util& value);

// True when format_util would print a plain decimal for this value.
bool decimal_representable(const Util& value);

}  // namespace isr

#endif  // ISR_RATIONAL_HPP
