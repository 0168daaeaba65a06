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

#include "isr/rational.hpp"

#include <algorithm>
#include <cctype>

namespace isr {

namespace {

constexpr int kMaxDecimalExponent = 12;

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Returns k >= 0 such that den divides 10^k, or -1 when den has a prime
// factor other than 2 and 5 (or k would exceed kMaxDecimalExponent).
int decimal_exponent(BigInt den) {
  int twos = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  int fives = 0;
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return -1;
  const int k = std::max(twos, fives);
  return k <= kMaxDecimalExponent ? k : -1;
}

BigInt pow10(int k) {
  BigInt p = 1;
  for (int i = 0; i < k; ++i) p *= 10;
  return p;
}

// Plain base-10 accumulation. The cpp_int string constructor must not be
// used here: it reads a leading '0' as an octal prefix.
BigInt digits_to_bigint(std::string_view digits) {
  BigInt value = 0;
  for (const char c : digits) {
    value *= 10;
    value += c - '0';
  }
  return value;
}

}  // namespace

std::optional<Util> parse_decimal(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }

  const auto dot = rest.find('.');
  std::string_view int_part = rest.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);

  if (!all_digits(int_part)) return std::nullopt;
  if (dot != std::string_view::npos && !all_digits(frac_part)) {
    return std::nullopt;
  }

  BigInt numerator = digits_to_bigint(int_part);
  BigInt denominator = 1;
  if (!frac_part.empty()) {
    const BigInt scale = pow10(static_cast<int>(frac_part.size()));
    numerator = numerator * scale + digits_to_bigint(frac_part);
    denominator = scale;
  }
  if (negative) numerator = -numerator;
  return Util(numerator, denominator);
}

bool decimal_representable(const Util& value) {
  return decimal_exponent(denominator(value)) >= 0;
}

std::string format_util(const Util& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);

  const int k = decimal_exponent(den);
  if (k < 0) return num.str() + "/" + den.str();
  if (k == 0) return num.str();

  // Scale to an integer count of 10^-k units; k is minimal, so the last
  // digit is nonzero and no trailing-zero trimming is needed.
  const BigInt scaled = abs(num) * (pow10(k) / den);
  const BigInt whole = scaled / pow10(k);
  std::string frac = (scaled % pow10(k)).str();
  frac.insert(frac.begin(), k - frac.size(), '0');

  std::string out;
  if (num < 0) out += '-';
  out += whole.str();
  out += '.';
  out += frac;
  return out;
}

}  // namespace isr
