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

#ifndef ISR_ERRORS_HPP
#define ISR_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "isr/rational.hpp"

namespace isr {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- game construction / check errors ----

struct GameTooLarge : Error {
  int player_count;
  int limit;
  GameTooLarge(int n, int max_n, const std::string& op)
      : Error("game too large for " + op + ": " + std::to_string(n) +
              " players (limit " + std::to_string(max_n) + ")"),
        player_count(n),
        limit(max_n) {}
};

struct MissingCoalition : Error {
  std::uint32_t coalition_bits;
  explicit MissingCoalition(std::uint32_t bits, const std::string& shown)
      : Error("cost function does not cover coalition " + shown),
        coalition_bits(bits) {}
};

struct NegativeCost : Error {
  std::string where;
  Util value;
  NegativeCost(std::string where_, Util value_)
      : Error("negative cost for " + where_ + ": " + format_util(value_)),
        where(std::move(where_)),
        value(std::move(value_)) {}
};

struct NonzeroEmptyCost : Error {
  Util value;
  explicit NonzeroEmptyCost(Util value_)
      : Error("cost of the empty coalition must be 0, got " +
              format_util(value_)),
        value(std::move(value_)) {}
};

struct PlayerSetMismatch : Error {
  PlayerSetMismatch() : Error("games are defined over different player sets") {}
};

struct LengthMismatch : Error {
  LengthMismatch(std::size_t got, std::size_t want)
      : Error("allocation has " + std::to_string(got) + " entries, game has " +
              std::to_string(want) + " players") {}
};

// ---- ISR model errors ----

// Raised when the pooled operational cost exceeds what the two firms would
// pay on their own; such a relation is never worth operating and is not
// representable as a game.
struct InfeasibleIsr : Error {
  Util operational_total;
  Util traditional_total;
  InfeasibleIsr(Util operational, Util traditional)
      : Error("infeasible relation: operational total " +
              format_util(operational) + " exceeds combined traditional cost " +
              format_util(traditional) +
              " (feasibility requires operational total <= combined "
              "traditional cost)"),
        operational_total(std::move(operational)),
        traditional_total(std::move(traditional)) {}
};

// ---- scenario / rendering errors ----

struct ParseError : Error {
  std::string location;
  ParseError(std::string location_, const std::string& detail)
      : Error("parse error at " + location_ + ": " + detail),
        location(std::move(location_)) {}
};

struct UnknownField : Error {
  std::string field;
  explicit UnknownField(std::string field_)
      : Error("unknown field: " + field_), field(std::move(field_)) {}
};

struct BadDecimal : Error {
  std::string field;
  std::string text;
  BadDecimal(std::string field_, std::string text_)
      : Error("field " + field_ + " is not a decimal string: \"" + text_ +
              "\""),
        field(std::move(field_)),
        text(std::move(text_)) {}
};

struct SchemaVersionUnsupported : Error {
  std::string version;
  explicit SchemaVersionUnsupported(std::string version_)
      : Error("unsupported schema_version: \"" + version_ + "\""),
        version(std::move(version_)) {}
};

struct MismatchedInputs : Error {
  using Error::Error;
};

}  // namespace isr

#endif  // ISR_ERRORS_HPP
