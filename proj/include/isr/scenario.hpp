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

#ifndef ISR_SCENARIO_HPP
#define ISR_SCENARIO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "isr/allocation.hpp"
#include "isr/isr_game.hpp"

namespace isr {

// One scenario file describes exactly one bilateral relation. Costs are
// carried as decimal strings in the file and parsed to exact rationals here.
// Schema: docs/scenario_schema.md; current schema_version is "1".
struct Scenario {
  struct Firm {
    std::string label;
    std::string resource;  // resource_out (provider) / resource_in (receiver)
  };

  std::string schema_version = "1";
  std::string unit;  // free-text cost unit, echoed in reports, never interpreted
  Firm provider;
  Firm receiver;
  Util discharge;    // provider's traditional cost
  Util purchasing;   // receiver's traditional cost
  std::optional<OperationalBreakdown> breakdown;
  Util operational_total;
  std::optional<Allocation> proposal;
};

// Parses and validates a scenario document (JSON). Unknown fields are
// rejected, every cost must match the decimal grammar and be non-negative
// (proposal shares may be any rational), and an itemized breakdown given
// together with a total must sum to it exactly.
//
// Throws ParseError, UnknownField, BadDecimal, NegativeCost, or
// SchemaVersionUnsupported.
Scenario load_scenario(std::string_view bytes);

// Serializes a scenario back to schema JSON. Inverse of load_scenario:
// loading the output reproduces every cost rational exactly. Throws Error if
// a cost is not representable as a plain decimal.
std::string emit_scenario(const Scenario& scenario);

// Builds the validated game for a scenario (may throw InfeasibleIsr).
IsrGame scenario_game(const Scenario& scenario);

}  // namespace isr

#endif  // ISR_SCENARIO_HPP
