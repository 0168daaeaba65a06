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

#include "isr/scenario.hpp"

#include <json.hpp>

#include <initializer_list>
#include <string>

#include "isr/errors.hpp"

namespace isr {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

void reject_unknown_fields(const json& obj, const std::string& where,
                           std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool known = false;
    for (const char* name : allowed) {
      if (key == name) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw UnknownField(where.empty() ? key : where + "." + key);
    }
  }
}

const json& require_field(const json& obj, const std::string& where,
                          const char* name) {
  const auto it = obj.find(name);
  if (it == obj.end()) {
    throw ParseError(where.empty() ? name : where + "." + name,
                     "required field is missing");
  }
  return *it;
}

std::string get_string(const json& obj, const std::string& where,
                       const char* name) {
  const json& v = require_field(obj, where, name);
  if (!v.is_string()) {
    throw ParseError(where + "." + name, "expected a string");
  }
  return v.get<std::string>();
}

const json& require_object(const json& obj, const std::string& where,
                           const char* name) {
  const json& v = require_field(obj, where, name);
  if (!v.is_object()) {
    throw ParseError(where.empty() ? name : where + "." + name,
                     "expected an object");
  }
  return v;
}

// Cost values travel as decimal strings. Integer JSON numbers are accepted
// as well (they are exact); anything float-typed is refused so no binary
// rounding can sneak in.
Util get_decimal(const json& obj, const std::string& field) {
  if (obj.is_string()) {
    const auto text = obj.get<std::string>();
    const auto parsed = parse_decimal(text);
    if (!parsed) throw BadDecimal(field, text);
    return *parsed;
  }
  if (obj.is_number_integer()) {
    return Util(obj.get<std::int64_t>());
  }
  if (obj.is_number_unsigned()) {
    return Util(obj.get<std::uint64_t>());
  }
  throw BadDecimal(field, obj.dump());
}

Util get_cost(const json& parent, const std::string& where, const char* name) {
  const std::string field = where.empty() ? name : where + "." + name;
  Util value = get_decimal(require_field(parent, where, name), field);
  if (value < 0) throw NegativeCost(field, value);
  return value;
}

}  // namespace

Scenario load_scenario(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("document", "expected a JSON object");
  }
  reject_unknown_fields(doc, "", {"schema_version", "unit", "provider",
                                  "receiver", "traditional", "operational",
                                  "proposal"});

  Scenario scenario;
  scenario.schema_version = get_string(doc, "", "schema_version");
  if (scenario.schema_version != "1") {
    throw SchemaVersionUnsupported(scenario.schema_version);
  }
  if (doc.contains("unit")) {
    scenario.unit = get_string(doc, "", "unit");
  }

  const json& provider = require_object(doc, "", "provider");
  reject_unknown_fields(provider, "provider", {"label", "resource_out"});
  scenario.provider.label = get_string(provider, "provider", "label");
  if (provider.contains("resource_out")) {
    scenario.provider.resource = get_string(provider, "provider", "resource_out");
  }

  const json& receiver = require_object(doc, "", "receiver");
  reject_unknown_fields(receiver, "receiver", {"label", "resource_in"});
  scenario.receiver.label = get_string(receiver, "receiver", "label");
  if (receiver.contains("resource_in")) {
    scenario.receiver.resource = get_string(receiver, "receiver", "resource_in");
  }

  const json& traditional = require_object(doc, "", "traditional");
  reject_unknown_fields(traditional, "traditional", {"discharge", "purchasing"});
  scenario.discharge = get_cost(traditional, "traditional", "discharge");
  scenario.purchasing = get_cost(traditional, "traditional", "purchasing");

  const json& operational = require_object(doc, "", "operational");
  reject_unknown_fields(operational, "operational",
                        {"total", "treatment", "transportation", "transaction"});
  const bool has_total = operational.contains("total");
  const bool has_breakdown = operational.contains("treatment") ||
                             operational.contains("transportation") ||
                             operational.contains("transaction");
  if (!has_total && !has_breakdown) {
    throw ParseError("operational",
                     "needs either a total or an itemized breakdown");
  }
  if (has_breakdown) {
    OperationalBreakdown breakdown;
    breakdown.treatment = get_cost(operational, "operational", "treatment");
    breakdown.transportation =
        get_cost(operational, "operational", "transportation");
    breakdown.transaction = get_cost(operational, "operational", "transaction");
    scenario.operational_total = breakdown.total();
    scenario.breakdown = std::move(breakdown);
    if (has_total) {
      const Util stated = get_cost(operational, "operational", "total");
      if (stated != scenario.operational_total) {
        throw ParseError("operational.total",
                         "breakdown sums to " +
                             format_util(scenario.operational_total) +
                             " but total says " + format_util(stated));
      }
    }
  } else {
    scenario.operational_total = get_cost(operational, "operational", "total");
  }

  if (doc.contains("proposal")) {
    const json& proposal = require_object(doc, "", "proposal");
    reject_unknown_fields(proposal, "proposal",
                          {"provider_share", "receiver_share"});
    Allocation shares;
    shares.provider_share = get_decimal(
        require_field(proposal, "proposal", "provider_share"),
        "proposal.provider_share");
    shares.receiver_share = get_decimal(
        require_field(proposal, "proposal", "receiver_share"),
        "proposal.receiver_share");
    scenario.proposal = std::move(shares);
  }

  return scenario;
}

namespace {

std::string emit_cost(const Util& value, const char* what) {
  if (!decimal_representable(value)) {
    throw Error(std::string(what) +
                " is not representable as a plain decimal: " +
                format_util(value));
  }
  return format_util(value);
}

}  // namespace

std::string emit_scenario(const Scenario& scenario) {
  if (scenario.breakdown &&
      scenario.breakdown->total() != scenario.operational_total) {
    throw Error("scenario breakdown does not sum to its operational total");
  }

  ordered_json doc;
  doc["schema_version"] = scenario.schema_version;
  if (!scenario.unit.empty()) doc["unit"] = scenario.unit;

  doc["provider"]["label"] = scenario.provider.label;
  if (!scenario.provider.resource.empty()) {
    doc["provider"]["resource_out"] = scenario.provider.resource;
  }
  doc["receiver"]["label"] = scenario.receiver.label;
  if (!scenario.receiver.resource.empty()) {
    doc["receiver"]["resource_in"] = scenario.receiver.resource;
  }

  doc["traditional"]["discharge"] =
      emit_cost(scenario.discharge, "traditional.discharge");
  doc["traditional"]["purchasing"] =
      emit_cost(scenario.purchasing, "traditional.purchasing");

  if (scenario.breakdown) {
    doc["operational"]["treatment"] =
        emit_cost(scenario.breakdown->treatment, "operational.treatment");
    doc["operational"]["transportation"] = emit_cost(
        scenario.breakdown->transportation, "operational.transportation");
    doc["operational"]["transaction"] =
        emit_cost(scenario.breakdown->transaction, "operational.transaction");
  } else {
    doc["operational"]["total"] =
        emit_cost(scenario.operational_total, "operational.total");
  }

  if (scenario.proposal) {
    doc["proposal"]["provider_share"] =
        emit_cost(scenario.proposal->provider_share, "proposal.provider_share");
    doc["proposal"]["receiver_share"] =
        emit_cost(scenario.proposal->receiver_share, "proposal.receiver_share");
  }

  return doc.dump(2) + "\n";
}

IsrGame scenario_game(const Scenario& scenario) {
  FirmRole provider{FirmSide::Provider, scenario.provider.label};
  FirmRole receiver{FirmSide::Receiver, scenario.receiver.label};
  TraditionalCosts traditional{scenario.discharge, scenario.purchasing};
  if (scenario.breakdown) {
    return build_isr_game(std::move(provider), std::move(receiver),
                          std::move(traditional), *scenario.breakdown);
  }
  return build_isr_game(std::move(provider), std::move(receiver),
                        std::move(traditional), scenario.operational_total);
}

}  // namespace isr
