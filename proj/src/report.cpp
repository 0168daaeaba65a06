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

#include "isr/report.hpp"

#include <json.hpp>

#include <sstream>

namespace isr {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string describe(const ViolatedCondition& v) {
  switch (v.kind) {
    case ViolatedCondition::Kind::NonNegativity:
      return "non-negativity, " + to_string(*v.firm) + ": share is " +
             format_util(v.amount) + " below zero";
    case ViolatedCondition::Kind::Efficiency:
      return "efficiency: share sum differs from the operational total by " +
             format_util(v.amount);
    case ViolatedCondition::Kind::IndividualRationality:
      return "individual rationality, " + to_string(*v.firm) +
             ": exceeds the stand-alone cost by " + format_util(v.amount);
  }
  return {};
}

std::string condition_name(ViolatedCondition::Kind kind) {
  switch (kind) {
    case ViolatedCondition::Kind::NonNegativity:
      return "non_negativity";
    case ViolatedCondition::Kind::Efficiency:
      return "efficiency";
    case ViolatedCondition::Kind::IndividualRationality:
      return "individual_rationality";
  }
  return {};
}

std::string source_name(ProposalSource source) {
  switch (source) {
    case ProposalSource::ScenarioFile:
      return "file";
    case ProposalSource::Override:
      return "override";
    case ProposalSource::None:
      break;
  }
  return {};
}

std::string emit_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "ISR cost-allocation analysis\n";
  if (!r.unit.empty()) out << "unit: " << r.unit << "\n";
  out << "provider: " << r.provider.label << "\n";
  out << "receiver: " << r.receiver.label << "\n\n";

  out << "traditional cost, provider (discharge): "
      << format_util(r.traditional_provider) << "\n";
  out << "traditional cost, receiver (purchasing): "
      << format_util(r.traditional_receiver) << "\n";
  if (r.breakdown) {
    out << "operational breakdown: treatment "
        << format_util(r.breakdown->treatment) << ", transportation "
        << format_util(r.breakdown->transportation) << ", transaction "
        << format_util(r.breakdown->transaction) << "\n";
  }
  out << "operational total: " << format_util(r.operational_total) << "\n";
  out << "total saving: " << format_util(r.saving) << "\n\n";

  out << "stable range for the provider share: ["
      << format_util(r.segment.provider_lower) << ", "
      << format_util(r.segment.provider_upper) << "]\n";
  out << "  alpha: provider " << format_util(r.segment.alpha.provider_share)
      << ", receiver " << format_util(r.segment.alpha.receiver_share) << "\n";
  out << "  beta: provider " << format_util(r.segment.beta.provider_share)
      << ", receiver " << format_util(r.segment.beta.receiver_share) << "\n";
  out << "  clamp active: " << (r.segment.clamp_active ? "yes" : "no") << "\n";
  out << "shapley point: provider "
      << format_util(r.shapley_point.provider_share) << ", receiver "
      << format_util(r.shapley_point.receiver_share) << "\n";

  if (r.proposal) {
    out << "\nproposal (from " << source_name(r.proposal_source)
        << "): provider " << format_util(r.proposal->provider_share)
        << ", receiver " << format_util(r.proposal->receiver_share) << "\n";
    const Verdict& v = *r.verdict;
    out << "verdict: " << (v.stable ? "stable" : "not stable") << ", "
        << (v.fair ? "fair" : "not fair") << "\n";
    if (!v.violations.empty()) {
      out << "  violations:\n";
      for (const ViolatedCondition& violation : v.violations) {
        out << "    - " << describe(violation) << "\n";
      }
    }
    out << "  shapley distance from proposal: "
        << format_util(v.shapley_distance) << "\n";
  }

  if (!r.warnings.empty()) {
    out << "\nwarnings:\n";
    for (const std::string& w : r.warnings) out << "  - " << w << "\n";
  }
  return out.str();
}

ordered_json allocation_json(const Allocation& a) {
  return ordered_json{{"provider", format_util(a.provider_share)},
                      {"receiver", format_util(a.receiver_share)}};
}

std::string emit_json(const AnalysisReport& r) {
  ordered_json doc;
  doc["schema_version"] = "1";
  if (!r.unit.empty()) doc["unit"] = r.unit;
  doc["provider"] = {{"label", r.provider.label}};
  doc["receiver"] = {{"label", r.receiver.label}};

  ordered_json game;
  game["traditional_provider"] = format_util(r.traditional_provider);
  game["traditional_receiver"] = format_util(r.traditional_receiver);
  game["operational_total"] = format_util(r.operational_total);
  if (r.breakdown) {
    game["operational_breakdown"] = {
        {"treatment", format_util(r.breakdown->treatment)},
        {"transportation", format_util(r.breakdown->transportation)},
        {"transaction", format_util(r.breakdown->transaction)}};
  }
  game["total_saving"] = format_util(r.saving);
  doc["game"] = std::move(game);

  ordered_json segment;
  segment["provider_lower"] = format_util(r.segment.provider_lower);
  segment["provider_upper"] = format_util(r.segment.provider_upper);
  segment["alpha"] = allocation_json(r.segment.alpha);
  segment["beta"] = allocation_json(r.segment.beta);
  segment["clamp_active"] = r.segment.clamp_active;
  doc["core_segment"] = std::move(segment);

  doc["shapley"] = allocation_json(r.shapley_point);

  if (r.proposal) {
    ordered_json proposal = allocation_json(*r.proposal);
    proposal["source"] = source_name(r.proposal_source);
    doc["proposal"] = std::move(proposal);

    const Verdict& v = *r.verdict;
    ordered_json verdict;
    verdict["stable"] = v.stable;
    verdict["fair"] = v.fair;
    verdict["violations"] = ordered_json::array();
    for (const ViolatedCondition& violation : v.violations) {
      ordered_json item;
      item["condition"] = condition_name(violation.kind);
      if (violation.firm) item["firm"] = to_string(*violation.firm);
      item["amount"] = format_util(violation.amount);
      verdict["violations"].push_back(std::move(item));
    }
    verdict["shapley_distance"] = format_util(v.shapley_distance);
    doc["verdict"] = std::move(verdict);
  }

  doc["warnings"] = r.warnings;
  return doc.dump(2) + "\n";
}

}  // namespace

AnalysisReport analyze(const Scenario& scenario,
                       const std::optional<Allocation>& override_proposal) {
  const IsrGame game = scenario_game(scenario);

  AnalysisReport report;
  report.unit = scenario.unit;
  report.provider = scenario.provider;
  report.receiver = scenario.receiver;
  report.traditional_provider = game.traditional_provider();
  report.traditional_receiver = game.traditional_receiver();
  report.operational_total = game.operational_total();
  report.breakdown = game.breakdown();
  report.saving = total_saving(game);
  report.segment = core_segment(game);
  report.shapley_point = shapley(game);

  if (override_proposal) {
    report.proposal = *override_proposal;
    report.proposal_source = ProposalSource::Override;
  } else if (scenario.proposal) {
    report.proposal = *scenario.proposal;
    report.proposal_source = ProposalSource::ScenarioFile;
  }
  if (report.proposal) {
    report.verdict = classify(game, *report.proposal);
  }

  for (const FirmSide side : {FirmSide::Provider, FirmSide::Receiver}) {
    const Util& share = side == FirmSide::Provider
                            ? report.shapley_point.provider_share
                            : report.shapley_point.receiver_share;
    if (share < 0) {
      report.warnings.push_back("negative shapley share for " +
                                to_string(side) + ": " + format_util(share));
    }
  }
  return report;
}

std::string emit_report(const AnalysisReport& report, ReportFormat format) {
  return format == ReportFormat::Text ? emit_text(report) : emit_json(report);
}

}  // namespace isr
