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

#ifndef ISR_REPORT_HPP
#define ISR_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "isr/allocation.hpp"
#include "isr/scenario.hpp"

namespace isr {

// Where the checked proposal came from.
enum class ProposalSource { None, ScenarioFile, Override };

// Full analysis result for one scenario: game summary, stable segment,
// Shapley point, and (when a proposal was supplied) the verdict.
struct AnalysisReport {
  std::string unit;
  Scenario::Firm provider;
  Scenario::Firm receiver;

  Util traditional_provider;
  Util traditional_receiver;
  Util operational_total;
  std::optional<OperationalBreakdown> breakdown;
  Util saving;

  CoreSegment segment;
  Allocation shapley_point;

  ProposalSource proposal_source = ProposalSource::None;
  std::optional<Allocation> proposal;
  std::optional<Verdict> verdict;

  std::vector<std::string> warnings;
};

enum class ReportFormat { Text, Json };

// Runs the full analysis. A proposal passed here overrides one embedded in
// the scenario; the report records which source was used. Throws what
// scenario_game throws.
AnalysisReport analyze(const Scenario& scenario,
                       const std::optional<Allocation>& override_proposal);

// Renders the report. Deterministic: identical reports yield byte-identical
// output. JSON uses a stable key order; every numeric field is an exact
// decimal or fraction string.
std::string emit_report(const AnalysisReport& report, ReportFormat format);

}  // namespace isr

#endif  // ISR_REPORT_HPP
