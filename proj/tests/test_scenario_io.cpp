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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <regex>
#include <string>

#include "isr/errors.hpp"
#include "isr/report.hpp"
#include "isr/scenario.hpp"
#include "isr/svg_plot.hpp"
#include "support/generators.hpp"

using isr::Scenario;
using isr::Util;

namespace {

const char* kGoldenScenario = R"({
  "schema_version": "1",
  "unit": "util",
  "provider": {"label": "A: glass manufacturer", "resource_out": "glass powder"},
  "receiver": {"label": "B: ceramics manufacturer", "resource_in": "recycled glass powder"},
  "traditional": {"discharge": "7", "purchasing": "11"},
  "operational": {"total": "15"}
})";

std::string with_field(const std::string& body, const std::string& find,
                       const std::string& replace) {
  std::string out = body;
  const auto at = out.find(find);
  REQUIRE(at != std::string::npos);
  out.replace(at, find.size(), replace);
  return out;
}

// Pulls a quoted attribute value out of the element with the given id.
std::string svg_attr(const std::string& svg, const std::string& id,
                     const std::string& attr) {
  const std::regex pattern("id=\"" + id + "\"[^>]*" + attr + "=\"([^\"]+)\"");
  std::smatch match;
  REQUIRE(std::regex_search(svg, match, pattern));
  return match[1];
}

}  // namespace

TEST_CASE("load_scenario reads the documented schema") {
  const Scenario s = isr::load_scenario(kGoldenScenario);
  CHECK(s.schema_version == "1");
  CHECK(s.unit == "util");
  CHECK(s.provider.label == "A: glass manufacturer");
  CHECK(s.provider.resource == "glass powder");
  CHECK(s.receiver.resource == "recycled glass powder");
  CHECK(s.discharge == Util(7));
  CHECK(s.purchasing == Util(11));
  CHECK(s.operational_total == Util(15));
  CHECK(!s.breakdown.has_value());
  CHECK(!s.proposal.has_value());

  const isr::IsrGame game = isr::scenario_game(s);
  CHECK(game.operational_total() == Util(15));
}

TEST_CASE("load_scenario keeps itemized breakdowns") {
  const std::string text = with_field(
      kGoldenScenario, R"("operational": {"total": "15"})",
      R"("operational": {"treatment": "10", "transportation": "3", "transaction": "2"})");
  const Scenario s = isr::load_scenario(text);
  REQUIRE(s.breakdown.has_value());
  CHECK(s.breakdown->treatment == Util(10));
  CHECK(s.breakdown->transportation == Util(3));
  CHECK(s.breakdown->transaction == Util(2));
  CHECK(s.operational_total == Util(15));

  SUBCASE("a consistent total alongside the breakdown is fine") {
    const std::string both = with_field(
        kGoldenScenario, R"("operational": {"total": "15"})",
        R"("operational": {"total": "15", "treatment": "10", "transportation": "3", "transaction": "2"})");
    CHECK(isr::load_scenario(both).operational_total == Util(15));
  }
  SUBCASE("a conflicting total is a parse error") {
    const std::string conflict = with_field(
        kGoldenScenario, R"("operational": {"total": "15"})",
        R"("operational": {"total": "14", "treatment": "10", "transportation": "3", "transaction": "2"})");
    CHECK_THROWS_AS(isr::load_scenario(conflict), isr::ParseError);
  }
}

TEST_CASE("load_scenario rejects malformed documents") {
  SUBCASE("negative cost names the field") {
    const std::string text =
        with_field(kGoldenScenario, R"("purchasing": "11")",
                   R"("purchasing": "-1")");
    try {
      isr::load_scenario(text);
      FAIL("expected NegativeCost");
    } catch (const isr::NegativeCost& e) {
      CHECK(e.where == "traditional.purchasing");
    }
  }
  SUBCASE("bad decimals name field and text") {
    for (const char* bad : {R"("1e3")", R"("")", R"(".")", R"("1/3")"}) {
      const std::string text = with_field(
          kGoldenScenario, R"("discharge": "7")",
          std::string(R"("discharge": )") + bad);
      CAPTURE(bad);
      CHECK_THROWS_AS(isr::load_scenario(text), isr::BadDecimal);
    }
  }
  SUBCASE("float JSON numbers are refused, integers accepted") {
    CHECK_THROWS_AS(
        isr::load_scenario(with_field(kGoldenScenario, R"("discharge": "7")",
                                      R"("discharge": 7.5)")),
        isr::BadDecimal);
    const Scenario s = isr::load_scenario(with_field(
        kGoldenScenario, R"("discharge": "7")", R"("discharge": 7)"));
    CHECK(s.discharge == Util(7));
  }
  SUBCASE("unknown fields are rejected with their path") {
    try {
      isr::load_scenario(with_field(kGoldenScenario, R"("total": "15")",
                                    R"("total": "15", "totall": "15")"));
      FAIL("expected UnknownField");
    } catch (const isr::UnknownField& e) {
      CHECK(e.field == "operational.totall");
    }
  }
  SUBCASE("unsupported schema version") {
    CHECK_THROWS_AS(
        isr::load_scenario(with_field(kGoldenScenario, R"("schema_version": "1")",
                                      R"("schema_version": "2")")),
        isr::SchemaVersionUnsupported);
  }
  SUBCASE("missing required fields") {
    CHECK_THROWS_AS(isr::load_scenario(R"({"schema_version": "1"})"),
                    isr::ParseError);
    CHECK_THROWS_AS(
        isr::load_scenario(with_field(kGoldenScenario,
                                      R"("operational": {"total": "15"})",
                                      R"("operational": {})")),
        isr::ParseError);
  }
  SUBCASE("broken JSON reports a location") {
    CHECK_THROWS_AS(isr::load_scenario("{\"schema_version\": "),
                    isr::ParseError);
    CHECK_THROWS_AS(isr::load_scenario("[1, 2]"), isr::ParseError);
  }
  SUBCASE("proposal shares may be negative") {
    const std::string text = with_field(
        kGoldenScenario, R"("operational": {"total": "15"})",
        R"("operational": {"total": "15"}, "proposal": {"provider_share": "-1", "receiver_share": "16"})");
    const Scenario s = isr::load_scenario(text);
    REQUIRE(s.proposal.has_value());
    CHECK(s.proposal->provider_share == Util(-1));
  }
}

TEST_CASE("scenario round-trip preserves every cost rational") {
  isr::testgen::Rng rng(10);
  for (int i = 0; i < 300; ++i) {
    Scenario s;
    s.unit = i % 2 ? "kEUR" : "";
    s.provider.label = "P";
    s.receiver.label = "R";
    const Util a = isr::testgen::random_decimal(rng);
    const Util b = isr::testgen::random_decimal(rng);
    s.discharge = a;
    s.purchasing = b;
    if (i % 3 == 0) {
      isr::OperationalBreakdown breakdown;
      // scale into the feasible band so the scenario stays loadable
      breakdown.treatment = a / 4;
      breakdown.transportation = b / 4;
      breakdown.transaction = Util(1, 10);
      if (breakdown.total() > a + b) continue;
      s.breakdown = breakdown;
      s.operational_total = breakdown.total();
    } else {
      s.operational_total = (a + b) / 2;
    }
    if (i % 5 == 0) {
      s.proposal = isr::Allocation{isr::testgen::random_decimal(rng),
                                   -isr::testgen::random_decimal(rng)};
    }

    const std::string emitted = isr::emit_scenario(s);
    const Scenario back = isr::load_scenario(emitted);
    CHECK(back.discharge == s.discharge);
    CHECK(back.purchasing == s.purchasing);
    CHECK(back.operational_total == s.operational_total);
    CHECK(back.breakdown.has_value() == s.breakdown.has_value());
    if (s.breakdown) {
      CHECK(back.breakdown->treatment == s.breakdown->treatment);
      CHECK(back.breakdown->transportation == s.breakdown->transportation);
      CHECK(back.breakdown->transaction == s.breakdown->transaction);
    }
    if (s.proposal) {
      REQUIRE(back.proposal.has_value());
      CHECK(back.proposal->provider_share == s.proposal->provider_share);
      CHECK(back.proposal->receiver_share == s.proposal->receiver_share);
    }
    CHECK(isr::emit_scenario(back) == emitted);
  }
}

TEST_CASE("emit_scenario refuses non-decimal rationals") {
  Scenario s;
  s.provider.label = "P";
  s.receiver.label = "R";
  s.discharge = Util(1, 3);
  s.purchasing = Util(1);
  s.operational_total = Util(1);
  CHECK_THROWS_AS(isr::emit_scenario(s), isr::Error);
}

TEST_CASE("analysis reports") {
  const Scenario s = isr::load_scenario(kGoldenScenario);

  SUBCASE("json form carries the allocation strings") {
    const isr::AnalysisReport report =
        isr::analyze(s, isr::Allocation{Util(7), Util(8)});
    const std::string bytes = isr::emit_report(report, isr::ReportFormat::Json);
    const nlohmann::json doc = nlohmann::json::parse(bytes);
    CHECK(doc["shapley"]["provider"] == "5.5");
    CHECK(doc["shapley"]["receiver"] == "9.5");
    CHECK(doc["game"]["total_saving"] == "3");
    CHECK(doc["core_segment"]["alpha"]["provider"] == "4");
    CHECK(doc["core_segment"]["beta"]["provider"] == "7");
    CHECK(doc["core_segment"]["clamp_active"] == false);
    CHECK(doc["proposal"]["source"] == "override");
    CHECK(doc["verdict"]["stable"] == true);
    CHECK(doc["verdict"]["fair"] == false);
    CHECK(doc["verdict"]["shapley_distance"] == "3");
    CHECK(doc["warnings"].empty());
  }

  SUBCASE("file proposal is used when no override is given") {
    const std::string text = with_field(
        kGoldenScenario, R"("operational": {"total": "15"})",
        R"("operational": {"total": "15"}, "proposal": {"provider_share": "5.5", "receiver_share": "9.5"})");
    const isr::AnalysisReport report =
        isr::analyze(isr::load_scenario(text), std::nullopt);
    CHECK(report.proposal_source == isr::ProposalSource::ScenarioFile);
    REQUIRE(report.verdict.has_value());
    CHECK(report.verdict->fair);
  }

  SUBCASE("identical reports are byte-identical") {
    const isr::AnalysisReport report = isr::analyze(s, std::nullopt);
    for (const auto format :
         {isr::ReportFormat::Text, isr::ReportFormat::Json}) {
      CHECK(isr::emit_report(report, format) ==
            isr::emit_report(isr::analyze(s, std::nullopt), format));
    }
  }

  SUBCASE("zero-cost relation prints a zero saving") {
    Scenario zero;
    zero.provider.label = "P";
    zero.receiver.label = "R";
    zero.discharge = Util(0);
    zero.purchasing = Util(0);
    zero.operational_total = Util(0);
    const std::string text = isr::emit_report(isr::analyze(zero, std::nullopt),
                                              isr::ReportFormat::Text);
    CHECK(text.find("total saving: 0") != std::string::npos);
  }

  SUBCASE("negative fair share raises a warning") {
    Scenario lopsided;
    lopsided.provider.label = "P";
    lopsided.receiver.label = "R";
    lopsided.discharge = Util(1);
    lopsided.purchasing = Util(10);
    lopsided.operational_total = Util(1);
    const isr::AnalysisReport report = isr::analyze(lopsided, std::nullopt);
    REQUIRE(report.warnings.size() == 1);
    CHECK(report.warnings[0].find("negative shapley share for provider") !=
          std::string::npos);
    CHECK(report.segment.clamp_active);
  }
}

TEST_CASE("svg rendering") {
  const Scenario s = isr::load_scenario(kGoldenScenario);
  const isr::IsrGame game = isr::scenario_game(s);
  const isr::CoreSegment segment = isr::core_segment(game);
  const isr::Allocation fair_point = isr::shapley(game);

  SUBCASE("deterministic bytes") {
    CHECK(isr::render_core_plot(segment, fair_point, game) ==
          isr::render_core_plot(segment, fair_point, game));
  }

  SUBCASE("gamma sits at the rendered segment midpoint") {
    const std::string svg = isr::render_core_plot(segment, fair_point, game);
    const double ax = std::stod(svg_attr(svg, "alpha", "cx"));
    const double ay = std::stod(svg_attr(svg, "alpha", "cy"));
    const double bx = std::stod(svg_attr(svg, "beta", "cx"));
    const double by = std::stod(svg_attr(svg, "beta", "cy"));
    const double gx = std::stod(svg_attr(svg, "gamma", "cx"));
    const double gy = std::stod(svg_attr(svg, "gamma", "cy"));
    CHECK(std::abs(gx - (ax + bx) / 2) <= 0.001);
    CHECK(std::abs(gy - (ay + by) / 2) <= 0.001);
    CHECK(svg.find("id=\"efficiency-line\"") != std::string::npos);
    CHECK(svg.find("id=\"core-segment\"") != std::string::npos);
    CHECK(svg.find("id=\"guide-provider-cap\"") != std::string::npos);
  }

  SUBCASE("degenerate segment collapses to one marker") {
    const isr::IsrGame flat = isr::build_isr_game(
        {isr::FirmSide::Provider, "A"}, {isr::FirmSide::Receiver, "B"},
        {Util(4), Util(6)}, Util(10));
    const std::string svg = isr::render_core_plot(
        isr::core_segment(flat), isr::shapley(flat), flat);
    CHECK(svg.find("&#945; = &#946; = &#947;") != std::string::npos);
    CHECK(svg.find("id=\"beta\"") == std::string::npos);
  }

  SUBCASE("clamped lower bound puts alpha on the vertical axis") {
    const isr::IsrGame clamped = isr::build_isr_game(
        {isr::FirmSide::Provider, "A"}, {isr::FirmSide::Receiver, "B"},
        {Util(1), Util(10)}, Util(1));
    const isr::CoreSegment cs = isr::core_segment(clamped);
    const std::string svg =
        isr::render_core_plot(cs, isr::shapley(clamped), clamped);
    CHECK(svg_attr(svg, "alpha", "cx") == svg_attr(svg, "axis-y", "x1"));
  }

  SUBCASE("inputs from different games are rejected") {
    CHECK_THROWS_AS(
        isr::render_core_plot(segment, isr::Allocation{Util(1), Util(1)}, game),
        isr::MismatchedInputs);
    const isr::IsrGame other = isr::build_isr_game(
        {isr::FirmSide::Provider, "A"}, {isr::FirmSide::Receiver, "B"},
        {Util(2), Util(2)}, Util(3));
    CHECK_THROWS_AS(isr::render_core_plot(segment, fair_point, other),
                    isr::MismatchedInputs);
  }
}
