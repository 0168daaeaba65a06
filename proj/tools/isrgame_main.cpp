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
//
// Decision-support front end. Exit codes:
//   0  success (verify: proposal stable and fair)
//   1  input error (unreadable file, parse error, infeasible relation)
//   2  verify: proposal stable but not fair
//   3  verify: proposal not stable
//   4  oracle-check: closed forms and brute-force oracles diverge

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "isr/allocation.hpp"
#include "isr/checks.hpp"
#include "isr/errors.hpp"
#include "isr/report.hpp"
#include "isr/scenario.hpp"
#include "isr/svg_plot.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnfair = 2;
constexpr int kExitUnstable = 3;
constexpr int kExitOracleDivergence = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw isr::Error("cannot read scenario file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw isr::Error("cannot write output file: " + path);
  out << bytes;
}

isr::Allocation parse_proposal_flag(const std::string& flag) {
  const auto comma = flag.find(',');
  if (comma == std::string::npos) {
    throw isr::Error(
        "--proposal expects two decimal shares separated by a comma, e.g. "
        "5.5,9.5");
  }
  const std::string provider_text = flag.substr(0, comma);
  const std::string receiver_text = flag.substr(comma + 1);
  const auto provider = isr::parse_decimal(provider_text);
  if (!provider) throw isr::BadDecimal("--proposal provider share", provider_text);
  const auto receiver = isr::parse_decimal(receiver_text);
  if (!receiver) throw isr::BadDecimal("--proposal receiver share", receiver_text);
  return isr::Allocation{*provider, *receiver};
}

struct CommonArgs {
  std::string scenario_path;
  std::string format = "text";
  std::string proposal_flag;
  std::string output_path;
};

void emit(const CommonArgs& args, const std::string& bytes) {
  if (args.output_path.empty()) {
    std::cout << bytes;
  } else {
    write_output(args.output_path, bytes);
  }
}

isr::AnalysisReport run_analysis(const CommonArgs& args) {
  const isr::Scenario scenario = isr::load_scenario(read_file(args.scenario_path));
  std::optional<isr::Allocation> override_proposal;
  if (!args.proposal_flag.empty()) {
    override_proposal = parse_proposal_flag(args.proposal_flag);
  }
  return isr::analyze(scenario, override_proposal);
}

isr::ReportFormat format_of(const CommonArgs& args) {
  return args.format == "json" ? isr::ReportFormat::Json
                               : isr::ReportFormat::Text;
}

int cmd_analyze(const CommonArgs& args) {
  const isr::AnalysisReport report = run_analysis(args);
  emit(args, isr::emit_report(report, format_of(args)));
  return kExitOk;
}

int cmd_verify(const CommonArgs& args) {
  const isr::AnalysisReport report = run_analysis(args);
  if (!report.verdict) {
    throw isr::Error(
        "verify needs a proposal: add --proposal or a proposal block in the "
        "scenario file");
  }
  emit(args, isr::emit_report(report, format_of(args)));
  if (!report.verdict->stable) return kExitUnstable;
  return report.verdict->fair ? kExitOk : kExitUnfair;
}

int cmd_plot(const CommonArgs& args) {
  const isr::Scenario scenario = isr::load_scenario(read_file(args.scenario_path));
  const isr::IsrGame game = isr::scenario_game(scenario);
  const std::string svg = isr::render_core_plot(isr::core_segment(game),
                                                isr::shapley(game), game);
  write_output(args.output_path, svg);
  return kExitOk;
}

// Self-test escape hatch: replays the scenario through the brute-force
// oracles and compares them with the closed forms.
int cmd_oracle_check(const CommonArgs& args) {
  const isr::Scenario scenario = isr::load_scenario(read_file(args.scenario_path));
  const isr::IsrGame game = isr::scenario_game(scenario);
  const isr::TUGame tu = isr::to_tu_game(game);

  bool ok = true;
  const auto report_line = [&ok](const std::string& what, bool agree) {
    std::cout << what << ": " << (agree ? "agree" : "DIVERGE") << "\n";
    ok = ok && agree;
  };

  report_line("subadditivity (exhaustive scan)",
              isr::is_subadditive(tu).holds);
  report_line("submodularity (exhaustive scan)", isr::is_submodular(tu).holds);

  const isr::Allocation closed = isr::shapley(game);
  const std::vector<isr::Util> oracle = isr::shapley_oracle(tu);
  report_line("shapley closed form vs permutation oracle",
              closed.provider_share == oracle[0] &&
                  closed.receiver_share == oracle[1]);

  const isr::CoreSegment segment = isr::core_segment(game);
  std::vector<std::pair<std::string, isr::Allocation>> probes = {
      {"alpha", segment.alpha},
      {"beta", segment.beta},
      {"shapley point", closed},
      {"midpoint", {(segment.alpha.provider_share +
                     segment.beta.provider_share) /
                        2,
                    (segment.alpha.receiver_share +
                     segment.beta.receiver_share) /
                        2}},
      {"out-of-core probe",
       {game.traditional_provider() + 1,
        game.operational_total() - game.traditional_provider() - 1}},
  };
  if (scenario.proposal) probes.emplace_back("file proposal", *scenario.proposal);

  for (const auto& [name, probe] : probes) {
    const bool closed_stable = isr::is_stable(game, probe).stable;
    const bool oracle_stable =
        isr::in_core_oracle(tu, {probe.provider_share, probe.receiver_share})
            .holds;
    report_line("stability closed form vs core oracle (" + name + ")",
                closed_stable == oracle_stable);
  }

  std::cout << (ok ? "oracle check passed" : "oracle check FAILED") << "\n";
  return ok ? kExitOk : kExitOracleDivergence;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Cost-allocation analysis for bilateral industrial symbiotic "
      "relations: stable-range and shapley splits, proposal verdicts, "
      "and allocation diagrams."};
  app.require_subcommand(1);

  CommonArgs args;

  const auto add_scenario = [&args](CLI::App* cmd) {
    cmd->add_option("scenario", args.scenario_path,
                    "scenario file (JSON, schema_version 1)")
        ->required();
  };
  const auto add_format = [&args](CLI::App* cmd) {
    cmd->add_option("--format", args.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  const auto add_proposal = [&args](CLI::App* cmd) {
    cmd->add_option("--proposal", args.proposal_flag,
                    "proposed split \"<provider>,<receiver>\"; overrides the "
                    "scenario's proposal block");
  };

  CLI::App* analyze = app.add_subcommand(
      "analyze", "report the game summary, stable range, and shapley split");
  add_scenario(analyze);
  add_format(analyze);
  add_proposal(analyze);
  analyze->add_option("-o,--output", args.output_path,
                      "write the report here instead of stdout");

  CLI::App* verify = app.add_subcommand(
      "verify", "judge a proposed split; exit 0 stable+fair, 2 stable only, "
                "3 unstable");
  add_scenario(verify);
  add_format(verify);
  add_proposal(verify);
  verify->add_option("-o,--output", args.output_path,
                     "write the report here instead of stdout");

  CLI::App* plot = app.add_subcommand(
      "plot", "render the allocation diagram (SVG)");
  add_scenario(plot);
  plot->add_option("-o,--output", args.output_path, "output SVG path")
      ->required();

  CLI::App* oracle = app.add_subcommand(
      "oracle-check",
      "cross-check the closed forms against brute-force oracles");
  add_scenario(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(args);
    if (app.got_subcommand(verify)) return cmd_verify(args);
    if (app.got_subcommand(plot)) return cmd_plot(args);
    return cmd_oracle_check(args);
  } catch (const isr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitError;
  }
}
