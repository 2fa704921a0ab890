// Copyright 2026 The Authors.
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

#include <exception>
#include <functional>
#include <iostream>
#include <string>

#ifdef QUICKEST_CLI11_SINGLE_HEADER
#include "CLI11.hpp"
#else
#include "CLI/CLI.hpp"
#endif
#include "commands.h"
#include "nlohmann/json.hpp"
#include "quickest/errors.h"
#include "quickest/rational.h"

namespace {

using quickest::cli::CommandOptions;

int ReportError(const char* kind, const std::string& message, int code) {
  std::cerr << nlohmann::json{{"error", kind}, {"message", message}}.dump()
            << "\n";
  return code;
}

int Dispatch(const std::function<int(const CommandOptions&, std::ostream&)>& run,
             const CommandOptions& options) {
  namespace cli = quickest::cli;
  try {
    return run(options, std::cout);
  } catch (const quickest::InfeasibleForeverError& e) {
    return ReportError("infeasible-forever", e.what(), cli::kInfeasibleForever);
  } catch (const quickest::InputError& e) {
    return ReportError("input", e.what(), cli::kInputError);
  } catch (const std::invalid_argument& e) {
    return ReportError("input", e.what(), cli::kInputError);
  } catch (const quickest::CapExceededError& e) {
    return ReportError("resource-cap", e.what(), cli::kResourceCap);
  } catch (const quickest::TruncatedProfileError& e) {
    return ReportError("resource-cap", e.what(), cli::kResourceCap);
  } catch (const std::exception& e) {
    return ReportError("internal", e.what(), cli::kInternalError);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quickest transshipment solver"};
  app.require_subcommand(1);

  CommandOptions options;
  std::string theta_text;
  std::function<int(const CommandOptions&, std::ostream&)> run;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", options.input, "Instance JSON file")
        ->required();
  };
  auto add_theta = [&](CLI::App* sub) {
    sub->add_option("--theta", theta_text, "Time horizon, e.g. 5 or 7/3")
        ->required();
  };
  auto add_algo = [&](CLI::App* sub) {
    sub->add_option("--algo", options.algo, "simple, jumps or both")
        ->check(CLI::IsMember({"simple", "jumps", "both"}));
  };
  auto add_bf_cap = [&](CLI::App* sub) {
    sub->add_option("--bf-cap", options.bf_cap,
                    "Largest terminal count for brute-force minimization");
  };
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", options.json, "Machine-readable output");
  };

  CLI::App* solve = app.add_subcommand("solve", "Compute the quickest horizon");
  add_input(solve);
  add_algo(solve);
  add_bf_cap(solve);
  add_json(solve);
  solve->callback([&] { run = quickest::cli::RunSolve; });

  CLI::App* feas = app.add_subcommand("feas", "Test feasibility of a horizon");
  add_input(feas);
  add_theta(feas);
  add_bf_cap(feas);
  add_json(feas);
  feas->callback([&] { run = quickest::cli::RunFeas; });

  CLI::App* oracle =
      app.add_subcommand("oracle", "Quickest horizon by subset enumeration");
  add_input(oracle);
  add_bf_cap(oracle);
  add_json(oracle);
  oracle->callback([&] { run = quickest::cli::RunOracle; });

  CLI::App* extract =
      app.add_subcommand("extract", "Write a transshipment over time as JSON");
  add_input(extract);
  add_theta(extract);
  extract->add_option("--expansion-cap", options.expansion_cap,
                      "Node limit of the time-expanded network");
  extract->callback([&] { run = quickest::cli::RunExtract; });

  CLI::App* trace = app.add_subcommand("trace", "Print solver iterations");
  add_input(trace);
  add_algo(trace);
  add_bf_cap(trace);
  add_json(trace);
  trace->callback([&] { run = quickest::cli::RunTrace; });

  CLI::App* bench =
      app.add_subcommand("bench", "Compare both solvers on a seeded corpus");
  bench->add_option("--seed", options.seed, "First corpus seed");
  bench->add_option("--count", options.count, "Number of instances");
  bench->add_option("--csv", options.csv,
                    "Output CSV; envelope samples go to <stem>_envelope.csv");
  add_bf_cap(bench);
  bench->callback([&] { run = quickest::cli::RunBench; });

  CLI::App* generate =
      app.add_subcommand("generate", "Write a random instance as JSON");
  generate->add_option("--seed", options.seed, "Generator seed");
  auto* nodes = generate->add_option("--nodes", options.generator.nodes);
  auto* arcs = generate->add_option("--arcs", options.generator.arcs);
  auto* terminals =
      generate->add_option("--terminals", options.generator.terminals);
  generate->add_option("--max-capacity", options.generator.max_capacity);
  generate->add_option("--max-transit", options.generator.max_transit);
  generate->add_option("--max-supply", options.generator.max_supply);
  generate->callback([&] {
    options.explicit_generator =
        nodes->count() > 0 || arcs->count() > 0 || terminals->count() > 0;
    run = quickest::cli::RunGenerate;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return ReportError("input", e.what(), quickest::cli::kInputError);
  }
  if (!theta_text.empty()) {
    try {
      options.theta = quickest::ParseRat(theta_text);
    } catch (const std::invalid_argument& e) {
      return ReportError("input", e.what(), quickest::cli::kInputError);
    }
  }
  return Dispatch(run, options);
}
