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

#include "commands.h"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"
#include "quickest/errors.h"
#include "quickest/horizon.h"
#include "quickest/instance_io.h"
#include "quickest/profile_oracle.h"
#include "quickest/sfm.h"

namespace quickest::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string ReadInput(const std::string& path) {
  if (path.empty()) throw InputError("--input is required");
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Instance LoadInstance(const CommandOptions& options) {
  return ParseInstance(ReadInput(options.input));
}

const Rat& RequireTheta(const CommandOptions& options) {
  if (!options.theta) throw InputError("--theta is required");
  if (*options.theta < 0) throw InputError("--theta must be non-negative");
  return *options.theta;
}

SolverOptions MakeSolverOptions(const CommandOptions& options) {
  SolverOptions solver;
  solver.sfm.brute_force_cap = options.bf_cap;
  return solver;
}

std::vector<Algorithm> Algorithms(const std::string& algo) {
  if (algo == "simple") return {Algorithm::kSimple};
  if (algo == "jumps") return {Algorithm::kJumps};
  if (algo == "both") return {Algorithm::kSimple, Algorithm::kJumps};
  throw InputError("--algo must be simple, jumps or both");
}

SolveResult Solve(const ProfileOracle& oracle, Algorithm algorithm,
                  const SolverOptions& options) {
  return algorithm == Algorithm::kSimple ? SolveNewtonSimple(oracle, options)
                                         : SolveNewtonJumps(oracle, options);
}

std::string SetText(TerminalSet set) {
  std::string text = "{";
  for (int i : set.members()) {
    if (text.size() > 1) text += ",";
    text += std::to_string(i);
  }
  return text + "}";
}

double Seconds(std::chrono::steady_clock::duration d) {
  return std::chrono::duration<double>(d).count();
}

Json SetJson(const ProfileOracle& oracle, TerminalSet set) {
  Json nodes = Json::array();
  for (int i : set.members()) nodes.push_back(oracle.network().terminal_node(i));
  return nodes;
}

}  // namespace

int RunSolve(const CommandOptions& options, std::ostream& out) {
  const ProfileOracle oracle(LoadInstance(options));
  const SolverOptions solver = MakeSolverOptions(options);
  std::optional<Rat> theta_star;
  Json runs = Json::array();
  for (Algorithm algorithm : Algorithms(options.algo)) {
    const SolveResult result = Solve(oracle, algorithm, solver);
    if (theta_star && *theta_star != result.theta_star) {
      throw InvariantViolation("solvers disagree: " + ToString(*theta_star) +
                               " vs " + ToString(result.theta_star));
    }
    theta_star = result.theta_star;
    runs.push_back({{"algorithm", AlgorithmName(algorithm)},
                    {"iterations", result.trace.size()}});
  }
  if (options.json) {
    Json doc = {{"theta_star", ToString(*theta_star)},
                {"decimal", ToDouble(*theta_star)},
                {"runs", runs}};
    out << doc.dump(2) << "\n";
  } else {
    out << ToString(*theta_star) << "\n" << ToDecimalString(*theta_star) << "\n";
  }
  return kOk;
}

int RunFeas(const CommandOptions& options, std::ostream& out) {
  const Rat& theta = RequireTheta(options);
  const ProfileOracle oracle(LoadInstance(options));
  SfmConfig config;
  config.brute_force_cap = options.bf_cap;
  const SfmResult min = MinimizeD(oracle, theta, config);
  const bool feasible = min.value >= 0;
  if (options.json) {
    Json doc = {{"theta", ToString(theta)}, {"feasible", feasible}};
    if (!feasible) {
      doc["violated_set"] = SetJson(oracle, min.minimizer);
      doc["d"] = ToString(min.value);
    }
    out << doc.dump(2) << "\n";
  } else if (feasible) {
    out << "feasible\n";
  } else {
    out << "infeasible\n"
        << "violated set " << FormatTerminalSet(oracle.network(), min.minimizer)
        << "\n"
        << "d = " << ToString(min.value) << "\n";
  }
  return kOk;
}

int RunOracle(const CommandOptions& options, std::ostream& out) {
  const ProfileOracle oracle(LoadInstance(options));
  const Rat theta_star = ThetaStarBruteForce(oracle, options.bf_cap);
  if (options.json) {
    out << Json{{"theta_star", ToString(theta_star)},
                {"decimal", ToDouble(theta_star)}}
               .dump(2)
        << "\n";
  } else {
    out << ToString(theta_star) << "\n" << ToDecimalString(theta_star) << "\n";
  }
  return kOk;
}

int RunExtract(const CommandOptions& options, std::ostream& out) {
  const Rat& theta = RequireTheta(options);
  const Instance instance = LoadInstance(options);
  const FlowOverTime flow = ExtractTransshipment(
      instance.network, instance.supply, theta, options.expansion_cap);
  const std::vector<std::string> violations =
      VerifyFlow(instance.network, instance.supply, flow, theta);
  if (!violations.empty()) {
    throw InvariantViolation("extracted flow fails verification: " +
                             violations.front());
  }
  out << SerializeFlow(instance.network, flow);
  return kOk;
}

int RunTrace(const CommandOptions& options, std::ostream& out) {
  const ProfileOracle oracle(LoadInstance(options));
  const SolverOptions solver = MakeSolverOptions(options);
  for (Algorithm algorithm : Algorithms(options.algo)) {
    const SolveResult result = Solve(oracle, algorithm, solver);
    out << FormatTrace(result,
                       ClassifyIterations(result, oracle, options.bf_cap),
                       options.json);
  }
  return kOk;
}

int RunBench(const CommandOptions& options, std::ostream& out) {
  if (options.count < 1) throw InputError("--count must be positive");
  const SolverOptions solver = MakeSolverOptions(options);
  std::vector<EnvelopePoint> envelope;
  std::ostringstream rows;
  rows << BenchCsvHeader();
  for (int i = 0; i < options.count; ++i) {
    rows << FormatBenchRow(BenchInstance(options.seed + i, solver, &envelope));
  }
  if (options.csv.empty()) {
    out << rows.str();
    return kOk;
  }
  std::ofstream csv(options.csv);
  if (!csv) throw InputError("cannot write " + options.csv);
  csv << rows.str();
  const std::string envelope_path = EnvelopePath(options.csv);
  std::ofstream env(envelope_path);
  if (!env) throw InputError("cannot write " + envelope_path);
  env << EnvelopeCsvHeader();
  for (const EnvelopePoint& p : envelope) env << FormatEnvelopePoint(p);
  out << "wrote " << options.count << " rows to " << options.csv << " and "
      << envelope.size() << " envelope points to " << envelope_path << "\n";
  return kOk;
}

int RunGenerate(const CommandOptions& options, std::ostream& out) {
  GeneratorParams params = options.explicit_generator
                               ? options.generator
                               : CorpusParams(options.seed);
  params.seed = options.seed;
  out << SerializeInstance(GenerateInstance(params));
  return kOk;
}

BenchRow BenchInstance(std::uint64_t seed, const SolverOptions& options,
                       std::vector<EnvelopePoint>* envelope) {
  const GeneratorParams params = CorpusParams(seed);
  const ProfileOracle oracle(GenerateInstance(params));

  BenchRow row;
  row.seed = seed;
  row.n = oracle.network().node_count;
  row.m = oracle.network().arc_count();
  row.k = oracle.terminal_count();

  auto start = std::chrono::steady_clock::now();
  const SolveResult simple = SolveNewtonSimple(oracle, options);
  row.wall_time_simple = Seconds(std::chrono::steady_clock::now() - start);
  start = std::chrono::steady_clock::now();
  const SolveResult jumps = SolveNewtonJumps(oracle, options);
  row.wall_time_jumps = Seconds(std::chrono::steady_clock::now() - start);
  if (simple.theta_star != jumps.theta_star) {
    throw InvariantViolation("solvers disagree on seed " +
                             std::to_string(seed));
  }
  row.theta_star = jumps.theta_star;
  row.iters_simple = static_cast<int>(simple.trace.size());
  row.iters_jumps = static_cast<int>(jumps.trace.size());
  for (IterationClass label :
       ClassifyIterations(jumps, oracle, options.sfm.brute_force_cap)) {
    switch (label) {
      case IterationClass::kI1: ++row.count_i1; break;
      case IterationClass::kI2: ++row.count_i2; break;
      case IterationClass::kI3: ++row.count_i3; break;
    }
  }

  if (envelope != nullptr) {
    std::set<Rat> thetas = {Rat(0), row.theta_star};
    const std::uint64_t subsets =
        SubsetCount(row.k, options.sfm.brute_force_cap);
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
      for (const Breakpoint& bp : Breakpoints(oracle.Profile(TerminalSet(bits)))) {
        thetas.insert(bp.theta);
      }
    }
    for (const SolveResult* result : {&simple, &jumps}) {
      for (const IterationRecord& it : result->trace) {
        thetas.insert(it.theta);
        thetas.insert(it.theta_prime);
        thetas.insert(it.next_theta);
      }
    }
    for (const Rat& theta : thetas) {
      envelope->push_back({seed, theta, EnvelopeD(oracle, theta, options.sfm)});
    }
  }
  return row;
}

std::string BenchCsvHeader(bool wall_times) {
  std::string header =
      "seed,n,m,k,theta_star,iters_simple,iters_jumps,count_I1,count_I2,"
      "count_I3";
  if (wall_times) header += ",wall_time_simple,wall_time_jumps";
  return header + "\n";
}

std::string FormatBenchRow(const BenchRow& row, bool wall_times) {
  std::ostringstream out;
  out << row.seed << "," << row.n << "," << row.m << "," << row.k << ","
      << ToString(row.theta_star) << "," << row.iters_simple << ","
      << row.iters_jumps << "," << row.count_i1 << "," << row.count_i2 << ","
      << row.count_i3;
  if (wall_times) {
    out << "," << row.wall_time_simple << "," << row.wall_time_jumps;
  }
  out << "\n";
  return out.str();
}

std::string EnvelopeCsvHeader() {
  return "seed,theta,d,theta_decimal,d_decimal\n";
}

std::string FormatEnvelopePoint(const EnvelopePoint& point) {
  return std::to_string(point.seed) + "," + ToString(point.theta) + "," +
         ToString(point.d) + "," + ToDecimalString(point.theta) + "," +
         ToDecimalString(point.d) + "\n";
}

std::string FormatTrace(const SolveResult& result,
                        const std::vector<IterationClass>& labels, bool json) {
  const bool jumps = result.algorithm == Algorithm::kJumps;
  if (json) {
    Json iterations = Json::array();
    for (std::size_t i = 0; i < result.trace.size(); ++i) {
      const IterationRecord& it = result.trace[i];
      Json record = {{"index", it.index},
                     {"theta", ToString(it.theta)},
                     {"set", it.set.members()},
                     {"d", ToString(it.d_at_theta)},
                     {"theta_prime", ToString(it.theta_prime)}};
      if (jumps) {
        record["d_at_prime"] = ToString(it.envelope_at_prime);
        record["cut_at_prime"] = ToString(it.cut_at_prime);
        record["jump"] = it.jump;
      }
      record["next_theta"] = ToString(it.next_theta);
      record["class"] = IterationClassName(labels[i]);
      iterations.push_back(std::move(record));
    }
    Json doc = {{"algorithm", AlgorithmName(result.algorithm)},
                {"theta_star", ToString(result.theta_star)},
                {"iterations", iterations}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "algorithm " << AlgorithmName(result.algorithm) << "\n";
  for (std::size_t i = 0; i < result.trace.size(); ++i) {
    const IterationRecord& it = result.trace[i];
    out << "iter " << it.index << " theta=" << ToString(it.theta)
        << " S=" << SetText(it.set) << " d=" << ToString(it.d_at_theta)
        << " theta'=" << ToString(it.theta_prime);
    if (jumps) {
      out << " d(theta')=" << ToString(it.envelope_at_prime)
          << " cut=" << ToString(it.cut_at_prime) << " j=" << it.jump;
    }
    out << " next=" << ToString(it.next_theta) << " "
        << IterationClassName(labels[i]) << "\n";
  }
  out << "theta* = " << ToString(result.theta_star) << "\n";
  return out.str();
}

std::string EnvelopePath(const std::string& csv_path) {
  const std::size_t slash = csv_path.find_last_of('/');
  const std::size_t dot = csv_path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return csv_path + "_envelope.csv";
  }
  return csv_path.substr(0, dot) + "_envelope" + csv_path.substr(dot);
}

}  // namespace quickest::cli
