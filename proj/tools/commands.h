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

#ifndef QUICKEST_TOOLS_COMMANDS_H_
#define QUICKEST_TOOLS_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "quickest/expansion.h"
#include "quickest/generator.h"
#include "quickest/rational.h"
#include "quickest/solver.h"

namespace quickest::cli {

enum ExitCode : int {
  kOk = 0,
  kInfeasibleForever = 1,
  kInputError = 2,
  kResourceCap = 3,
  kInternalError = 4,
};

struct CommandOptions {
  std::string input;
  std::optional<Rat> theta;
  std::uint64_t seed = 1;
  int count = 20;
  std::string algo = "jumps";
  int bf_cap = kDefaultBruteForceCap;
  std::int64_t expansion_cap = kDefaultExpansionNodeCap;
  std::string csv;
  bool json = false;
  GeneratorParams generator;
  bool explicit_generator = false;
};

int RunSolve(const CommandOptions& options, std::ostream& out);
int RunFeas(const CommandOptions& options, std::ostream& out);
int RunOracle(const CommandOptions& options, std::ostream& out);
int RunExtract(const CommandOptions& options, std::ostream& out);
int RunTrace(const CommandOptions& options, std::ostream& out);
int RunBench(const CommandOptions& options, std::ostream& out);
int RunGenerate(const CommandOptions& options, std::ostream& out);

struct BenchRow {
  std::uint64_t seed = 0;
  int n = 0;
  int m = 0;
  int k = 0;
  Rat theta_star;
  int iters_simple = 0;
  int iters_jumps = 0;
  int count_i1 = 0;
  int count_i2 = 0;
  int count_i3 = 0;
  double wall_time_simple = 0;
  double wall_time_jumps = 0;
};

struct EnvelopePoint {
  std::uint64_t seed = 0;
  Rat theta;
  Rat d;
};

// Solves corpus instance `seed` with both algorithms. Throws
// InvariantViolation if they disagree. Appends envelope samples at all
// subset breakpoints and trace horizons when `envelope` is non-null.
BenchRow BenchInstance(std::uint64_t seed, const SolverOptions& options,
                       std::vector<EnvelopePoint>* envelope);

std::string BenchCsvHeader(bool wall_times = true);
std::string FormatBenchRow(const BenchRow& row, bool wall_times = true);
std::string EnvelopeCsvHeader();
std::string FormatEnvelopePoint(const EnvelopePoint& point);

// Text or JSON rendering of a trace with iteration labels. Sets are listed
// by terminal index.
std::string FormatTrace(const SolveResult& result,
                        const std::vector<IterationClass>& labels, bool json);

// "runs.csv" -> "runs_envelope.csv".
std::string EnvelopePath(const std::string& csv_path);

}  // namespace quickest::cli

#endif  // QUICKEST_TOOLS_COMMANDS_H_
