// Copyright 2026 The imgame Authors
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


#pragma once

#include <string>
#include <vector>

#include "imgame/corpus.hpp"
#include "imgame/graph.hpp"

namespace imgame {

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int input_error = 1;
inline constexpr int guard_violation = 2;
inline constexpr int property_failure = 3;
} // namespace exit_code

/// Result of one CLI verb: a JSON report, its text rendering and the exit code.
struct CommandOutput
{
  nlohmann::json json;
  std::string text;
  int exit_code = exit_code::success;
  std::vector<std::string> warnings;
};

/// Worth, optimal stable set, primal and dual optima, integrality flags and
/// (for small graphs) a perfection check. A dual optimum different from the
/// worth is reported as a warning.
CommandOutput solve_command(const WeightedGraph &g);

/// LP text for the maximal-clique primal and dual programs, for --dump-lp.
std::string lp_dump(const WeightedGraph &g);

/// Exit code 0 iff the imputation is in the core. Throws UnknownCliqueError
/// for keys that are not maximal cliques.
CommandOutput verify_command(const WeightedGraph &g, const nlohmann::json &imputation, bool exhaustive);

CommandOutput check_perfect_command(const WeightedGraph &g);
CommandOutput cliques_command(const WeightedGraph &g);
CommandOutput generate_command(const WeightedGraph &g);
/// Exit code 3 if any property failed on a perfect instance.
CommandOutput corpus_command(const CorpusOptions &options);

} // namespace imgame
