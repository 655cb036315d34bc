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

#include <cstdint>
#include <vector>

#include "imgame/cliques.hpp"
#include "imgame/graph.hpp"

namespace imgame {

inline constexpr int kStableSetGuard = 30;
inline constexpr int kCostTableGuard = 22;
inline constexpr int kCliqueCoverGuard = 20;
inline constexpr int kFourProgramGuard = 16;

/// A maximum-cost stable set, the optimal investment in a scenario.
struct StableSetResult
{
  VertexList members;
  Rational total_cost;
};

/// Exact branch and bound (bound: current cost plus all remaining candidate
/// weight). Among maximum-cost sets, returns the lexicographically smallest
/// member list. Throws GuardError when order() > guard.
StableSetResult max_weight_stable_set(const WeightedGraph &g, int guard = kStableSetGuard);

/// Weight of a maximum-cost stable set of G(S); cost of the empty scenario is 0.
Rational cost(const WeightedGraph &g, const Scenario &s);

/// cost(S) for every S, indexed by bitmask, via the recurrence
/// cost(S) = max(cost(S - v), w_v + cost(S - N[v])) on the lowest v in S.
std::vector<Rational> cost_table(const WeightedGraph &g, int guard = kCostTableGuard);

struct IntegralCover
{
  std::int64_t value = 0;
  /// Multiplicity per maximal clique, indexed like the CliqueSet passed in.
  std::vector<std::int64_t> multiplicity;
};

/// Minimum total integral clique cover over the given maximal cliques:
/// min sum y_Q, y integral >= 0, sum_{Q ∋ v} y_Q >= w_v. Iterative deepening
/// with an exact stable-set lower bound on the residual demands. Throws
/// std::invalid_argument for non-integral or negative weights, GuardError
/// when order() > guard.
IntegralCover min_integral_clique_cover(const WeightedGraph &g, const CliqueSet &cliques, const VectorXq &weights,
                                        int guard = kCliqueCoverGuard);
std::int64_t min_integral_clique_cover_value(const WeightedGraph &g, const VectorXq &weights,
                                             int guard = kCliqueCoverGuard);

/// Integer stable set, its LP relaxation, the cover LP and the integer cover
/// for one 0/1 weight vector.
struct FourProgramReport
{
  std::int64_t ip = 0;
  Rational lp;
  Rational ld;
  std::int64_t id = 0;

  bool chain_holds() const { return Rational(ip) <= lp && lp == ld && ld <= Rational(id); }
  bool tight() const { return ip == id; }
};

/// Throws std::invalid_argument unless every weight is 0 or 1; GuardError when order() > guard.
FourProgramReport four_program_chain(const WeightedGraph &g, const VectorXq &weights01,
                                     int guard = kFourProgramGuard);

nlohmann::json to_json(const StableSetResult &r);
nlohmann::json to_json(const FourProgramReport &r);

} // namespace imgame
