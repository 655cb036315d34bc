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
#include <map>
#include <optional>
#include <string>

#include "imgame/cliques.hpp"
#include "imgame/graph.hpp"
#include "imgame/oracle.hpp"

namespace imgame {

/// Money per maximal clique (firm), indexed like the CliqueSet it belongs to.
class Imputation
{
public:
  Imputation() = default;
  /// Throws std::invalid_argument on a negative entry.
  explicit Imputation(VectorXq y);

  static Imputation zero(std::size_t cliques) { return Imputation(VectorXq::Zero(static_cast<Eigen::Index>(cliques))); }

  const VectorXq &y() const { return y_; }
  const Rational &operator[](CliqueId q) const { return y_(q); }
  std::size_t size() const { return static_cast<std::size_t>(y_.size()); }
  const Rational &total() const { return total_; }

  bool operator==(const Imputation &other) const { return y_ == other.y_; }

private:
  VectorXq y_;
  Rational total_{0};
};

/// Values on arbitrary (not necessarily maximal) cliques, keyed by sorted member list.
using CliqueWeights = std::map<VertexList, Rational>;

enum class Verdict
{
  in_core,
  violated,
  not_an_imputation,
};

struct Violation
{
  Scenario scenario;
  Rational money;
  Rational cost;
};

struct CoreReport
{
  Verdict verdict = Verdict::in_core;
  Rational total_money;
  Rational game_worth;
  std::optional<Violation> violation;
  std::uint64_t scenarios_checked = 0;
};

/// compute_core_imputation found dual optimum != game worth.
class ImperfectGraphError : public std::runtime_error
{
public:
  explicit ImperfectGraphError(const std::string &what) : std::runtime_error(what) {}
};

/// T = cost(V).
Rational game_worth(const WeightedGraph &g);

/// Sum of y_Q over maximal cliques Q meeting S. money(empty) = 0.
Rational money(const WeightedGraph &g, const CliqueSet &cliques, const Imputation &y, const Scenario &s);

/// Per-vertex coverage sum_{Q ∋ v} y_Q.
VectorXq coverage(const CliqueSet &cliques, const Imputation &y);
VectorXq coverage(int order, const CliqueWeights &z);

/// Optimal solution of the maximal-clique cover LP as an imputation. Its
/// total must equal the game worth, which holds on perfect graphs; otherwise
/// throws ImperfectGraphError.
Imputation compute_core_imputation(const WeightedGraph &g);
Imputation compute_core_imputation(const WeightedGraph &g, const CliqueSet &cliques);

/// In the core iff y covers every vertex's cost and distributes exactly T.
/// Looks only at singleton scenarios; a violation names the first uncovered vertex.
CoreReport verify_core_certificate(const WeightedGraph &g, const CliqueSet &cliques, const Imputation &y);

/// Checks money(S) >= cost(S) for all 2^n scenarios in increasing bitmask order
/// and reports the first violation. Throws GuardError for order() > guard.
CoreReport verify_core_exhaustive(const WeightedGraph &g, const CliqueSet &cliques, const Imputation &y,
                                  int guard = kCostTableGuard);

/// Moves the value of every non-maximal clique onto the lexicographically
/// smallest maximal clique containing it. Throws std::invalid_argument if a
/// key is not a clique of g or a value is negative.
Imputation lift_dual(const WeightedGraph &g, const CliqueSet &cliques, const CliqueWeights &weights);

/// z_{Q ∩ S} = sum of y_Q over maximal cliques Q with the same nonempty
/// intersection with S. Keys are vertex ids of g. Throws on an empty scenario.
CliqueWeights restrict_dual(const WeightedGraph &g, const CliqueSet &cliques, const Imputation &y,
                            const Scenario &s);

/// Feasibility for the clique cover LP of G(S): every key is a clique inside S
/// and every v in S has coverage >= w_v.
bool is_cover_feasible(const WeightedGraph &g, const CliqueWeights &z, const Scenario &s);

Rational total(const CliqueWeights &z);

const char *to_string(Verdict v);
nlohmann::json to_json(const CoreReport &r);

/// {"0-1-2": "1/1", ...}; zero entries are omitted.
nlohmann::json imputation_to_json(const CliqueSet &cliques, const Imputation &y);

/// Unknown or non-canonical clique key in an imputation file.
class UnknownCliqueError : public std::invalid_argument
{
public:
  explicit UnknownCliqueError(const std::string &what) : std::invalid_argument(what) {}
};

/// Inverse of imputation_to_json; values may be "num/den" strings or JSON integers.
/// Throws UnknownCliqueError for keys that are not maximal cliques.
Imputation imputation_from_json(const CliqueSet &cliques, const nlohmann::json &j);

} // namespace imgame
