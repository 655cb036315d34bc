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


#include "imgame/core.hpp"

#include <algorithm>

#include "imgame/exactlp.hpp"

namespace imgame {

Imputation::Imputation(VectorXq y) : y_(std::move(y))
{
  for (Eigen::Index q = 0; q < y_.size(); ++q) {
    if (y_(q) < 0) throw std::invalid_argument("negative money on clique " + std::to_string(q));
    total_ += y_(q);
  }
}

namespace {

void check_indexing(const CliqueSet &cliques, const Imputation &y)
{
  if (y.size() != cliques.size()) {
    throw std::invalid_argument("imputation has " + std::to_string(y.size()) + " entries for " +
                                std::to_string(cliques.size()) + " cliques");
  }
}

} // namespace

Rational game_worth(const WeightedGraph &g) { return max_weight_stable_set(g).total_cost; }

Rational money(const WeightedGraph &g, const CliqueSet &cliques, const Imputation &y, const Scenario &s)
{
  check_indexing(cliques, y);
  s.check_valid_for(g.order());
  Rational sum(0);
  for (std::size_t q = 0; q < cliques.size(); ++q) {
    const VertexList &c = cliques[static_cast<CliqueId>(q)];
    if (std::any_of(c.begin(), c.end(), [&](VertexId v) { return s.contains(v); })) {
      sum += y[static_cast<CliqueId>(q)];
    }
  }
  return sum;
}

VectorXq coverage(const CliqueSet &cliques, const Imputation &y)
{
  check_indexing(cliques, y);
  if (cliques.empty()) return VectorXq::Zero(cliques.order());
  return cliques.incidence<Rational>().transpose() * y.y();
}

VectorXq coverage(int order, const CliqueWeights &z)
{
  VectorXq c = VectorXq::Zero(order);
  for (const auto &[members, value] : z) {
    for (VertexId v : members) c(v) += value;
  }
  return c;
}

Imputation compute_core_imputation(const WeightedGraph &g) { return compute_core_imputation(g, maximal_cliques(g)); }

Imputation compute_core_imputation(const WeightedGraph &g, const CliqueSet &cliques)
{
  const DualSolution dual = solve_dual(g, cliques);
  const Rational worth = game_worth(g);
  if (dual.value != worth) {
    throw ImperfectGraphError("dual optimum " + to_display_string(dual.value) + " != worth " +
                              to_display_string(worth) + "; the graph is not perfect");
  }
  return Imputation(dual.y);
}

CoreReport verify_core_certificate(const WeightedGraph &g, const CliqueSet &cliques, const Imputation &y)
{
  check_indexing(cliques, y);
  CoreReport r;
  r.total_money = y.total();
  r.game_worth = game_worth(g);
  if (r.total_money != r.game_worth) {
    r.verdict = Verdict::not_an_imputation;
    return r;
  }
  const VectorXq cover = coverage(cliques, y);
  for (int v = 0; v < g.order(); ++v) {
    ++r.scenarios_checked;
    if (cover(v) < g.weight(v)) {
      r.verdict = Verdict::violated;
      r.violation = Violation{Scenario({v}), cover(v), g.weight(v)};
      return r;
    }
  }
  r.verdict = Verdict::in_core;
  return r;
}

CoreReport verify_core_exhaustive(const WeightedGraph &g, const CliqueSet &cliques, const Imputation &y, int guard)
{
  check_indexing(cliques, y);
  const std::vector<Rational> costs = cost_table(g, guard);
  const std::uint64_t full = (std::uint64_t{1} << g.order()) - 1;
  CoreReport r;
  r.total_money = y.total();
  r.game_worth = costs[full];
  if (r.total_money != r.game_worth) {
    r.verdict = Verdict::not_an_imputation;
    return r;
  }
  std::vector<std::uint64_t> masks;
  std::vector<Rational> values;
  for (std::size_t q = 0; q < cliques.size(); ++q) {
    if (y[static_cast<CliqueId>(q)] == 0) continue;
    masks.push_back(cliques.mask(static_cast<CliqueId>(q)));
    values.push_back(y[static_cast<CliqueId>(q)]);
  }
  r.scenarios_checked = 1; // the empty scenario: money 0 >= cost 0
  for (std::uint64_t s = 1; s <= full; ++s) {
    ++r.scenarios_checked;
    Rational available(0);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (masks[i] & s) available += values[i];
    }
    if (available < costs[s]) {
      r.verdict = Verdict::violated;
      r.violation = Violation{Scenario::from_mask(s), std::move(available), costs[s]};
      return r;
    }
  }
  r.verdict = Verdict::in_core;
  return r;
}

Imputation lift_dual(const WeightedGraph &g, const CliqueSet &cliques, const CliqueWeights &weights)
{
  VectorXq y = VectorXq::Zero(static_cast<Eigen::Index>(cliques.size()));
  for (const auto &[members, value] : weights) {
    if (members.empty() || !std::is_sorted(members.begin(), members.end()) ||
        std::adjacent_find(members.begin(), members.end()) != members.end() || members.front() < 0 ||
        members.back() >= g.order() || !is_clique(g, members)) {
      throw std::invalid_argument("'" + clique_key(members) + "' is not a clique of the graph");
    }
    if (value < 0) throw std::invalid_argument("negative value on clique " + clique_key(members));
    // containing() is ascending in clique id, i.e. in lexicographic clique order.
    std::optional<CliqueId> target;
    for (const CliqueId q : cliques.containing(members.front())) {
      const VertexList &c = cliques[q];
      if (std::includes(c.begin(), c.end(), members.begin(), members.end())) {
        target = q;
        break;
      }
    }
    if (!target) throw std::logic_error("no maximal clique contains " + clique_key(members));
    y(*target) += value;
  }
  return Imputation(std::move(y));
}

CliqueWeights restrict_dual(const WeightedGraph &g, const CliqueSet &cliques, const Imputation &y,
                            const Scenario &s)
{
  check_indexing(cliques, y);
  if (s.empty()) throw std::invalid_argument("restriction to an empty scenario");
  s.check_valid_for(g.order());
  CliqueWeights z;
  for (std::size_t q = 0; q < cliques.size(); ++q) {
    const Rational &value = y[static_cast<CliqueId>(q)];
    if (value == 0) continue;
    VertexList meet;
    const VertexList &c = cliques[static_cast<CliqueId>(q)];
    std::set_intersection(c.begin(), c.end(), s.members().begin(), s.members().end(), std::back_inserter(meet));
    if (!meet.empty()) z[meet] += value;
  }
  return z;
}

bool is_cover_feasible(const WeightedGraph &g, const CliqueWeights &z, const Scenario &s)
{
  s.check_valid_for(g.order());
  for (const auto &[members, value] : z) {
    if (value < 0 || members.empty() || !is_clique(g, members)) return false;
    if (!std::all_of(members.begin(), members.end(), [&](VertexId v) { return s.contains(v); })) return false;
  }
  const VectorXq cover = coverage(g.order(), z);
  return std::all_of(s.members().begin(), s.members().end(), [&](VertexId v) { return cover(v) >= g.weight(v); });
}

Rational total(const CliqueWeights &z)
{
  Rational sum(0);
  for (const auto &entry : z) sum += entry.second;
  return sum;
}

const char *to_string(Verdict v)
{
  switch (v) {
  case Verdict::in_core: return "in-core";
  case Verdict::violated: return "violated";
  case Verdict::not_an_imputation: return "not-an-imputation";
  }
  return "?";
}

nlohmann::json to_json(const CoreReport &r)
{
  nlohmann::json out = {{"verdict", to_string(r.verdict)},
                        {"total", to_fraction_string(r.total_money)},
                        {"worth", to_fraction_string(r.game_worth)},
                        {"scenariosChecked", r.scenarios_checked}};
  if (r.violation) {
    out["violation"] = {{"scenario", r.violation->scenario.members()},
                        {"money", to_fraction_string(r.violation->money)},
                        {"cost", to_fraction_string(r.violation->cost)}};
  } else {
    out["violation"] = nullptr;
  }
  return out;
}

nlohmann::json imputation_to_json(const CliqueSet &cliques, const Imputation &y)
{
  check_indexing(cliques, y);
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t q = 0; q < cliques.size(); ++q) {
    const Rational &value = y[static_cast<CliqueId>(q)];
    if (value != 0) out[clique_key(cliques[static_cast<CliqueId>(q)])] = to_fraction_string(value);
  }
  return out;
}

Imputation imputation_from_json(const CliqueSet &cliques, const nlohmann::json &j)
{
  if (!j.is_object()) throw std::invalid_argument("imputation must be a JSON object");
  VectorXq y = VectorXq::Zero(static_cast<Eigen::Index>(cliques.size()));
  for (const auto &[key, value] : j.items()) {
    VertexList members;
    try {
      members = parse_clique_key(key);
    } catch (const std::invalid_argument &) {
      throw UnknownCliqueError("malformed clique key '" + key + "'");
    }
    const auto q = cliques.find(members);
    if (!q) throw UnknownCliqueError("'" + key + "' is not a maximal clique of the graph");
    Rational amount;
    if (value.is_string()) {
      amount = parse_rational(value.get<std::string>());
    } else if (value.is_number_integer()) {
      amount = Rational(value.get<std::int64_t>());
    } else {
      throw std::invalid_argument("value for '" + key + "' must be a \"num/den\" string or an integer");
    }
    y(*q) += amount;
  }
  return Imputation(std::move(y));
}

} // namespace imgame
