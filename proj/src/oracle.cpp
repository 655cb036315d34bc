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


#include "imgame/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "imgame/exactlp.hpp"

namespace imgame {

namespace {

void check_guard(const WeightedGraph &g, int guard, const char *what)
{
  if (g.order() > guard || g.order() > kMaxMaskVertices) {
    throw GuardError(std::string(what) + ": " + std::to_string(g.order()) + " vertices exceeds the limit of " +
                     std::to_string(std::min(guard, kMaxMaskVertices)));
  }
}

std::vector<std::uint64_t> neighbor_masks(const WeightedGraph &g)
{
  std::vector<std::uint64_t> out(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
  return out;
}

std::uint64_t low_bits(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Maximum weight of a stable set inside `candidates`.
template <typename Weight> class StableSetSearch
{
public:
  StableSetSearch(const std::vector<std::uint64_t> &nbr, const std::vector<Weight> &w) : nbr_(nbr), w_(w) {}

  Weight max_weight(std::uint64_t candidates)
  {
    best_ = Weight(-1);
    branch(candidates, Weight(0));
    return best_;
  }

private:
  void branch(std::uint64_t cand, Weight current)
  {
    if (cand == 0) {
      if (current > best_) best_ = current;
      return;
    }
    Weight bound = current;
    for (std::uint64_t c = cand; c != 0; c &= c - 1) bound += w_[static_cast<std::size_t>(std::countr_zero(c))];
    if (bound <= best_) return;
    const int v = std::countr_zero(cand);
    const std::uint64_t bit = std::uint64_t{1} << v;
    branch(cand & ~bit & ~nbr_[static_cast<std::size_t>(v)], current + w_[static_cast<std::size_t>(v)]);
    branch(cand & ~bit, current);
  }

  const std::vector<std::uint64_t> &nbr_;
  const std::vector<Weight> &w_;
  Weight best_{-1};
};

} // namespace

StableSetResult max_weight_stable_set(const WeightedGraph &g, int guard)
{
  check_guard(g, guard, "max_weight_stable_set");
  const int n = g.order();
  const auto nbr = neighbor_masks(g);
  const std::vector<Rational> w(g.weights().begin(), g.weights().end());
  StableSetSearch<Rational> search(nbr, w);
  const Rational best = search.max_weight(low_bits(n));

  // Lexicographically smallest optimal list: stop as soon as the prefix is
  // optimal, otherwise take the smallest next vertex that still admits an
  // optimal completion.
  StableSetResult result{{}, Rational(0)};
  std::uint64_t cand = low_bits(n);
  while (result.total_cost != best) {
    bool extended = false;
    for (std::uint64_t c = cand; c != 0; c &= c - 1) {
      const int v = std::countr_zero(c);
      const std::uint64_t rest = cand & ~low_bits(v + 1) & ~nbr[static_cast<std::size_t>(v)];
      if (result.total_cost + w[static_cast<std::size_t>(v)] + search.max_weight(rest) == best) {
        result.members.push_back(v);
        result.total_cost += w[static_cast<std::size_t>(v)];
        cand = rest;
        extended = true;
        break;
      }
    }
    if (!extended) throw std::logic_error("stable set reconstruction failed");
  }
  return result;
}

Rational cost(const WeightedGraph &g, const Scenario &s)
{
  if (s.empty()) return Rational(0);
  return max_weight_stable_set(induced_subgraph(g, s).graph).total_cost;
}

std::vector<Rational> cost_table(const WeightedGraph &g, int guard)
{
  check_guard(g, guard, "cost_table");
  const int n = g.order();
  const auto nbr = neighbor_masks(g);
  std::vector<Rational> table(std::size_t{1} << n);
  table[0] = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const int v = std::countr_zero(s);
    const std::uint64_t without = s & (s - 1);
    const Rational &skip = table[without];
    Rational take = g.weight(v) + table[without & ~nbr[static_cast<std::size_t>(v)]];
    table[s] = take > skip ? std::move(take) : skip;
  }
  return table;
}

namespace {

class CoverSearch
{
public:
  CoverSearch(const WeightedGraph &g, const CliqueSet &cliques, std::vector<std::int64_t> demand)
      : cliques_(cliques), nbr_(neighbor_masks(g)), demand_(std::move(demand)),
        chosen_(cliques.size(), 0)
  {
  }

  IntegralCover run()
  {
    std::vector<std::int64_t> residual = demand_;
    for (std::int64_t budget = lower_bound(residual);; ++budget) {
      if (feasible(residual, budget)) {
        return {budget, chosen_};
      }
    }
  }

private:
  std::int64_t lower_bound(const std::vector<std::int64_t> &residual)
  {
    std::uint64_t positive = 0;
    for (std::size_t v = 0; v < residual.size(); ++v) {
      if (residual[v] > 0) positive |= std::uint64_t{1} << v;
    }
    StableSetSearch<std::int64_t> search(nbr_, residual);
    return search.max_weight(positive);
  }

  bool feasible(std::vector<std::int64_t> &residual, std::int64_t budget)
  {
    // Branch on the uncovered vertex that lies in the fewest cliques.
    int pick = -1;
    for (std::size_t v = 0; v < residual.size(); ++v) {
      if (residual[v] <= 0) continue;
      if (pick < 0 || cliques_.containing(static_cast<VertexId>(v)).size() <
                          cliques_.containing(static_cast<VertexId>(pick)).size()) {
        pick = static_cast<int>(v);
      }
    }
    if (pick < 0) return true;
    if (budget <= 0 || lower_bound(residual) > budget) return false;
    if (const auto it = failed_.find(residual); it != failed_.end() && it->second >= budget) return false;

    for (const CliqueId q : cliques_.containing(pick)) {
      std::vector<std::int64_t> next = residual;
      for (const VertexId v : cliques_[q]) {
        if (next[static_cast<std::size_t>(v)] > 0) --next[static_cast<std::size_t>(v)];
      }
      ++chosen_[static_cast<std::size_t>(q)];
      if (feasible(next, budget - 1)) return true;
      --chosen_[static_cast<std::size_t>(q)];
    }
    auto &slot = failed_[residual];
    slot = std::max(slot, budget);
    return false;
  }

  const CliqueSet &cliques_;
  std::vector<std::uint64_t> nbr_;
  std::vector<std::int64_t> demand_;
  std::vector<std::int64_t> chosen_;
  std::map<std::vector<std::int64_t>, std::int64_t> failed_;
};

} // namespace

IntegralCover min_integral_clique_cover(const WeightedGraph &g, const CliqueSet &cliques, const VectorXq &weights,
                                        int guard)
{
  check_guard(g, guard, "min_integral_clique_cover");
  if (weights.size() != g.order()) throw std::invalid_argument("weight vector length does not match vertex count");
  if (cliques.order() != g.order()) throw std::invalid_argument("clique set belongs to a different graph");
  std::vector<std::int64_t> demand(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    if (!is_integer(weights(v))) {
      throw std::invalid_argument("weight of vertex " + std::to_string(v) + " is not integral: " +
                                  to_display_string(weights(v)));
    }
    if (weights(v) < 0) throw std::invalid_argument("negative weight at vertex " + std::to_string(v));
    demand[static_cast<std::size_t>(v)] = to_int64(weights(v));
  }
  return CoverSearch(g, cliques, std::move(demand)).run();
}

std::int64_t min_integral_clique_cover_value(const WeightedGraph &g, const VectorXq &weights, int guard)
{
  check_guard(g, guard, "min_integral_clique_cover");
  return min_integral_clique_cover(g, maximal_cliques(g), weights, guard).value;
}

FourProgramReport four_program_chain(const WeightedGraph &g, const VectorXq &weights01, int guard)
{
  check_guard(g, guard, "four_program_chain");
  if (weights01.size() != g.order()) throw std::invalid_argument("weight vector length does not match vertex count");
  for (Eigen::Index v = 0; v < weights01.size(); ++v) {
    if (weights01(v) != 0 && weights01(v) != 1) {
      throw std::invalid_argument("weight of vertex " + std::to_string(v) + " is not 0 or 1");
    }
  }
  const WeightedGraph h = g.with_weights(weights01);
  const CliqueSet cliques = maximal_cliques(h);
  FourProgramReport r;
  r.ip = to_int64(max_weight_stable_set(h, guard).total_cost);
  const LpPair pair = solve_pair(h, cliques.cliques());
  r.lp = pair.primal.value;
  r.ld = pair.dual.value;
  r.id = min_integral_clique_cover(h, cliques, weights01, guard).value;
  return r;
}

nlohmann::json to_json(const StableSetResult &r)
{
  return {{"members", r.members}, {"cost", to_fraction_string(r.total_cost)}};
}

nlohmann::json to_json(const FourProgramReport &r)
{
  return {{"Ip", r.ip},
          {"Lp", to_fraction_string(r.lp)},
          {"Ld", to_fraction_string(r.ld)},
          {"Id", r.id},
          {"chain_holds", r.chain_holds()},
          {"tight", r.tight()}};
}

} // namespace imgame
