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


#include "imgame/perfection.hpp"

#include <algorithm>
#include <bit>

namespace imgame {

namespace {

void check_guard(const WeightedGraph &g, int guard, const char *what)
{
  if (g.order() > guard || g.order() > kMaxMaskVertices) {
    throw GuardError(std::string(what) + ": " + std::to_string(g.order()) + " vertices exceeds the limit of " +
                     std::to_string(std::min(guard, kMaxMaskVertices)));
  }
}

// Grows induced paths start = p0, p1, ..., pk with all vertices above start;
// closes when pk is adjacent to start. Every internal vertex has exactly its
// two path neighbours on the path, so a closed path is a chordless cycle.
class HoleSearch
{
public:
  explicit HoleSearch(const WeightedGraph &g) : g_(g) {}

  std::optional<VertexList> run()
  {
    for (VertexId s = 0; s < g_.order(); ++s) {
      path_ = {s};
      for (VertexId a = s + 1; a < g_.order(); ++a) {
        if (!g_.adjacent(s, a)) continue;
        path_.push_back(a);
        if (extend(s)) return path_;
        path_.pop_back();
      }
    }
    return std::nullopt;
  }

private:
  bool extend(VertexId start)
  {
    const VertexId last = path_.back();
    for (VertexId v = start + 1; v < g_.order(); ++v) {
      if (!g_.adjacent(last, v) || std::find(path_.begin(), path_.end(), v) != path_.end()) continue;
      // v may touch only `last` among p1..p(k-1); touching start closes the cycle.
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path_.size(); ++i) {
        if (g_.adjacent(path_[i], v)) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      path_.push_back(v);
      if (g_.adjacent(start, v)) {
        // The path closes into a chordless cycle of length path_.size().
        if (path_.size() >= 5 && path_.size() % 2 == 1) return true;
      } else if (extend(start)) {
        return true;
      }
      path_.pop_back();
    }
    return false;
  }

  const WeightedGraph &g_;
  VertexList path_;
};

bool is_induced_odd_cycle(const WeightedGraph &g, const VertexList &cycle)
{
  const std::size_t k = cycle.size();
  if (k < 5 || k % 2 == 0) return false;
  VertexList sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.front() < 0 || sorted.back() >= g.order()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

// omega and chi of every induced subgraph, indexed by bitmask.
struct SubsetTables
{
  std::vector<int> omega;
  std::vector<int> chi;
};

SubsetTables subset_tables(const WeightedGraph &g)
{
  const int n = g.order();
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) nbr[static_cast<std::size_t>(v)] = g.neighbor_mask(v);

  std::vector<bool> stable(size, false);
  SubsetTables t{std::vector<int>(size, 0), std::vector<int>(size, 0)};
  stable[0] = true;
  for (std::uint64_t s = 1; s < size; ++s) {
    const int v = std::countr_zero(s);
    const std::uint64_t rest = s & (s - 1);
    stable[s] = stable[rest] && (nbr[static_cast<std::size_t>(v)] & rest) == 0;
    t.omega[s] = std::max(t.omega[rest], 1 + t.omega[rest & nbr[static_cast<std::size_t>(v)]]);
    // Some colour class contains the lowest vertex; enumerate it among the stable subsets of s.
    int best = n + 1;
    const std::uint64_t bit = std::uint64_t{1} << v;
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint64_t cls = sub | bit;
      if (stable[cls]) best = std::min(best, 1 + t.chi[s & ~cls]);
      if (sub == 0) break;
    }
    t.chi[s] = best;
  }
  return t;
}

// Chromatic number by backtracking over vertices in order of decreasing degree.
class Colouring
{
public:
  explicit Colouring(const WeightedGraph &g) : g_(g), colour_(static_cast<std::size_t>(g.order()), -1)
  {
    for (int v = 0; v < g.order(); ++v) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  }

  int chromatic_number(int lower)
  {
    if (g_.order() == 0) return 0;
    for (int k = std::max(lower, 1);; ++k) {
      std::fill(colour_.begin(), colour_.end(), -1);
      if (assign(0, k, 0)) return k;
    }
  }

private:
  bool assign(std::size_t i, int k, int used)
  {
    if (i == order_.size()) return true;
    const VertexId v = order_[i];
    // Colours are introduced in order, so colour `used` stands for any fresh colour.
    for (int c = 0; c < std::min(used + 1, k); ++c) {
      bool clash = false;
      for (int u = 0; u < g_.order(); ++u) {
        if (g_.adjacent(u, v) && colour_[static_cast<std::size_t>(u)] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colour_[static_cast<std::size_t>(v)] = c;
      if (assign(i + 1, k, std::max(used, c + 1))) return true;
      colour_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const WeightedGraph &g_;
  std::vector<int> colour_;
  VertexList order_;
};

int clique_number(const WeightedGraph &g)
{
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) nbr[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
  int best = 0;
  // Simple branch and bound on candidate masks.
  auto grow = [&](auto &&self, std::uint64_t cand, int size) -> void {
    if (size + std::popcount(cand) <= best) return;
    if (cand == 0) {
      best = size;
      return;
    }
    const int v = std::countr_zero(cand);
    const std::uint64_t bit = std::uint64_t{1} << v;
    self(self, cand & nbr[static_cast<std::size_t>(v)], size + 1);
    self(self, cand & ~bit, size);
  };
  grow(grow, g.order() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1, 0);
  return best;
}

} // namespace

std::optional<VertexList> find_odd_hole(const WeightedGraph &g, int guard)
{
  check_guard(g, guard, "find_odd_hole");
  return HoleSearch(g).run();
}

OmegaChi omega_chi(const WeightedGraph &g, int guard)
{
  check_guard(g, guard, "omega_chi");
  const int omega = clique_number(g);
  return {omega, Colouring(g).chromatic_number(omega)};
}

std::optional<ImperfectionWitness> definitional_imperfection(const WeightedGraph &g, int guard)
{
  check_guard(g, guard, "definitional_imperfection");
  const SubsetTables t = subset_tables(g);
  for (std::uint64_t s = 1; s < t.omega.size(); ++s) {
    if (t.omega[s] != t.chi[s]) {
      return ImperfectionWitness{WitnessKind::omega_chi_gap, Scenario::from_mask(s).members(), t.omega[s], t.chi[s]};
    }
  }
  return std::nullopt;
}

PerfectionVerdict is_perfect(const WeightedGraph &g, int guard)
{
  check_guard(g, guard, "is_perfect");
  PerfectionVerdict verdict;
  if (auto hole = find_odd_hole(g, guard)) {
    verdict.is_perfect = false;
    verdict.witness = ImperfectionWitness{WitnessKind::odd_hole, std::move(*hole), 2, 3};
  } else if (auto antihole = find_odd_hole(complement(g), guard)) {
    const int k = static_cast<int>(antihole->size());
    verdict.is_perfect = false;
    verdict.witness = ImperfectionWitness{WitnessKind::odd_antihole, std::move(*antihole), (k - 1) / 2, (k + 1) / 2};
  }
  if (g.order() <= kDefinitionalGuard) {
    const bool definitional_perfect = !definitional_imperfection(g).has_value();
    if (definitional_perfect != verdict.is_perfect) {
      throw std::logic_error("odd-hole search and definitional omega/chi scan disagree");
    }
    verdict.definitional_checked = true;
  }
  return verdict;
}

bool witness_is_valid(const WeightedGraph &g, const ImperfectionWitness &w)
{
  switch (w.kind) {
  case WitnessKind::odd_hole: return is_induced_odd_cycle(g, w.vertices);
  case WitnessKind::odd_antihole: return is_induced_odd_cycle(complement(g), w.vertices);
  case WitnessKind::omega_chi_gap: {
    const Scenario s(w.vertices);
    if (s.size() != w.vertices.size()) return false;
    try {
      s.check_valid_for(g.order());
    } catch (const std::out_of_range &) {
      return false;
    }
    const OmegaChi oc = omega_chi(induced_subgraph(g, s).graph, kMaxMaskVertices);
    return oc.omega == w.omega && oc.chi == w.chi && oc.omega != oc.chi;
  }
  }
  return false;
}

nlohmann::json to_json(const PerfectionVerdict &v)
{
  nlohmann::json out = {{"perfect", v.is_perfect}, {"definitional_checked", v.definitional_checked}};
  if (v.witness) {
    const char *kind = v.witness->kind == WitnessKind::odd_hole       ? "odd_hole"
                       : v.witness->kind == WitnessKind::odd_antihole ? "odd_antihole"
                                                                      : "omega_chi_gap";
    out["witness"] = {{"kind", kind}, {"vertices", v.witness->vertices}, {"omega", v.witness->omega},
                      {"chi", v.witness->chi}};
  }
  return out;
}

} // namespace imgame
