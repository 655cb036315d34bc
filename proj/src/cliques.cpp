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


#include "imgame/cliques.hpp"

#include <algorithm>
#include <charconv>

namespace imgame {

CliqueSet::CliqueSet(std::vector<VertexList> cliques, int order)
    : order_(order), cliques_(std::move(cliques)), index_(static_cast<std::size_t>(std::max(order, 0)))
{
  for (auto &c : cliques_) {
    std::sort(c.begin(), c.end());
    if (c.empty()) throw std::invalid_argument("empty clique");
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw std::invalid_argument("repeated vertex in clique");
    if (c.front() < 0 || c.back() >= order) throw std::out_of_range("clique vertex out of range");
  }
  std::sort(cliques_.begin(), cliques_.end());
  if (std::adjacent_find(cliques_.begin(), cliques_.end()) != cliques_.end()) {
    throw std::invalid_argument("duplicate clique " + clique_key(*std::adjacent_find(cliques_.begin(), cliques_.end())));
  }
  for (std::size_t q = 0; q < cliques_.size(); ++q) {
    for (VertexId v : cliques_[q]) index_[static_cast<std::size_t>(v)].push_back(static_cast<CliqueId>(q));
  }
  if (order_ <= kMaxMaskVertices) {
    masks_.reserve(cliques_.size());
    for (const auto &c : cliques_) masks_.push_back(Scenario(c).mask());
  }
}

std::optional<CliqueId> CliqueSet::find(const VertexList &members) const
{
  const auto it = std::lower_bound(cliques_.begin(), cliques_.end(), members);
  if (it == cliques_.end() || *it != members) return std::nullopt;
  return static_cast<CliqueId>(it - cliques_.begin());
}

std::uint64_t CliqueSet::mask(CliqueId q) const
{
  if (order_ > kMaxMaskVertices) throw GuardError("graph too large for bitmask routines");
  return masks_[static_cast<std::size_t>(q)];
}

namespace {

// Bron-Kerbosch with Tomita pivoting: the pivot maximises |P ∩ N(u)| over P ∪ X.
class BronKerbosch
{
public:
  BronKerbosch(const WeightedGraph &g, std::size_t cap) : g_(g), cap_(cap) {}

  std::vector<VertexList> run()
  {
    VertexList all(static_cast<std::size_t>(g_.order()));
    for (int v = 0; v < g_.order(); ++v) all[static_cast<std::size_t>(v)] = v;
    VertexList r;
    expand(r, all, {});
    return std::move(found_);
  }

private:
  VertexList restrict_to_neighbors(const VertexList &set, VertexId v) const
  {
    VertexList out;
    for (VertexId u : set) {
      if (g_.adjacent(u, v)) out.push_back(u);
    }
    return out;
  }

  void expand(VertexList &r, VertexList p, VertexList x)
  {
    if (p.empty()) {
      if (x.empty() && !r.empty()) {
        if (found_.size() >= cap_) {
          throw GuardError("more than " + std::to_string(cap_) + " maximal cliques");
        }
        found_.push_back(r);
      }
      return;
    }
    VertexId pivot = -1;
    std::size_t best = 0;
    for (const VertexList *set : {&p, &x}) {
      for (VertexId u : *set) {
        const auto hits = static_cast<std::size_t>(
            std::count_if(p.begin(), p.end(), [&](VertexId w) { return g_.adjacent(u, w); }));
        if (pivot < 0 || hits > best) {
          pivot = u;
          best = hits;
        }
      }
    }
    VertexList branch;
    for (VertexId v : p) {
      if (!g_.adjacent(pivot, v)) branch.push_back(v);
    }
    for (VertexId v : branch) {
      r.push_back(v);
      expand(r, restrict_to_neighbors(p, v), restrict_to_neighbors(x, v));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }

  const WeightedGraph &g_;
  std::size_t cap_;
  std::vector<VertexList> found_;
};

} // namespace

CliqueSet maximal_cliques(const WeightedGraph &g, std::size_t max_cliques)
{
  return CliqueSet(BronKerbosch(g, max_cliques).run(), g.order());
}

bool is_clique(const WeightedGraph &g, const VertexList &members)
{
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!g.adjacent(members[i], members[j])) return false;
    }
  }
  return true;
}

bool is_maximal_clique(const WeightedGraph &g, const Scenario &s)
{
  s.check_valid_for(g.order());
  const VertexList &m = s.members();
  if (m.empty() && g.order() > 0) return false;
  if (!is_clique(g, m)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    if (std::all_of(m.begin(), m.end(), [&](VertexId u) { return g.adjacent(u, v); })) return false;
  }
  return true;
}

namespace {

void grow_cliques(const WeightedGraph &g, VertexList &current, VertexId next, std::vector<VertexList> &out,
                  std::size_t cap)
{
  for (VertexId v = next; v < g.order(); ++v) {
    if (!std::all_of(current.begin(), current.end(), [&](VertexId u) { return g.adjacent(u, v); })) continue;
    current.push_back(v);
    if (out.size() >= cap) throw GuardError("more than " + std::to_string(cap) + " cliques");
    out.push_back(current);
    grow_cliques(g, current, v + 1, out, cap);
    current.pop_back();
  }
}

} // namespace

std::vector<VertexList> all_cliques(const WeightedGraph &g, std::size_t max_cliques)
{
  std::vector<VertexList> out;
  VertexList current;
  grow_cliques(g, current, 0, out, max_cliques);
  std::sort(out.begin(), out.end());
  return out;
}

std::string clique_key(const VertexList &members)
{
  std::string key;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) key += '-';
    key += std::to_string(members[i]);
  }
  return key;
}

VertexList parse_clique_key(std::string_view key)
{
  VertexList out;
  std::size_t start = 0;
  while (start <= key.size()) {
    const std::size_t dash = std::min(key.find('-', start), key.size());
    const std::string_view field = key.substr(start, dash - start);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || v < 0) {
      throw std::invalid_argument("malformed clique key '" + std::string(key) + "'");
    }
    out.push_back(v);
    start = dash + 1;
  }
  if (!std::is_sorted(out.begin(), out.end()) || std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::invalid_argument("clique key '" + std::string(key) + "' is not strictly ascending");
  }
  return out;
}

nlohmann::json cliques_to_json(const CliqueSet &cliques)
{
  nlohmann::json out = nlohmann::json::array();
  for (const auto &c : cliques.cliques()) out.push_back(c);
  return out;
}

} // namespace imgame
