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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "imgame/graph.hpp"

namespace imgame {

using CliqueId = int;

inline constexpr std::size_t kDefaultCliqueCap = 1'000'000;

/// The maximal cliques of a graph (the investment firms), sorted
/// lexicographically, with the inverse vertex -> clique incidence.
class CliqueSet
{
public:
  CliqueSet() = default;
  /// Canonicalises (sorts members and the list); rejects duplicates and out-of-range ids.
  CliqueSet(std::vector<VertexList> cliques, int order);

  int order() const { return order_; }
  std::size_t size() const { return cliques_.size(); }
  bool empty() const { return cliques_.empty(); }
  const VertexList &operator[](CliqueId q) const { return cliques_[static_cast<std::size_t>(q)]; }
  const std::vector<VertexList> &cliques() const { return cliques_; }

  /// Ids of the cliques that contain v, ascending.
  const std::vector<CliqueId> &containing(VertexId v) const { return index_[static_cast<std::size_t>(v)]; }
  std::optional<CliqueId> find(const VertexList &members) const;
  /// Requires order() <= kMaxMaskVertices.
  std::uint64_t mask(CliqueId q) const;

  /// |cliques| x n 0/1 matrix; row q is the indicator of clique q.
  template <typename Scalar> MatrixX<Scalar> incidence() const
  {
    MatrixX<Scalar> a = MatrixX<Scalar>::Zero(static_cast<Eigen::Index>(size()), order_);
    for (std::size_t q = 0; q < size(); ++q) {
      for (VertexId v : cliques_[q]) a(static_cast<Eigen::Index>(q), v) = Scalar(1);
    }
    return a;
  }

  bool operator==(const CliqueSet &other) const { return order_ == other.order_ && cliques_ == other.cliques_; }

private:
  int order_ = 0;
  std::vector<VertexList> cliques_;
  std::vector<std::vector<CliqueId>> index_;
  std::vector<std::uint64_t> masks_;
};

/// All maximal cliques, each exactly once, in canonical order. Isolated
/// vertices appear as singletons. Throws GuardError once more than
/// max_cliques have been found; the result is never truncated.
CliqueSet maximal_cliques(const WeightedGraph &g, std::size_t max_cliques = kDefaultCliqueCap);

bool is_clique(const WeightedGraph &g, const VertexList &members);
bool is_maximal_clique(const WeightedGraph &g, const Scenario &s);

/// Every nonempty clique (maximal or not), lexicographically sorted.
/// Exponential; intended for small graphs.
std::vector<VertexList> all_cliques(const WeightedGraph &g, std::size_t max_cliques = kDefaultCliqueCap);

/// "0-3-6" for {0,3,6}.
std::string clique_key(const VertexList &members);
/// Inverse of clique_key; throws std::invalid_argument on malformed keys.
VertexList parse_clique_key(std::string_view key);

nlohmann::json cliques_to_json(const CliqueSet &cliques);

} // namespace imgame
