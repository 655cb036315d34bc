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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "imgame/rational.hpp"

namespace imgame {

using VertexId = int;
using VertexList = std::vector<VertexId>;
using AdjacencyMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Largest vertex count for which bitmask-based routines are available.
inline constexpr int kMaxMaskVertices = 64;

/// A set of vertices (sorted, duplicate-free).
class Scenario
{
public:
  Scenario() = default;
  /// Sorts and removes duplicates. Negative ids are rejected.
  explicit Scenario(VertexList members);

  static Scenario all(int n);
  static Scenario from_mask(std::uint64_t mask);

  const VertexList &members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(VertexId v) const;
  std::uint64_t mask() const;

  /// Throws std::out_of_range when a member is not a vertex of an n-vertex graph.
  void check_valid_for(int n) const;

  bool operator==(const Scenario &) const = default;

private:
  VertexList members_;
};

/// Undirected simple graph with nonnegative rational vertex costs.
/// Immutable once built; use GraphBuilder to assemble one.
class WeightedGraph
{
public:
  WeightedGraph() = default;
  /// n isolated vertices of unit weight.
  explicit WeightedGraph(int n);
  /// Validates symmetry, empty diagonal and nonnegative weights.
  WeightedGraph(AdjacencyMatrix adjacency, VectorXq weights, std::vector<std::string> labels = {});

  int order() const { return static_cast<int>(weights_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(VertexId u, VertexId v) const { return adjacency_(u, v); }
  const AdjacencyMatrix &adjacency() const { return adjacency_; }
  const Rational &weight(VertexId v) const { return weights_(v); }
  const VectorXq &weights() const { return weights_; }
  const std::vector<std::string> &labels() const { return labels_; }

  std::vector<std::pair<VertexId, VertexId>> edges() const;
  VertexList neighbors(VertexId v) const;
  int degree(VertexId v) const;
  /// Requires order() <= kMaxMaskVertices.
  std::uint64_t neighbor_mask(VertexId v) const;

  /// Same structure, different vertex costs.
  WeightedGraph with_weights(VectorXq weights) const;

  bool operator==(const WeightedGraph &other) const;

private:
  AdjacencyMatrix adjacency_;
  VectorXq weights_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

class GraphBuilder
{
public:
  explicit GraphBuilder(int n);

  /// Returns false if the edge was already present. Throws on self-loops and bad ids.
  bool add_edge(VertexId u, VertexId v);
  void set_weight(VertexId v, Rational w);
  void set_label(VertexId v, std::string label);

  WeightedGraph build() const;

private:
  void check_vertex(VertexId v) const;

  int n_;
  AdjacencyMatrix adjacency_;
  VectorXq weights_;
  std::vector<std::string> labels_;
};

/// Malformed graph file; carries the 1-based line number.
class ParseError : public std::runtime_error
{
public:
  ParseError(std::size_t line, const std::string &message);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Line-oriented format: `p <n> <m>`, `e <u> <v>`, `w <v> <num>[/<den>]`,
/// `l <v> <name>`; '#' starts a comment. Missing weights default to 1.
WeightedGraph parse_graph(std::string_view text);
std::string serialize_graph(const WeightedGraph &g);

/// {"n", "edges": [[u,v],...], "weights": ["num/den",...]} plus "labels" when present.
nlohmann::json graph_to_json(const WeightedGraph &g);

struct InducedSubgraph
{
  WeightedGraph graph;
  /// original[i] is the vertex of the parent graph that became vertex i.
  VertexList original;
};

InducedSubgraph induced_subgraph(const WeightedGraph &g, const Scenario &s);
WeightedGraph complement(const WeightedGraph &g);

} // namespace imgame
