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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "imgame/graph.hpp"
#include "imgame/random.hpp"

namespace imgame {

enum class GraphFamily
{
  paley3x3,
  cycle,
  complete,
  path,
  random_bipartite,
  random_chordal,
};

/// Parsed form of "paley3x3", "cycle:k", "complete:k", "path:k",
/// "random_bipartite:n:p" or "random_chordal:n".
struct GeneratorSpec
{
  GraphFamily family = GraphFamily::paley3x3;
  int size = 9;
  double edge_probability = 0.5;

  bool is_random() const { return family == GraphFamily::random_bipartite || family == GraphFamily::random_chordal; }
  std::string to_string() const;
};

/// Throws std::invalid_argument on unknown families or out-of-range parameters.
GeneratorSpec parse_generator_spec(std::string_view text);

enum class WeightMode
{
  unit,
  /// Independent uniform integers in [0, max_weight].
  random_integer,
};

/// Builds a graph from a spec. Random families and random weights require a seed.
WeightedGraph generate(const GeneratorSpec &spec, WeightMode weights = WeightMode::unit,
                       std::optional<std::uint64_t> seed = std::nullopt, int max_weight = 10);

/// 3x3 rook's graph (isomorphic to the Paley graph of order 9): vertex 3*r + c,
/// adjacent iff same row or same column. Unit weights.
WeightedGraph paley3x3();
WeightedGraph cycle_graph(int k);
WeightedGraph complete_graph(int k);
WeightedGraph path_graph(int k);
/// Random side assignment, cross edges with probability p. Bipartite by construction.
WeightedGraph random_bipartite(int n, double p, Rng &rng);
/// Each new vertex attaches to a random clique of the earlier vertices, so the
/// insertion order reversed is a perfect elimination ordering.
WeightedGraph random_chordal(int n, Rng &rng);

/// Replaces every weight by a uniform integer in [0, max_weight].
WeightedGraph with_random_integer_weights(const WeightedGraph &g, int max_weight, Rng &rng);

/// The three colour classes of paley3x3 (vertex 3*r + c has colour (r + c) mod 3);
/// each is a maximum stable set of size three.
std::array<Scenario, 3> paley3x3_color_classes();

} // namespace imgame
