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

#include "imgame/generators.hpp"

namespace imgame::testing {

struct Named
{
  std::string name;
  WeightedGraph graph;
};

inline WeightedGraph gnp(int n, double p, Rng &rng)
{
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (bernoulli(rng, p)) b.add_edge(u, v);
    }
  }
  return b.build();
}

/// Named small graphs plus seeded random ones (perfect and not), all with n <= max_n.
inline std::vector<Named> small_graphs(int max_n, std::uint64_t seed = 7, int random_count = 24)
{
  std::vector<Named> out = {
      {"empty0", WeightedGraph(0)},  {"single", WeightedGraph(1)},      {"K3", complete_graph(3)},
      {"P3", path_graph(3)},         {"P5", path_graph(5)},             {"C4", cycle_graph(4)},
      {"C5", cycle_graph(5)},        {"C6", cycle_graph(6)},            {"C7", cycle_graph(7)},
      {"antiC7", complement(cycle_graph(7))}, {"paley3x3", paley3x3()}, {"K5", complete_graph(5)},
  };
  Rng rng(seed);
  for (int i = 0; i < random_count; ++i) {
    const int n = static_cast<int>(uniform_int(rng, 3, max_n));
    WeightedGraph g;
    std::string name;
    switch (i % 3) {
    case 0:
      g = random_bipartite(n, 0.5, rng);
      name = "bip";
      break;
    case 1:
      g = random_chordal(n, rng);
      name = "chordal";
      break;
    default:
      g = gnp(n, 0.5, rng);
      name = "gnp";
      break;
    }
    g = with_random_integer_weights(g, 6, rng);
    out.push_back({name + std::to_string(i), std::move(g)});
  }
  std::erase_if(out, [&](const Named &x) { return x.graph.order() > max_n; });
  return out;
}

} // namespace imgame::testing
