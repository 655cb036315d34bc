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


#include "imgame/generators.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace imgame {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep)
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    out.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

int parse_size(std::string_view field, std::string_view spec)
{
  int value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::invalid_argument("bad size '" + std::string(field) + "' in generator spec '" + std::string(spec) + "'");
  }
  return value;
}

double parse_probability(std::string_view field, std::string_view spec)
{
  std::istringstream in{std::string(field)};
  double p = -1;
  in >> p;
  if (!in || !in.eof() || p < 0.0 || p > 1.0) {
    throw std::invalid_argument("bad probability '" + std::string(field) + "' in generator spec '" +
                                std::string(spec) + "'");
  }
  return p;
}

void require(bool ok, const std::string &message)
{
  if (!ok) throw std::invalid_argument(message);
}

} // namespace

std::string GeneratorSpec::to_string() const
{
  switch (family) {
  case GraphFamily::paley3x3: return "paley3x3";
  case GraphFamily::cycle: return "cycle:" + std::to_string(size);
  case GraphFamily::complete: return "complete:" + std::to_string(size);
  case GraphFamily::path: return "path:" + std::to_string(size);
  case GraphFamily::random_bipartite: {
    std::ostringstream out;
    out << "random_bipartite:" << size << ':' << edge_probability;
    return out.str();
  }
  case GraphFamily::random_chordal: return "random_chordal:" + std::to_string(size);
  }
  return {};
}

GeneratorSpec parse_generator_spec(std::string_view text)
{
  const auto parts = split(text, ':');
  const std::string_view name = parts[0];
  GeneratorSpec spec;
  const auto arity = [&](std::size_t k) {
    require(parts.size() == k + 1, "generator '" + std::string(name) + "' takes " + std::to_string(k) +
                                       " parameter(s): '" + std::string(text) + "'");
  };
  if (name == "paley3x3") {
    arity(0);
    spec.family = GraphFamily::paley3x3;
    spec.size = 9;
  } else if (name == "cycle" || name == "complete" || name == "path" || name == "random_chordal") {
    arity(1);
    spec.family = name == "cycle"      ? GraphFamily::cycle
                  : name == "complete" ? GraphFamily::complete
                  : name == "path"     ? GraphFamily::path
                                       : GraphFamily::random_chordal;
    spec.size = parse_size(parts[1], text);
  } else if (name == "random_bipartite") {
    arity(2);
    spec.family = GraphFamily::random_bipartite;
    spec.size = parse_size(parts[1], text);
    spec.edge_probability = parse_probability(parts[2], text);
  } else {
    throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
  }
  if (spec.family == GraphFamily::cycle) {
    require(spec.size >= 3, "cycle needs at least 3 vertices");
  } else {
    require(spec.size >= 0, "negative vertex count in generator spec");
  }
  require(spec.size <= 100000, "generator size too large");
  return spec;
}

WeightedGraph paley3x3()
{
  GraphBuilder b(9);
  for (int u = 0; u < 9; ++u) {
    for (int v = u + 1; v < 9; ++v) {
      if (u / 3 == v / 3 || u % 3 == v % 3) b.add_edge(u, v);
    }
  }
  return b.build();
}

std::array<Scenario, 3> paley3x3_color_classes()
{
  std::array<VertexList, 3> classes;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) classes[static_cast<std::size_t>((r + c) % 3)].push_back(3 * r + c);
  }
  return {Scenario(classes[0]), Scenario(classes[1]), Scenario(classes[2])};
}

WeightedGraph cycle_graph(int k)
{
  require(k >= 3, "cycle needs at least 3 vertices");
  GraphBuilder b(k);
  for (int v = 0; v < k; ++v) b.add_edge(v, (v + 1) % k);
  return b.build();
}

WeightedGraph complete_graph(int k)
{
  require(k >= 0, "negative vertex count");
  GraphBuilder b(k);
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) b.add_edge(u, v);
  }
  return b.build();
}

WeightedGraph path_graph(int k)
{
  require(k >= 0, "negative vertex count");
  GraphBuilder b(k);
  for (int v = 0; v + 1 < k; ++v) b.add_edge(v, v + 1);
  return b.build();
}

WeightedGraph random_bipartite(int n, double p, Rng &rng)
{
  require(n >= 0, "negative vertex count");
  require(p >= 0.0 && p <= 1.0, "edge probability outside [0,1]");
  std::vector<int> side(static_cast<std::size_t>(n));
  for (auto &s : side) s = static_cast<int>(uniform_below(rng, 2));
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)] && bernoulli(rng, p)) {
        b.add_edge(u, v);
      }
    }
  }
  return b.build();
}

WeightedGraph random_chordal(int n, Rng &rng)
{
  require(n >= 0, "negative vertex count");
  AdjacencyMatrix adj = AdjacencyMatrix::Constant(n, n, false);
  for (int v = 1; v < n; ++v) {
    // One in four new vertices starts a new component.
    if (uniform_below(rng, 4) == 0) continue;
    const auto anchor = static_cast<VertexId>(uniform_below(rng, static_cast<std::uint64_t>(v)));
    VertexList candidates;
    for (int u = 0; u < v; ++u) {
      if (adj(u, anchor)) candidates.push_back(u);
    }
    for (std::size_t i = candidates.size(); i > 1; --i) {
      std::swap(candidates[i - 1], candidates[uniform_below(rng, i)]);
    }
    VertexList clique{anchor};
    for (VertexId u : candidates) {
      const bool joins = std::all_of(clique.begin(), clique.end(), [&](VertexId c) { return adj(u, c); });
      if (joins && uniform_below(rng, 2) == 0) clique.push_back(u);
    }
    for (VertexId u : clique) adj(u, v) = adj(v, u) = true;
  }
  return WeightedGraph(std::move(adj), VectorXq::Constant(n, Rational(1)));
}

WeightedGraph with_random_integer_weights(const WeightedGraph &g, int max_weight, Rng &rng)
{
  require(max_weight >= 0, "negative maximum weight");
  VectorXq w(g.order());
  for (int v = 0; v < g.order(); ++v) w(v) = Rational(uniform_int(rng, 0, max_weight));
  return g.with_weights(std::move(w));
}

WeightedGraph generate(const GeneratorSpec &spec, WeightMode weights, std::optional<std::uint64_t> seed,
                       int max_weight)
{
  if ((spec.is_random() || weights == WeightMode::random_integer) && !seed) {
    throw std::invalid_argument("generator '" + spec.to_string() + "' requires a seed");
  }
  Rng rng(seed.value_or(0));
  WeightedGraph g;
  switch (spec.family) {
  case GraphFamily::paley3x3: g = paley3x3(); break;
  case GraphFamily::cycle: g = cycle_graph(spec.size); break;
  case GraphFamily::complete: g = complete_graph(spec.size); break;
  case GraphFamily::path: g = path_graph(spec.size); break;
  case GraphFamily::random_bipartite: g = random_bipartite(spec.size, spec.edge_probability, rng); break;
  case GraphFamily::random_chordal: g = random_chordal(spec.size, rng); break;
  }
  if (weights == WeightMode::random_integer) g = with_random_integer_weights(g, max_weight, rng);
  return g;
}

} // namespace imgame
