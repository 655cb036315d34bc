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


#include "doctest.h"

#include "fixtures.hpp"
#include "imgame/generators.hpp"

using namespace imgame;

TEST_CASE("parse_graph reads edges, weights and defaults")
{
  const WeightedGraph g = parse_graph("p 2 1\ne 0 1\nw 0 2\n");
  CHECK(g.order() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 1));
  CHECK(g.weight(0) == 2);
  CHECK(g.weight(1) == 1);

  const WeightedGraph single = parse_graph("p 1 0");
  CHECK(single.order() == 1);
  CHECK(single.weight(0) == 1);
}

TEST_CASE("parse_graph handles comments, fractions and labels")
{
  const WeightedGraph g = parse_graph("# a path\n"
                                      "p 3 2   # header\n"
                                      "e 0 1\n"
                                      "\n"
                                      "e 1 2\n"
                                      "w 2 6/4\n"
                                      "l 1 asset b\n");
  CHECK(g.weight(2) == Rational(3, 2));
  REQUIRE(g.labels().size() == 3);
  CHECK(g.labels()[1] == "asset b");
  CHECK(g.labels()[0].empty());
}

TEST_CASE("parse_graph reports errors with line numbers")
{
  const auto line_of = [](const char *text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError &e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("p 2 1\ne 0 0\n") == 2);         // self-loop
  CHECK(line_of("p 3 2\ne 0 1\ne 1 0\n") == 3);  // duplicate edge
  CHECK(line_of("p 2 1\ne 0 2\n") == 2);         // out of range
  CHECK(line_of("p 2 0\nw 1 -3\n") == 2);        // negative weight
  CHECK(line_of("p 2 0\nw 1 1/0\n") == 2);       // zero denominator
  CHECK(line_of("p 2 0\nx 1\n") == 2);           // unknown tag
  CHECK(line_of("e 0 1\n") == 1);                // no header
  CHECK(line_of("p 2 0\np 2 0\n") == 2);         // duplicate header
  CHECK(line_of("p 2 2\ne 0 1\n") == 1);         // edge count mismatch, reported at the header
  CHECK(line_of("p 2 0\nw 0 1\nw 0 2\n") == 3);  // duplicate weight
  CHECK(line_of("p two 0\n") == 1);
  CHECK(line_of("") == 1);
}

TEST_CASE("serialize then parse is the identity")
{
  for (const auto &[name, g] : testing::small_graphs(10)) {
    CAPTURE(name);
    const WeightedGraph again = parse_graph(serialize_graph(g));
    CHECK(again == g);
    CHECK(parse_graph(serialize_graph(again)) == g);
  }
  GraphBuilder b(3);
  b.add_edge(0, 2);
  b.set_weight(1, Rational(7, 3));
  b.set_label(2, "house");
  const WeightedGraph labelled = b.build();
  CHECK(parse_graph(serialize_graph(labelled)) == labelled);
}

TEST_CASE("graph JSON uses num/den strings")
{
  GraphBuilder b(2);
  b.add_edge(0, 1);
  b.set_weight(1, Rational(5, 2));
  const auto j = graph_to_json(b.build());
  CHECK(j["n"] == 2);
  CHECK(j["edges"] == nlohmann::json::array({{0, 1}}));
  CHECK(j["weights"] == nlohmann::json::array({"1/1", "5/2"}));
}

TEST_CASE("WeightedGraph validates its invariants")
{
  AdjacencyMatrix a = AdjacencyMatrix::Constant(2, 2, false);
  a(0, 1) = true;
  CHECK_THROWS_AS(WeightedGraph(a, VectorXq::Ones(2)), std::invalid_argument); // asymmetric
  a(1, 0) = true;
  VectorXq w = VectorXq::Ones(2);
  w(0) = -1;
  CHECK_THROWS_AS(WeightedGraph(a, w), std::invalid_argument);
  AdjacencyMatrix loop = AdjacencyMatrix::Constant(1, 1, true);
  CHECK_THROWS_AS(WeightedGraph(loop, VectorXq::Ones(1)), std::invalid_argument);
  CHECK_THROWS_AS(GraphBuilder(2).add_edge(0, 0), std::invalid_argument);
}

TEST_CASE("induced_subgraph")
{
  SUBCASE("non-adjacent endpoints of a path")
  {
    const auto sub = induced_subgraph(path_graph(3), Scenario({0, 2}));
    CHECK(sub.graph.order() == 2);
    CHECK(sub.graph.edge_count() == 0);
    CHECK(sub.original == VertexList{0, 2});
  }
  SUBCASE("whole vertex set is the identity")
  {
    for (const auto &[name, g] : testing::small_graphs(9)) {
      CAPTURE(name);
      const auto sub = induced_subgraph(g, Scenario::all(g.order()));
      CHECK(sub.graph == g);
      CHECK(sub.original == Scenario::all(g.order()).members());
    }
  }
  SUBCASE("a row of paley3x3 is a triangle")
  {
    const WeightedGraph g = paley3x3();
    for (int r = 0; r < 3; ++r) {
      const auto sub = induced_subgraph(g, Scenario({3 * r, 3 * r + 1, 3 * r + 2}));
      CHECK(sub.graph == complete_graph(3));
    }
  }
  SUBCASE("edges match preimages and weights carry over")
  {
    const WeightedGraph g = testing::small_graphs(9).back().graph;
    const Scenario s({0, 2, 3});
    const auto sub = induced_subgraph(g, s);
    for (int i = 0; i < 3; ++i) {
      CHECK(sub.graph.weight(i) == g.weight(sub.original[static_cast<std::size_t>(i)]));
      for (int j = 0; j < 3; ++j) {
        CHECK(sub.graph.adjacent(i, j) ==
              g.adjacent(sub.original[static_cast<std::size_t>(i)], sub.original[static_cast<std::size_t>(j)]));
      }
    }
  }
  CHECK_THROWS_AS(induced_subgraph(path_graph(3), Scenario({0, 5})), std::out_of_range);
}

TEST_CASE("complement")
{
  for (const auto &[name, g] : testing::small_graphs(10)) {
    CAPTURE(name);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g).weights() == g.weights());
  }
  CHECK(complement(complete_graph(3)).edge_count() == 0);

  // C5 is self-complementary: i -> 2i mod 5 maps C5 onto its complement.
  const WeightedGraph c5 = cycle_graph(5);
  const WeightedGraph co = complement(c5);
  for (int u = 0; u < 5; ++u) {
    for (int v = 0; v < 5; ++v) {
      if (u != v) CHECK(c5.adjacent(u, v) == co.adjacent(2 * u % 5, 2 * v % 5));
    }
  }
}

TEST_CASE("generators")
{
  const WeightedGraph p = paley3x3();
  CHECK(p.order() == 9);
  CHECK(p.edge_count() == 18);
  for (int v = 0; v < 9; ++v) {
    CHECK(p.degree(v) == 4);
    CHECK(p.weight(v) == 1);
  }
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(complete_graph(3).edge_count() == 3);
  CHECK(path_graph(4).edge_count() == 3);

  // colour classes of paley3x3 are disjoint stable sets of size three
  const auto classes = paley3x3_color_classes();
  VertexList seen;
  for (const auto &c : classes) {
    CHECK(c.size() == 3);
    for (VertexId u : c.members()) {
      seen.push_back(u);
      for (VertexId v : c.members()) CHECK_FALSE(p.adjacent(u, v));
    }
  }
  CHECK(Scenario(seen) == Scenario::all(9));
}

TEST_CASE("random generators are deterministic and perfect by construction")
{
  Rng a(42), b(42);
  CHECK(random_bipartite(12, 0.4, a) == random_bipartite(12, 0.4, b));
  CHECK(random_chordal(12, a) == random_chordal(12, b));

  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    const WeightedGraph bip = random_bipartite(10, 0.5, rng);
    // two-colourable: BFS colouring never conflicts
    std::vector<int> colour(10, -1);
    bool ok = true;
    for (int s = 0; s < 10; ++s) {
      if (colour[static_cast<std::size_t>(s)] >= 0) continue;
      colour[static_cast<std::size_t>(s)] = 0;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (VertexId v : bip.neighbors(u)) {
          auto &cv = colour[static_cast<std::size_t>(v)];
          if (cv < 0) {
            cv = 1 - colour[static_cast<std::size_t>(u)];
            stack.push_back(v);
          } else if (cv == colour[static_cast<std::size_t>(u)]) {
            ok = false;
          }
        }
      }
    }
    CHECK(ok);

    // chordal: vertex i's earlier neighbours form a clique (reverse PEO)
    const WeightedGraph ch = random_chordal(10, rng);
    for (int v = 0; v < 10; ++v) {
      VertexList earlier;
      for (VertexId u : ch.neighbors(v)) {
        if (u < v) earlier.push_back(u);
      }
      for (VertexId x : earlier) {
        for (VertexId y : earlier) {
          if (x != y) CHECK(ch.adjacent(x, y));
        }
      }
    }
  }
}

TEST_CASE("generator specs")
{
  CHECK(parse_generator_spec("paley3x3").family == GraphFamily::paley3x3);
  const auto c = parse_generator_spec("cycle:5");
  CHECK(c.family == GraphFamily::cycle);
  CHECK(c.size == 5);
  const auto rb = parse_generator_spec("random_bipartite:8:0.25");
  CHECK(rb.size == 8);
  CHECK(rb.edge_probability == 0.25);
  CHECK(generate(parse_generator_spec("complete:3")) == complete_graph(3));
  CHECK_THROWS_AS(parse_generator_spec("cycle:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_spec("cycle"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_spec("random_bipartite:5:1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_spec("petersen"), std::invalid_argument);
  CHECK_THROWS_AS(generate(parse_generator_spec("random_chordal:6")), std::invalid_argument);
  CHECK(generate(rb, WeightMode::random_integer, 9) == generate(rb, WeightMode::random_integer, 9));
}

TEST_CASE("rational text forms")
{
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_fraction_string(Rational(-5, 10)) == "-1/2");
  CHECK(to_display_string(Rational(5, 2)) == "5/2");
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("3/0"), std::invalid_argument);
}
