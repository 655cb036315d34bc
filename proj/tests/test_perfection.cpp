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

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "imgame/perfection.hpp"

using namespace imgame;

TEST_CASE("C5 is imperfect with a hole witness")
{
  const WeightedGraph c5 = cycle_graph(5);
  const auto hole = find_odd_hole(c5);
  REQUIRE(hole);
  CHECK(*hole == VertexList{0, 1, 2, 3, 4});
  const auto v = is_perfect(c5);
  CHECK_FALSE(v.is_perfect);
  REQUIRE(v.witness);
  CHECK(v.witness->kind == WitnessKind::odd_hole);
  CHECK(witness_is_valid(c5, *v.witness));
  CHECK(v.definitional_checked);
  CHECK(to_json(v)["witness"]["kind"] == "odd_hole");
}

TEST_CASE("odd antiholes are reported as antiholes")
{
  const WeightedGraph a7 = complement(cycle_graph(7));
  CHECK_FALSE(find_odd_hole(a7));
  const auto v = is_perfect(a7);
  CHECK_FALSE(v.is_perfect);
  REQUIRE(v.witness);
  CHECK(v.witness->kind == WitnessKind::odd_antihole);
  CHECK(v.witness->vertices.size() == 7);
  CHECK(witness_is_valid(a7, *v.witness));
}

TEST_CASE("perfect examples")
{
  for (const WeightedGraph &g : {paley3x3(), cycle_graph(4), cycle_graph(6), path_graph(6), complete_graph(5),
                                 WeightedGraph(0), WeightedGraph(3)}) {
    const auto v = is_perfect(g);
    CHECK(v.is_perfect);
    CHECK_FALSE(v.witness);
  }
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    CHECK_FALSE(find_odd_hole(random_bipartite(10, 0.5, rng)));
    CHECK(is_perfect(random_chordal(10, rng)).is_perfect);
  }
}

TEST_CASE("hole search agrees with the subset scan")
{
  for (const auto &[name, g] : testing::small_graphs(10, 47, 60)) {
    CAPTURE(name);
    const auto hole = find_odd_hole(g);
    CHECK(hole.has_value() == brute::has_odd_hole(g));
    if (hole) CHECK(witness_is_valid(g, ImperfectionWitness{WitnessKind::odd_hole, *hole, 0, 0}));
  }
}

TEST_CASE("verdict agrees with the definitional scan and is complement invariant")
{
  int imperfect = 0;
  for (const auto &[name, g] : testing::small_graphs(10, 53, 80)) {
    CAPTURE(name);
    const auto v = is_perfect(g);
    const auto def = definitional_imperfection(g);
    CHECK(v.is_perfect == !def.has_value());
    CHECK(v.is_perfect == (!brute::has_odd_hole(g) && !brute::has_odd_hole(complement(g))));
    CHECK(is_perfect(complement(g)).is_perfect == v.is_perfect);
    if (def) {
      CHECK(witness_is_valid(g, *def));
      ++imperfect;
    }
    if (v.witness) CHECK(witness_is_valid(g, *v.witness));
  }
  CHECK(imperfect > 0);
}

TEST_CASE("omega and chi")
{
  auto check = [](const WeightedGraph &g, int omega, int chi) {
    const auto r = omega_chi(g);
    CHECK(r.omega == omega);
    CHECK(r.chi == chi);
  };
  check(complete_graph(3), 3, 3);
  check(cycle_graph(5), 2, 3);
  check(paley3x3(), 3, 3);
  check(WeightedGraph(0), 0, 0);
  check(complement(cycle_graph(7)), 3, 4);
  for (const auto &[name, g] : testing::small_graphs(7, 59, 30)) {
    CAPTURE(name);
    const auto r = omega_chi(g);
    CHECK(r.omega == brute::clique_number(g, brute::all_mask(g.order())));
    CHECK(r.chi == brute::chromatic_number(g, brute::all_mask(g.order())));
  }
}

TEST_CASE("definitional witness is the first gap in bitmask order")
{
  const auto w = definitional_imperfection(cycle_graph(5));
  REQUIRE(w);
  CHECK(w->kind == WitnessKind::omega_chi_gap);
  CHECK(w->vertices == VertexList{0, 1, 2, 3, 4});
  CHECK(w->omega == 2);
  CHECK(w->chi == 3);
}

TEST_CASE("invalid witnesses are rejected")
{
  const WeightedGraph c6 = cycle_graph(6);
  CHECK_FALSE(witness_is_valid(c6, ImperfectionWitness{WitnessKind::odd_hole, {0, 1, 2, 3, 4}, 0, 0}));
  CHECK_FALSE(witness_is_valid(c6, ImperfectionWitness{WitnessKind::omega_chi_gap, {0, 1, 2}, 2, 3}));
  const WeightedGraph c5 = cycle_graph(5);
  CHECK_FALSE(witness_is_valid(c5, ImperfectionWitness{WitnessKind::odd_hole, {0, 2, 1, 3, 4}, 0, 0}));
  CHECK_FALSE(witness_is_valid(c5, ImperfectionWitness{WitnessKind::odd_antihole, {0, 1, 2, 3, 4}, 0, 0}));
  // C5 is self-complementary, so the antihole in traversal order of the complement is valid
  CHECK(witness_is_valid(c5, ImperfectionWitness{WitnessKind::odd_antihole, {0, 2, 4, 1, 3}, 0, 0}));
}

TEST_CASE("perfection guards")
{
  CHECK_THROWS_AS(find_odd_hole(WeightedGraph(17)), GuardError);
  CHECK_THROWS_AS(omega_chi(WeightedGraph(13)), GuardError);
  CHECK_THROWS_AS(definitional_imperfection(WeightedGraph(11)), GuardError);
  const auto big = is_perfect(path_graph(14));
  CHECK(big.is_perfect);
  CHECK_FALSE(big.definitional_checked);
}
