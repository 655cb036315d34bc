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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "imgame/core.hpp"
#include "imgame/random.hpp"

namespace imgame {

struct CorpusInstance
{
  std::string name;
  WeightedGraph graph;
  /// Built by a construction that guarantees perfection (bipartite, chordal).
  bool perfect_by_construction = true;
};

/// Random bipartite and random chordal graphs (alternating), n uniform in
/// [min_n, max_n], integer weights uniform in [0, max_weight]. Instances are
/// resampled until T > 0 and at least one vertex can be left uncovered by a
/// vector of total T (see breakable_vertices). Deterministic in seed.
std::vector<CorpusInstance> perfect_corpus(int count, int min_n, int max_n, int max_weight, std::uint64_t seed);

/// Graphs with an odd hole or antihole: C5, C7, the complement of C7 and
/// random G(n, 1/2) graphs rejected until imperfect.
std::vector<CorpusInstance> imperfect_corpus(int count, int min_n, int max_n, int max_weight, std::uint64_t seed);

/// Vertices with positive weight missed by at least one maximal clique.
VertexList breakable_vertices(const WeightedGraph &g, const CliqueSet &cliques);

/// Keeps the total of y but drains coverage from a random breakable vertex v
/// so that it ends strictly below w_v; the excess moves to cliques missing v.
/// Returns nothing when no vertex is breakable.
std::optional<Imputation> perturb_infeasible(const WeightedGraph &g, const CliqueSet &cliques, const Imputation &y,
                                             Rng &rng);

/// Random nonnegative vector over the cliques, scaled to the given total.
Imputation random_imputation(const CliqueSet &cliques, const Rational &total, Rng &rng);

/// Random rational values on random sub-cliques of maximal cliques. With
/// `cover` set, every vertex v additionally receives at least w_v on some
/// clique containing it, so the result is feasible for the clique cover LP.
CliqueWeights random_subclique_weights(const WeightedGraph &g, const CliqueSet &cliques, bool cover, Rng &rng);

/// Random 0/1 weight vector.
VectorXq random_binary_weights(int n, Rng &rng);

struct CorpusOptions
{
  int count = 50;
  int min_n = 4;
  int max_n = 10;
  int max_weight = 10;
  std::uint64_t seed = 1;
  bool include_imperfect = false;
  int perturbations = 20;
  int random_vectors = 20;
  int binary_weight_vectors = 10;
};

struct PropertyTally
{
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct CorpusSummary
{
  std::map<std::string, PropertyTally> properties;
  /// Per-instance findings on imperfect graphs (expected, not failures).
  nlohmann::json imperfect = nlohmann::json::array();
  std::vector<std::string> failures;
  int instances = 0;

  bool all_passed() const;
};

/// Runs perfection, strong duality, core-certificate equivalence, TDI and
/// four-program chain checks over a generated corpus.
CorpusSummary run_corpus(const CorpusOptions &options);

nlohmann::json to_json(const CorpusSummary &s, const CorpusOptions &options);

} // namespace imgame
