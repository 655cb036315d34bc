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

#include <optional>

#include "imgame/graph.hpp"

namespace imgame {

inline constexpr int kPerfectionGuard = 16;
inline constexpr int kOmegaChiGuard = 12;
/// is_perfect cross-checks against the definitional scan up to this size.
inline constexpr int kDefinitionalGuard = 10;

enum class WitnessKind
{
  odd_hole,
  odd_antihole,
  omega_chi_gap,
};

/// Evidence of imperfection. For holes and antiholes, `vertices` is the
/// cycle in traversal order (in g, resp. in the complement of g); for an
/// omega/chi gap it is the vertex set S with omega(G(S)) != chi(G(S)).
struct ImperfectionWitness
{
  WitnessKind kind = WitnessKind::odd_hole;
  VertexList vertices;
  int omega = 0;
  int chi = 0;
};

struct PerfectionVerdict
{
  bool is_perfect = true;
  std::optional<ImperfectionWitness> witness;
  /// True when the definitional omega = chi scan also ran and agreed.
  bool definitional_checked = false;
};

/// An induced chordless odd cycle of length >= 5, if any. The cycle starts at
/// its smallest vertex. Throws GuardError when order() > guard.
std::optional<VertexList> find_odd_hole(const WeightedGraph &g, int guard = kPerfectionGuard);

/// No odd hole in g nor in its complement. For order() <= kDefinitionalGuard
/// the definitional scan is also run; disagreement throws std::logic_error.
PerfectionVerdict is_perfect(const WeightedGraph &g, int guard = kPerfectionGuard);

struct OmegaChi
{
  int omega = 0;
  int chi = 0;
};

/// Exact clique number and chromatic number (colouring by branch and bound).
OmegaChi omega_chi(const WeightedGraph &g, int guard = kOmegaChiGuard);

/// Definitional check: the first S (in bitmask order) with omega(G(S)) != chi(G(S)),
/// computed for all subsets by dynamic programming. Independent of the hole search.
std::optional<ImperfectionWitness> definitional_imperfection(const WeightedGraph &g,
                                                            int guard = kDefinitionalGuard);

/// Hole/antihole witnesses must be induced odd cycles of length >= 5 in the right
/// graph; omega/chi witnesses must exhibit a genuine gap.
bool witness_is_valid(const WeightedGraph &g, const ImperfectionWitness &w);

nlohmann::json to_json(const PerfectionVerdict &v);

} // namespace imgame
