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

#include "imgame/cliques.hpp"
#include "imgame/graph.hpp"
#include "imgame/simplex.hpp"

namespace imgame {

/// Fractional stable set: x per vertex, value = w . x.
struct PrimalSolution
{
  VectorXq x;
  Rational value;
};

/// Clique cover: y per clique (indexed like the clique list it was solved over), value = sum y.
struct DualSolution
{
  VectorXq y;
  Rational value;
};

struct LpPair
{
  PrimalSolution primal;
  DualSolution dual;
};

/// Raised when primal and dual optima differ; indicates a solver defect.
class DualityGapError : public std::logic_error
{
public:
  explicit DualityGapError(const std::string &what) : std::logic_error(what) {}
};

/// max w . x  s.t.  x(Q) <= 1 for each listed clique, x >= 0.
/// With every clique listed this is the stable-set relaxation; with the
/// maximal cliques only, the equivalent reduced system.
LinearProgram<Rational> stable_set_lp(const WeightedGraph &g, const std::vector<VertexList> &cliques);

/// min sum y  s.t.  sum_{Q ∋ v} y_Q >= w_v for each vertex, y >= 0.
LinearProgram<Rational> clique_cover_lp(const WeightedGraph &g, const std::vector<VertexList> &cliques);

/// Solves both programs over the given clique list and checks that the
/// optima coincide exactly; throws DualityGapError otherwise. Also throws
/// std::logic_error if either program fails to reach an optimum, which
/// cannot happen for these always-feasible bounded systems.
LpPair solve_pair(const WeightedGraph &g, const std::vector<VertexList> &cliques);

/// Optimal basic solution of the maximal-clique stable-set LP.
PrimalSolution solve_primal(const WeightedGraph &g, const CliqueSet &cliques);
/// Optimal basic solution of the maximal-clique cover LP, solved as its own program.
DualSolution solve_dual(const WeightedGraph &g, const CliqueSet &cliques);

/// Every coordinate has denominator 1.
bool is_integral(const PrimalSolution &sol);
bool is_integral(const DualSolution &sol);

/// CPLEX LP text format. Non-terminating fractions cannot be written
/// exactly in that format; they are approximated to 20 significant digits
/// and the file is marked with a comment.
std::string write_lp_format(const LinearProgram<Rational> &lp);

} // namespace imgame
