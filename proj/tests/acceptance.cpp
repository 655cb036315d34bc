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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "imgame/core.hpp"
#include "imgame/corpus.hpp"
#include "imgame/exactlp.hpp"
#include "imgame/generators.hpp"
#include "imgame/oracle.hpp"
#include "imgame/perfection.hpp"

using namespace imgame;

namespace {

constexpr std::uint64_t kSeed = 20260101;
constexpr int kCorpusSize = 200;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Check
{
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string &what)
  {
    if (!condition && ok) detail << "first failure: " << what << "; ";
    ok = ok && condition;
  }
};

std::uint64_t solved_pairs = 0;

LpPair solve_counted(const WeightedGraph &g, const CliqueSet &cs)
{
  ++solved_pairs;
  return solve_pair(g, cs.cliques());
}

Imputation on_cliques(const CliqueSet &cs, const std::vector<std::pair<VertexList, Rational>> &values)
{
  VectorXq y = VectorXq::Zero(static_cast<Eigen::Index>(cs.size()));
  for (const auto &[members, value] : values) y(*cs.find(members)) = value;
  return Imputation(y);
}

void criterion_example(Check &c)
{
  const auto start = Clock::now();
  const WeightedGraph p = paley3x3();
  const CliqueSet cs = maximal_cliques(p);
  c.expect(game_worth(p) == 3, "worth 3");

  const LpPair pair = solve_counted(p, cs);
  const VectorXq &y = pair.dual.y;
  c.expect(pair.dual.value == 3, "dual value 3");
  std::uint64_t used = 0;
  int support = 0;
  bool disjoint = true;
  for (std::size_t q = 0; q < cs.size(); ++q) {
    if (y(static_cast<Eigen::Index>(q)) == 0) continue;
    ++support;
    disjoint = disjoint && (used & cs.mask(static_cast<CliqueId>(q))) == 0;
    used |= cs.mask(static_cast<CliqueId>(q));
  }
  c.expect(support == 3 && disjoint, "optimal dual on 3 disjoint maximal cliques");

  const Imputation rows = on_cliques(cs, {{{0, 1, 2}, 1}, {{3, 4, 5}, 1}, {{6, 7, 8}, 1}});
  const CoreReport rc = verify_core_certificate(p, cs, rows);
  const CoreReport re = verify_core_exhaustive(p, cs, rows);
  c.expect(rc.verdict == Verdict::in_core, "rows-at-1 certificate");
  c.expect(re.verdict == Verdict::in_core && re.scenarios_checked == 512, "rows-at-1 exhaustive over 512");

  const Imputation row1 = on_cliques(cs, {{{0, 1, 2}, 3}});
  const CoreReport bc = verify_core_certificate(p, cs, row1);
  const CoreReport be = verify_core_exhaustive(p, cs, row1);
  c.expect(bc.verdict == Verdict::violated && bc.violation && bc.violation->money < bc.violation->cost,
           "row1-at-3 certificate violation");
  c.expect(be.verdict == Verdict::violated && be.violation && be.violation->money < be.violation->cost,
           "row1-at-3 exhaustive violation");
  const double t = seconds_since(start);
  c.expect(t < 1.0, "runtime under 1 s");
  c.detail << "T=3, support " << support << " disjoint cliques, 512 scenarios, row1-at-3 violated at {";
  if (be.violation) {
    for (VertexId v : be.violation->scenario.members()) c.detail << v;
  }
  c.detail << "}, " << t << " s";
}

void criterion_equivalence(Check &c, const std::vector<CorpusInstance> &corpus)
{
  const auto start = Clock::now();
  Rng rng(derive_seed(kSeed, 2));
  std::uint64_t perturbed = 0, disagreements = 0;
  for (const CorpusInstance &inst : corpus) {
    const WeightedGraph &g = inst.graph;
    const CliqueSet cs = maximal_cliques(g);
    const Imputation y(solve_counted(g, cs).dual.y);
    const CoreReport ex = verify_core_exhaustive(g, cs, y);
    c.expect(ex.verdict == Verdict::in_core, inst.name + " optimal dual in core");
    disagreements += verify_core_certificate(g, cs, y).verdict != ex.verdict;
    for (int i = 0; i < 20; ++i) {
      const auto bad = perturb_infeasible(g, cs, y, rng);
      c.expect(bad.has_value(), inst.name + " perturbation exists");
      if (!bad) break;
      c.expect(bad->total() == y.total(), inst.name + " perturbation keeps total");
      const CoreReport pe = verify_core_exhaustive(g, cs, *bad);
      c.expect(pe.verdict == Verdict::violated, inst.name + " perturbation rejected");
      disagreements += verify_core_certificate(g, cs, *bad).verdict != pe.verdict;
      ++perturbed;
    }
  }
  c.expect(disagreements == 0, "certificate and exhaustive agree");
  const double t = seconds_since(start);
  c.expect(t < 300.0, "suite under 5 min");
  c.detail << corpus.size() << " graphs, " << perturbed << " perturbed vectors rejected, " << disagreements
           << " disagreements, " << t << " s";
}

void criterion_tdi(Check &c, const std::vector<CorpusInstance> &corpus)
{
  for (const CorpusInstance &inst : corpus) {
    const CliqueSet cs = maximal_cliques(inst.graph);
    const Rational d = solve_counted(inst.graph, cs).dual.value;
    c.expect(is_integer(d), inst.name + " dual value integral");
    c.expect(d == Rational(min_integral_clique_cover_value(inst.graph, inst.graph.weights())),
             inst.name + " dual equals min integral cover");
  }
  c.detail << corpus.size() << " graphs, dual optimum = integral cover value on each";
}

void criterion_chain(Check &c, const std::vector<CorpusInstance> &corpus)
{
  Rng rng(derive_seed(kSeed, 4));
  int runs = 0;
  for (const CorpusInstance &inst : corpus) {
    for (int i = 0; i < 10; ++i) {
      const auto r = four_program_chain(inst.graph, random_binary_weights(inst.graph.order(), rng));
      c.expect(r.chain_holds() && r.ip == r.id, inst.name + " chain tight");
      ++runs;
    }
  }
  const auto c5 = four_program_chain(cycle_graph(5), VectorXq::Ones(5));
  c.expect(c5.ip == 2 && c5.lp == Rational(5, 2) && c5.ld == Rational(5, 2) && c5.id == 3, "C5 chain (2, 5/2, 5/2, 3)");
  c.detail << runs << " weight vectors tight; C5 gives (" << c5.ip << ", " << to_display_string(c5.lp) << ", "
           << to_display_string(c5.ld) << ", " << c5.id << ")";
}

void criterion_lifting(Check &c, const std::vector<CorpusInstance> &corpus)
{
  Rng rng(derive_seed(kSeed, 6));
  int feasible_inputs = 0;
  for (int i = 0; i < 100; ++i) {
    const WeightedGraph &g = corpus[static_cast<std::size_t>(uniform_below(rng, corpus.size()))].graph;
    const CliqueSet cs = maximal_cliques(g);
    const CliqueWeights z = random_subclique_weights(g, cs, i % 2 == 0, rng);
    const Imputation y = lift_dual(g, cs, z);
    c.expect(y.total() == total(z), "lift preserves total");
    const VectorXq before = coverage(g.order(), z);
    const VectorXq after = coverage(cs, y);
    bool covers = true;
    for (int v = 0; v < g.order(); ++v) {
      c.expect(after(v) >= before(v), "lift never decreases coverage");
      covers = covers && after(v) >= g.weight(v);
    }
    if (is_cover_feasible(g, z, Scenario::all(g.order()))) {
      ++feasible_inputs;
      c.expect(covers, "feasible input lifts to feasible output");
    }
  }
  c.detail << "100 sub-clique duals (" << feasible_inputs << " cover-feasible) lifted exactly";
}

void criterion_restriction(Check &c, const std::vector<CorpusInstance> &corpus)
{
  Rng rng(derive_seed(kSeed, 7));
  for (int i = 0; i < 100; ++i) {
    const WeightedGraph &g = corpus[static_cast<std::size_t>(uniform_below(rng, corpus.size()))].graph;
    const CliqueSet cs = maximal_cliques(g);
    const Imputation y(solve_counted(g, cs).dual.y);
    std::uint64_t mask = 0;
    while (mask == 0) mask = uniform_below(rng, std::uint64_t{1} << g.order());
    const Scenario s = Scenario::from_mask(mask);
    const CliqueWeights z = restrict_dual(g, cs, y, s);
    c.expect(total(z) == money(g, cs, y, s), "restricted total equals money");
    c.expect(is_cover_feasible(g, z, s), "restriction is dual feasible on G(S)");
  }
  c.detail << "100 (graph, optimal dual, scenario) triples";
}

void criterion_vertex_distribution(Check &c)
{
  const auto classes = paley3x3_color_classes();
  int worst = 0, reached = 0;
  for (int a = 0; a < 27; ++a) {
    // unit of row r sits on vertex 3r + (digit r of a in base 3)
    std::vector<VertexId> located;
    for (int r = 0, code = a; r < 3; ++r, code /= 3) located.push_back(3 * r + code % 3);
    int classes_at_3 = 0;
    for (const Scenario &s : classes) {
      int m = 0;
      for (VertexId v : located) m += s.contains(v);
      classes_at_3 += m >= 3;
    }
    worst = std::max(worst, classes_at_3);
    reached += classes_at_3 > 0;
  }
  c.expect(worst <= 1, "at most one colour class reaches 3");
  c.detail << "27 allocations, at most " << worst << " colour class at money 3 (" << reached
           << " allocations reach one)";
}

void criterion_perfection(Check &c, const std::vector<CorpusInstance> &corpus)
{
  const WeightedGraph c5 = cycle_graph(5);
  const PerfectionVerdict v5 = is_perfect(c5);
  c.expect(!v5.is_perfect && v5.witness && witness_is_valid(c5, *v5.witness), "C5 imperfect with valid witness");

  std::vector<CorpusInstance> all = corpus;
  for (auto &inst : imperfect_corpus(50, 5, 8, 10, derive_seed(kSeed, 9))) all.push_back(std::move(inst));
  int compared = 0, imperfect = 0;
  for (const CorpusInstance &inst : all) {
    if (inst.graph.order() > 8) continue;
    const PerfectionVerdict v = is_perfect(inst.graph);
    c.expect(v.is_perfect == !definitional_imperfection(inst.graph).has_value(), inst.name + " definitional agreement");
    c.expect(is_perfect(complement(inst.graph)).is_perfect == v.is_perfect, inst.name + " complement invariance");
    c.expect(v.is_perfect == inst.perfect_by_construction, inst.name + " matches construction");
    if (v.witness) c.expect(witness_is_valid(inst.graph, *v.witness), inst.name + " witness valid");
    ++compared;
    imperfect += !v.is_perfect;
  }
  c.detail << "C5 witness valid; " << compared << " graphs with n <= 8 (" << imperfect
           << " imperfect) agree with the omega=chi scan and their complements";
}

} // namespace

int main()
{
  const std::vector<CorpusInstance> corpus = perfect_corpus(kCorpusSize, 4, 10, 10, kSeed);

  struct Criterion
  {
    const char *name;
    std::function<void(Check &)> run;
  };
  const std::vector<Criterion> criteria = {
      {"worked example on paley3x3", criterion_example},
      {"optimal duals are exactly the core", [&](Check &c) { criterion_equivalence(c, corpus); }},
      {"integral clique cover equals dual optimum", [&](Check &c) { criterion_tdi(c, corpus); }},
      {"four-program chain", [&](Check &c) { criterion_chain(c, corpus); }},
      {"strong duality", nullptr},
      {"lifting sub-clique duals", [&](Check &c) { criterion_lifting(c, corpus); }},
      {"restriction to scenarios", [&](Check &c) { criterion_restriction(c, corpus); }},
      {"vertex-located money on paley3x3", criterion_vertex_distribution},
      {"perfection checker", [&](Check &c) { criterion_perfection(c, corpus); }},
  };

  std::vector<Check> results(criteria.size());
  std::uint64_t gaps = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!criteria[i].run) continue;
    try {
      criteria[i].run(results[i]);
    } catch (const DualityGapError &e) {
      ++gaps;
      results[i].expect(false, e.what());
    } catch (const std::exception &e) {
      results[i].expect(false, std::string("exception: ") + e.what());
    }
  }

  // Every solve_pair call compares the two optima and throws on a gap.
  Check &duality = results[4];
  duality.expect(gaps == 0, "no duality gap raised");
  duality.expect(solved_pairs > 0, "instances were solved");
  duality.detail << solved_pairs << " primal/dual pairs solved, " << gaps << " gaps";

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::printf("[%s] criterion %zu: %s: %s\n", results[i].ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                results[i].detail.str().c_str());
    failed += !results[i].ok;
  }
  return failed == 0 ? 0 : 1;
}
