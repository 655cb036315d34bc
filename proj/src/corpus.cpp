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


#include "imgame/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "imgame/exactlp.hpp"
#include "imgame/generators.hpp"
#include "imgame/perfection.hpp"

namespace imgame {

namespace {

Rational random_fraction(Rng &rng, int max_num, int max_den)
{
  const auto num = uniform_int(rng, 0, max_num);
  const auto den = uniform_int(rng, 1, max_den);
  return Rational(num) / Rational(den);
}

template <typename T> const T &pick(const std::vector<T> &items, Rng &rng)
{
  return items[static_cast<std::size_t>(uniform_below(rng, items.size()))];
}

VertexList random_nonempty_subset(const VertexList &members, Rng &rng, std::optional<VertexId> required = {})
{
  VertexList out;
  for (VertexId v : members) {
    if (v == required || uniform_below(rng, 2) == 0) out.push_back(v);
  }
  if (out.empty()) out.push_back(pick(members, rng));
  return out;
}

bool usable(const WeightedGraph &g)
{
  const CliqueSet cliques = maximal_cliques(g);
  return game_worth(g) > 0 && !breakable_vertices(g, cliques).empty();
}

} // namespace

VertexList breakable_vertices(const WeightedGraph &g, const CliqueSet &cliques)
{
  VertexList out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.weight(v) > 0 && cliques.containing(v).size() < cliques.size()) out.push_back(v);
  }
  return out;
}

std::vector<CorpusInstance> perfect_corpus(int count, int min_n, int max_n, int max_weight, std::uint64_t seed)
{
  if (min_n < 1 || max_n < min_n) throw std::invalid_argument("bad corpus size range");
  std::vector<CorpusInstance> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const bool bipartite = i % 2 == 0;
    while (true) {
      const int n = static_cast<int>(uniform_int(rng, min_n, max_n));
      WeightedGraph g;
      std::ostringstream name;
      if (bipartite) {
        const double p = static_cast<double>(uniform_int(rng, 3, 8)) / 10.0;
        g = random_bipartite(n, p, rng);
        name << "random_bipartite:" << n << ':' << p;
      } else {
        g = random_chordal(n, rng);
        name << "random_chordal:" << n;
      }
      g = with_random_integer_weights(g, max_weight, rng);
      if (!usable(g)) continue;
      name << '#' << i;
      out.push_back({name.str(), std::move(g), true});
      break;
    }
  }
  return out;
}

std::vector<CorpusInstance> imperfect_corpus(int count, int min_n, int max_n, int max_weight, std::uint64_t seed)
{
  std::vector<CorpusInstance> out;
  if (count <= 0) return out;
  out.push_back({"cycle:5", cycle_graph(5), false});
  out.push_back({"cycle:7", cycle_graph(7), false});
  out.push_back({"antihole:7", complement(cycle_graph(7)), false});
  const int lo = std::max(min_n, 5);
  const int hi = std::max(max_n, lo);
  for (int i = 3; i < count; ++i) {
    Rng rng(derive_seed(seed ^ 0x5eedULL, static_cast<std::uint64_t>(i)));
    while (true) {
      const int n = static_cast<int>(uniform_int(rng, lo, hi));
      GraphBuilder b(n);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (bernoulli(rng, 0.5)) b.add_edge(u, v);
        }
      }
      WeightedGraph g = with_random_integer_weights(b.build(), max_weight, rng);
      if (is_perfect(g).is_perfect || !usable(g)) continue;
      out.push_back({"random_gnp:" + std::to_string(n) + "#" + std::to_string(i), std::move(g), false});
      break;
    }
  }
  out.resize(static_cast<std::size_t>(std::min<int>(count, static_cast<int>(out.size()))));
  return out;
}

std::optional<Imputation> perturb_infeasible(const WeightedGraph &g, const CliqueSet &cliques, const Imputation &y,
                                             Rng &rng)
{
  const VertexList candidates = breakable_vertices(g, cliques);
  if (candidates.empty()) return std::nullopt;
  const VertexId v = pick(candidates, rng);
  const VectorXq cover = coverage(cliques, y);
  const Rational &w = g.weight(v);

  // Drain enough that v ends at w_v - eps with 0 < eps <= w_v.
  VectorXq next = y.y();
  Rational drained(0);
  if (cover(v) >= w) {
    const Rational eps = w * Rational(uniform_int(rng, 1, 4)) / Rational(4);
    Rational remaining = cover(v) - w + eps;
    std::vector<CliqueId> through(cliques.containing(v));
    for (std::size_t i = through.size(); i > 1; --i) std::swap(through[i - 1], through[uniform_below(rng, i)]);
    for (const CliqueId q : through) {
      const Rational take = std::min(next(q), remaining);
      next(q) -= take;
      remaining -= take;
      drained += take;
    }
  }
  std::vector<CliqueId> missing;
  for (std::size_t q = 0; q < cliques.size(); ++q) {
    const VertexList &c = cliques[static_cast<CliqueId>(q)];
    if (!std::binary_search(c.begin(), c.end(), v)) missing.push_back(static_cast<CliqueId>(q));
  }
  if (drained > 0) {
    const CliqueId a = pick(missing, rng);
    const CliqueId b = pick(missing, rng);
    const Rational share = drained * Rational(uniform_int(rng, 0, 4)) / Rational(4);
    next(a) += share;
    next(b) += drained - share;
  }
  return Imputation(std::move(next));
}

Imputation random_imputation(const CliqueSet &cliques, const Rational &total, Rng &rng)
{
  VectorXq y = VectorXq::Zero(static_cast<Eigen::Index>(cliques.size()));
  if (cliques.empty() || total == 0) return Imputation(std::move(y));
  Rational sum(0);
  for (Eigen::Index q = 0; q < y.size(); ++q) {
    y(q) = Rational(uniform_int(rng, 0, 10));
    sum += y(q);
  }
  if (sum == 0) {
    y(static_cast<Eigen::Index>(uniform_below(rng, cliques.size()))) = total;
    return Imputation(std::move(y));
  }
  y *= total / sum;
  return Imputation(std::move(y));
}

CliqueWeights random_subclique_weights(const WeightedGraph &g, const CliqueSet &cliques, bool cover, Rng &rng)
{
  CliqueWeights z;
  if (cliques.empty()) return z;
  const auto extra = uniform_int(rng, 1, 6);
  for (std::int64_t i = 0; i < extra; ++i) {
    const VertexList &c = cliques[static_cast<CliqueId>(uniform_below(rng, cliques.size()))];
    z[random_nonempty_subset(c, rng)] += random_fraction(rng, 6, 3);
  }
  if (cover) {
    for (int v = 0; v < g.order(); ++v) {
      if (g.weight(v) == 0) continue;
      const CliqueId q = pick(cliques.containing(v), rng);
      z[random_nonempty_subset(cliques[q], rng, v)] += g.weight(v) + random_fraction(rng, 1, 2);
    }
  }
  return z;
}

VectorXq random_binary_weights(int n, Rng &rng)
{
  VectorXq w(n);
  for (int v = 0; v < n; ++v) w(v) = Rational(static_cast<long>(uniform_below(rng, 2)));
  return w;
}

bool CorpusSummary::all_passed() const
{
  return std::all_of(properties.begin(), properties.end(), [](const auto &p) { return p.second.failed == 0; });
}

namespace {

class Runner
{
public:
  Runner(const CorpusOptions &options, CorpusSummary &summary) : options_(options), summary_(summary) {}

  void record(const std::string &property, bool ok, const std::string &instance, const std::string &detail = {})
  {
    auto &tally = summary_.properties[property];
    if (ok) {
      ++tally.passed;
    } else {
      ++tally.failed;
      if (summary_.failures.size() < 50) {
        summary_.failures.push_back(property + " failed on " + instance + (detail.empty() ? "" : ": " + detail));
      }
    }
  }

  void perfect_instance(const CorpusInstance &inst, std::uint64_t stream)
  {
    Rng rng(derive_seed(options_.seed ^ 0xc0de'0000ULL, stream));
    const WeightedGraph &g = inst.graph;
    const CliqueSet cliques = maximal_cliques(g);

    const PerfectionVerdict verdict = is_perfect(g);
    const PerfectionVerdict co_verdict = is_perfect(complement(g));
    record("perfection", verdict.is_perfect && co_verdict.is_perfect, inst.name);

    LpPair pair;
    try {
      pair = solve_pair(g, cliques.cliques());
      record("strong_duality", true, inst.name);
    } catch (const DualityGapError &e) {
      record("strong_duality", false, inst.name, e.what());
      return;
    }

    const Rational worth = game_worth(g);
    const Imputation optimal(pair.dual.y);
    const auto agree = [&](const Imputation &y, Verdict expected) {
      const CoreReport cert = verify_core_certificate(g, cliques, y);
      const CoreReport full = verify_core_exhaustive(g, cliques, y);
      return cert.verdict == full.verdict && cert.verdict == expected;
    };
    record("optimal_dual_in_core", pair.dual.value == worth && agree(optimal, Verdict::in_core), inst.name);
    int broken = 0;
    bool perturbed_ok = true;
    for (int k = 0; k < options_.perturbations; ++k) {
      const auto y = perturb_infeasible(g, cliques, optimal, rng);
      if (!y) break;
      ++broken;
      perturbed_ok = perturbed_ok && y->total() == worth && agree(*y, Verdict::violated);
    }
    record("perturbed_rejected", perturbed_ok && broken == options_.perturbations, inst.name,
           std::to_string(broken) + " perturbations");
    bool random_ok = true;
    for (int k = 0; k < options_.random_vectors; ++k) {
      const Imputation y = random_imputation(cliques, worth, rng);
      const CoreReport cert = verify_core_certificate(g, cliques, y);
      const CoreReport full = verify_core_exhaustive(g, cliques, y);
      random_ok = random_ok && cert.verdict == full.verdict;
    }
    record("certificate_exhaustive_agreement", random_ok, inst.name);

    const IntegralCover integral = min_integral_clique_cover(g, cliques, g.weights());
    record("tdi", is_integer(pair.dual.value) && pair.dual.value == Rational(integral.value), inst.name,
           "dual " + to_display_string(pair.dual.value) + " vs integral " + std::to_string(integral.value));

    bool chain_ok = true;
    for (int k = 0; k < options_.binary_weight_vectors; ++k) {
      const FourProgramReport r = four_program_chain(g, random_binary_weights(g.order(), rng));
      chain_ok = chain_ok && r.chain_holds() && r.tight();
    }
    record("four_program_chain", chain_ok, inst.name);
  }

  void imperfect_instance(const CorpusInstance &inst, std::uint64_t stream)
  {
    Rng rng(derive_seed(options_.seed ^ 0xbad0'0000ULL, stream));
    const WeightedGraph &g = inst.graph;
    const CliqueSet cliques = maximal_cliques(g);
    const PerfectionVerdict verdict = is_perfect(g);
    record("imperfect_flagged", !verdict.is_perfect && verdict.witness && witness_is_valid(g, *verdict.witness),
           inst.name);

    const LpPair pair = solve_pair(g, cliques.cliques());
    record("strong_duality", true, inst.name);
    const Rational worth = game_worth(g);

    bool chain_ok = true;
    int tight = 0;
    const VectorXq ones = VectorXq::Ones(g.order());
    std::vector<FourProgramReport> reports{four_program_chain(g, ones)};
    for (int k = 0; k < options_.binary_weight_vectors; ++k) {
      reports.push_back(four_program_chain(g, random_binary_weights(g.order(), rng)));
    }
    for (const auto &r : reports) {
      chain_ok = chain_ok && r.chain_holds();
      tight += r.tight() ? 1 : 0;
    }
    record("four_program_chain_inequalities", chain_ok, inst.name);

    bool agree = true;
    for (int k = 0; k < options_.random_vectors; ++k) {
      const Imputation y = random_imputation(cliques, worth, rng);
      agree = agree && verify_core_certificate(g, cliques, y).verdict ==
                           verify_core_exhaustive(g, cliques, y).verdict;
    }
    record("certificate_exhaustive_agreement", agree, inst.name);

    nlohmann::json finding = {{"instance", inst.name},
                              {"worth", to_fraction_string(worth)},
                              {"dual_optimum", to_fraction_string(pair.dual.value)},
                              {"core_empty", pair.dual.value != worth},
                              {"unit_chain", to_json(reports.front())},
                              {"tight_chains", tight},
                              {"chains", reports.size()}};
    if (verdict.witness) finding["witness"] = to_json(verdict)["witness"];
    summary_.imperfect.push_back(std::move(finding));
  }

private:
  const CorpusOptions &options_;
  CorpusSummary &summary_;
};

} // namespace

CorpusSummary run_corpus(const CorpusOptions &options)
{
  CorpusSummary summary;
  if (options.count <= 0) return summary;
  Runner runner(options, summary);
  const auto corpus = perfect_corpus(options.count, options.min_n, options.max_n, options.max_weight, options.seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    runner.perfect_instance(corpus[i], i);
    ++summary.instances;
  }
  if (options.include_imperfect) {
    const int extra = std::max(3, options.count / 4);
    const auto bad = imperfect_corpus(extra, options.min_n, options.max_n, options.max_weight, options.seed);
    for (std::size_t i = 0; i < bad.size(); ++i) {
      runner.imperfect_instance(bad[i], i);
      ++summary.instances;
    }
  }
  return summary;
}

nlohmann::json to_json(const CorpusSummary &s, const CorpusOptions &options)
{
  nlohmann::json props = nlohmann::json::object();
  for (const auto &[name, tally] : s.properties) props[name] = {{"pass", tally.passed}, {"fail", tally.failed}};
  return {{"seed", options.seed},
          {"count", options.count},
          {"n_range", {options.min_n, options.max_n}},
          {"instances", s.instances},
          {"properties", std::move(props)},
          {"imperfect", s.imperfect},
          {"failures", s.failures},
          {"passed", s.all_passed()}};
}

} // namespace imgame
