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


#include "imgame/report.hpp"

#include <sstream>

#include "imgame/core.hpp"
#include "imgame/exactlp.hpp"
#include "imgame/perfection.hpp"

namespace imgame {

namespace {

std::string join(const VertexList &v)
{
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

nlohmann::json fraction_array(const VectorXq &v)
{
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_fraction_string(v(i)));
  return out;
}

} // namespace

CommandOutput solve_command(const WeightedGraph &g)
{
  CommandOutput out;
  const CliqueSet cliques = maximal_cliques(g);
  const StableSetResult best = max_weight_stable_set(g);
  const LpPair pair = solve_pair(g, cliques.cliques());
  const Imputation dual(pair.dual.y);

  nlohmann::json perfect = nullptr;
  if (g.order() <= kPerfectionGuard) perfect = is_perfect(g).is_perfect;
  const bool dual_matches = pair.dual.value == best.total_cost;
  if (!dual_matches) {
    out.warnings.push_back("graph not perfect; dual " + to_display_string(pair.dual.value) + " != worth " +
                           to_display_string(best.total_cost));
  }

  out.json = {{"n", g.order()},
              {"cliques", cliques.size()},
              {"worth", to_fraction_string(best.total_cost)},
              {"optimal_investment", to_json(best)},
              {"primal", {{"x", fraction_array(pair.primal.x)}, {"value", to_fraction_string(pair.primal.value)}}},
              {"dual",
               {{"imputation", imputation_to_json(cliques, dual)}, {"value", to_fraction_string(pair.dual.value)}}},
              {"integral", {{"primal", is_integral(pair.primal)}, {"dual", is_integral(pair.dual)}}},
              {"dual_equals_worth", dual_matches},
              {"perfect", perfect},
              {"warnings", out.warnings}};

  std::ostringstream text;
  text << "vertices: " << g.order() << ", maximal cliques: " << cliques.size() << '\n';
  text << "worth T: " << to_display_string(best.total_cost) << " (optimal investment " << join(best.members)
       << ")\n";
  text << "primal optimum: " << to_display_string(pair.primal.value)
       << (is_integral(pair.primal) ? " (integral)" : " (fractional)") << '\n';
  text << "dual optimum: " << to_display_string(pair.dual.value)
       << (is_integral(pair.dual) ? " (integral)" : " (fractional)") << '\n';
  text << "dual imputation:\n";
  for (std::size_t q = 0; q < cliques.size(); ++q) {
    const Rational &v = dual[static_cast<CliqueId>(q)];
    if (v != 0) text << "  " << clique_key(cliques[static_cast<CliqueId>(q)]) << ": " << to_display_string(v) << '\n';
  }
  if (!perfect.is_null()) text << "perfect: " << (perfect.get<bool>() ? "yes" : "no") << '\n';
  out.text = text.str();
  return out;
}

std::string lp_dump(const WeightedGraph &g)
{
  const CliqueSet cliques = maximal_cliques(g);
  return "\\ maximal-clique stable set LP\n" + write_lp_format(stable_set_lp(g, cliques.cliques())) +
         "\n\\ maximal-clique cover LP\n" + write_lp_format(clique_cover_lp(g, cliques.cliques()));
}

CommandOutput verify_command(const WeightedGraph &g, const nlohmann::json &imputation, bool exhaustive)
{
  const CliqueSet cliques = maximal_cliques(g);
  const Imputation y = imputation_from_json(cliques, imputation);
  const CoreReport r = exhaustive ? verify_core_exhaustive(g, cliques, y) : verify_core_certificate(g, cliques, y);

  CommandOutput out;
  out.json = to_json(r);
  out.json["method"] = exhaustive ? "exhaustive" : "certificate";
  out.exit_code = r.verdict == Verdict::in_core ? exit_code::success : exit_code::property_failure;

  std::ostringstream text;
  text << "verdict: " << to_string(r.verdict) << " (" << (exhaustive ? "exhaustive" : "certificate") << ")\n";
  text << "total money: " << to_display_string(r.total_money) << ", worth T: " << to_display_string(r.game_worth)
       << '\n';
  if (r.violation) {
    text << "violated scenario " << join(r.violation->scenario.members()) << ": money "
         << to_display_string(r.violation->money) << " < cost " << to_display_string(r.violation->cost) << '\n';
  }
  text << "scenarios checked: " << r.scenarios_checked << '\n';
  out.text = text.str();
  return out;
}

CommandOutput check_perfect_command(const WeightedGraph &g)
{
  const PerfectionVerdict v = is_perfect(g);
  CommandOutput out;
  out.json = to_json(v);
  std::ostringstream text;
  text << (v.is_perfect ? "perfect" : "not perfect") << '\n';
  if (v.witness) {
    const char *kind = v.witness->kind == WitnessKind::odd_hole       ? "odd hole"
                       : v.witness->kind == WitnessKind::odd_antihole ? "odd antihole"
                                                                      : "omega/chi gap";
    text << "witness (" << kind << "): ";
    for (std::size_t i = 0; i < v.witness->vertices.size(); ++i) {
      text << (i ? " " : "") << v.witness->vertices[i];
    }
    text << '\n';
  }
  out.text = text.str();
  return out;
}

CommandOutput cliques_command(const WeightedGraph &g)
{
  const CliqueSet cliques = maximal_cliques(g);
  CommandOutput out;
  out.json = {{"n", g.order()}, {"cliques", cliques_to_json(cliques)}};
  std::ostringstream text;
  for (const auto &c : cliques.cliques()) text << clique_key(c) << '\n';
  out.text = text.str();
  return out;
}

CommandOutput generate_command(const WeightedGraph &g)
{
  CommandOutput out;
  out.json = graph_to_json(g);
  out.text = serialize_graph(g);
  return out;
}

CommandOutput corpus_command(const CorpusOptions &options)
{
  const CorpusSummary summary = run_corpus(options);
  CommandOutput out;
  out.json = to_json(summary, options);
  out.exit_code = summary.all_passed() ? exit_code::success : exit_code::property_failure;
  std::ostringstream text;
  text << "instances: " << summary.instances << '\n';
  for (const auto &[name, tally] : summary.properties) {
    text << "  " << name << ": " << tally.passed << " passed, " << tally.failed << " failed\n";
  }
  for (const auto &finding : summary.imperfect) {
    text << "  imperfect " << finding["instance"].get<std::string>() << ": worth " << finding["worth"].get<std::string>()
         << ", dual " << finding["dual_optimum"].get<std::string>() << ", Ip=Id on " << finding["tight_chains"].get<int>()
         << "/" << finding["chains"].get<std::size_t>() << " weight vectors\n";
  }
  for (const auto &f : summary.failures) text << "FAIL " << f << '\n';
  out.text = text.str();
  return out;
}

} // namespace imgame
