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


#include "imgame/exactlp.hpp"

#include <sstream>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace imgame {

namespace {

// LP-format names may not contain '-'.
std::string lp_name(char prefix, const VertexList &members)
{
  std::string name(1, prefix);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) name += '_';
    name += std::to_string(members[i]);
  }
  return name;
}

} // namespace

LinearProgram<Rational> stable_set_lp(const WeightedGraph &g, const std::vector<VertexList> &cliques)
{
  const CliqueSet set(cliques, g.order());
  LinearProgram<Rational> lp;
  lp.direction = Direction::maximize;
  lp.objective = g.weights();
  lp.constraints = set.incidence<Rational>();
  lp.senses.assign(set.size(), Sense::less_equal);
  lp.rhs = VectorXq::Ones(static_cast<Eigen::Index>(set.size()));
  for (int v = 0; v < g.order(); ++v) lp.variable_names.push_back("x" + std::to_string(v));
  for (const auto &q : set.cliques()) lp.row_names.push_back(lp_name('Q', q));
  return lp;
}

LinearProgram<Rational> clique_cover_lp(const WeightedGraph &g, const std::vector<VertexList> &cliques)
{
  const CliqueSet set(cliques, g.order());
  LinearProgram<Rational> lp;
  lp.direction = Direction::minimize;
  lp.objective = VectorXq::Ones(static_cast<Eigen::Index>(set.size()));
  lp.constraints = set.incidence<Rational>().transpose();
  lp.senses.assign(static_cast<std::size_t>(g.order()), Sense::greater_equal);
  lp.rhs = g.weights();
  for (const auto &q : set.cliques()) lp.variable_names.push_back(lp_name('y', q));
  for (int v = 0; v < g.order(); ++v) lp.row_names.push_back("v" + std::to_string(v));
  return lp;
}

LpPair solve_pair(const WeightedGraph &g, const std::vector<VertexList> &cliques)
{
  const auto primal = solve_general(stable_set_lp(g, cliques));
  const auto dual = solve_general(clique_cover_lp(g, cliques));
  if (primal.status != LpStatus::optimal || dual.status != LpStatus::optimal) {
    throw std::logic_error("stable-set or clique-cover LP did not reach an optimum");
  }
  if (primal.value != dual.value) {
    throw DualityGapError("primal optimum " + to_display_string(primal.value) + " differs from dual optimum " +
                          to_display_string(dual.value));
  }
  return {{primal.x, primal.value}, {dual.x, dual.value}};
}

PrimalSolution solve_primal(const WeightedGraph &g, const CliqueSet &cliques)
{
  return solve_pair(g, cliques.cliques()).primal;
}

DualSolution solve_dual(const WeightedGraph &g, const CliqueSet &cliques) { return solve_pair(g, cliques.cliques()).dual; }

bool is_integral(const PrimalSolution &sol) { return all_integer(sol.x); }
bool is_integral(const DualSolution &sol) { return all_integer(sol.y); }

namespace {

struct Coefficient
{
  std::string text;
  bool exact = true;
};

// Decimal rendering; exact iff the reduced denominator has only 2 and 5 as prime factors.
Coefficient decimal(const Rational &q)
{
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (is_integer(q)) return {numerator(q).str(), true};
  Integer d = denominator(q);
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d == 1) {
    const int digits = std::max(twos, fives);
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const Integer scaled = numerator(q) * (scale / denominator(q));
    const Integer mag = scaled < 0 ? Integer(-scaled) : scaled;
    std::string s = mag.str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return {(scaled < 0 ? "-" : "") + s, true};
  }
  using Dec = boost::multiprecision::cpp_dec_float_50;
  const Dec approx = Dec(numerator(q).str()) / Dec(denominator(q).str());
  return {approx.str(20, std::ios_base::scientific), false};
}

void write_term(std::ostream &out, const Rational &coef, const std::string &name, bool first, bool &exact)
{
  const Rational mag = coef < 0 ? Rational(-coef) : coef;
  if (coef < 0) out << (first ? "- " : " - ");
  else if (!first) out << " + ";
  if (mag != 1) {
    const Coefficient c = decimal(mag);
    exact = exact && c.exact;
    out << c.text << ' ';
  }
  out << name;
}

} // namespace

std::string write_lp_format(const LinearProgram<Rational> &lp)
{
  lp.validate();
  const auto var = [&](Eigen::Index j) {
    return lp.variable_names.empty() ? "x" + std::to_string(j) : lp.variable_names[static_cast<std::size_t>(j)];
  };
  const auto row = [&](Eigen::Index i) {
    return lp.row_names.empty() ? "c" + std::to_string(i) : lp.row_names[static_cast<std::size_t>(i)];
  };
  bool exact = true;
  std::ostringstream body;
  body << (lp.direction == Direction::maximize ? "Maximize\n" : "Minimize\n") << " obj: ";
  bool first = true;
  for (Eigen::Index j = 0; j < lp.variables(); ++j) {
    if (lp.objective(j) == 0) continue;
    write_term(body, lp.objective(j), var(j), first, exact);
    first = false;
  }
  if (first) body << "0 " << (lp.variables() > 0 ? var(0) : "x0");
  body << "\nSubject To\n";
  for (Eigen::Index i = 0; i < lp.rows(); ++i) {
    body << ' ' << row(i) << ": ";
    first = true;
    for (Eigen::Index j = 0; j < lp.variables(); ++j) {
      if (lp.constraints(i, j) == 0) continue;
      write_term(body, lp.constraints(i, j), var(j), first, exact);
      first = false;
    }
    if (first) body << "0 " << (lp.variables() > 0 ? var(0) : "x0");
    const Sense s = lp.senses[static_cast<std::size_t>(i)];
    body << (s == Sense::less_equal ? " <= " : s == Sense::greater_equal ? " >= " : " = ");
    const Coefficient c = decimal(lp.rhs(i));
    exact = exact && c.exact;
    body << c.text << '\n';
  }
  body << "End\n";
  std::string header = "\\ generated by imgame\n";
  if (!exact) header += "\\ WARNING: some coefficients are rounded decimal approximations\n";
  return header + body.str();
}

} // namespace imgame
