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


#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "imgame/core.hpp"
#include "imgame/generators.hpp"
#include "imgame/report.hpp"

namespace {

struct InputOptions
{
  std::string input;
  std::string generate;
  std::optional<std::uint64_t> seed;
  bool random_weights = false;
  int max_weight = 10;
  int max_n = 30;
  bool json = false;
};

void add_input_options(CLI::App &cmd, InputOptions &opts)
{
  auto *in = cmd.add_option("--input", opts.input, "Graph file (p/e/w/l line format)");
  auto *gen = cmd.add_option("--generate", opts.generate,
                             "Generator: paley3x3, cycle:k, complete:k, path:k, random_bipartite:n:p, random_chordal:n");
  in->excludes(gen);
  gen->excludes(in);
  cmd.add_option("--seed", opts.seed, "Seed for random generators and random weights");
  cmd.add_flag("--random-weights", opts.random_weights, "Replace weights by uniform integers in [0, --max-weight]");
  cmd.add_option("--max-weight", opts.max_weight, "Largest random weight")->check(CLI::NonNegativeNumber);
  cmd.add_option("--max-n", opts.max_n, "Refuse graphs with more vertices than this")->check(CLI::NonNegativeNumber);
  cmd.add_flag("--json", opts.json, "Emit a JSON report");
}

std::string read_file(const std::string &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

imgame::WeightedGraph load_graph(const InputOptions &opts)
{
  if (opts.input.empty() == opts.generate.empty()) {
    throw std::invalid_argument("exactly one of --input or --generate is required");
  }
  imgame::WeightedGraph g;
  if (!opts.input.empty()) {
    g = imgame::parse_graph(read_file(opts.input));
    if (opts.random_weights) {
      if (!opts.seed) throw std::invalid_argument("--random-weights requires --seed");
      imgame::Rng rng(*opts.seed);
      g = imgame::with_random_integer_weights(g, opts.max_weight, rng);
    }
  } else {
    const auto spec = imgame::parse_generator_spec(opts.generate);
    g = imgame::generate(spec, opts.random_weights ? imgame::WeightMode::random_integer : imgame::WeightMode::unit,
                         opts.seed, opts.max_weight);
  }
  if (g.order() > opts.max_n) {
    throw imgame::GuardError("graph has " + std::to_string(g.order()) + " vertices; --max-n is " +
                             std::to_string(opts.max_n));
  }
  return g;
}

int emit(const imgame::CommandOutput &out, bool json)
{
  for (const auto &w : out.warnings) std::cerr << "warning: " << w << '\n';
  if (json) std::cout << out.json.dump(2) << '\n';
  else std::cout << out.text;
  return out.exit_code;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Core imputations of the investment management game on perfect graphs"};
  app.require_subcommand(1);

  InputOptions solve_opts;
  std::string dump_lp;
  auto *solve = app.add_subcommand("solve", "Worth, primal/dual optima and a core imputation");
  add_input_options(*solve, solve_opts);
  solve->add_option("--dump-lp", dump_lp, "Write both LPs in CPLEX LP format to this path");

  InputOptions verify_opts;
  std::string imputation_path;
  bool exhaustive = false;
  auto *verify = app.add_subcommand("verify", "Check whether an imputation is in the core");
  add_input_options(*verify, verify_opts);
  verify->add_option("--imputation", imputation_path, "JSON object: clique key -> \"num/den\"")->required();
  verify->add_flag("--exhaustive", exhaustive, "Check all 2^n scenarios instead of the dual certificate");

  InputOptions perfect_opts;
  auto *check_perfect = app.add_subcommand("check-perfect", "Decide perfection and print a witness");
  add_input_options(*check_perfect, perfect_opts);

  InputOptions cliques_opts;
  auto *cliques = app.add_subcommand("cliques", "List maximal cliques in canonical order");
  add_input_options(*cliques, cliques_opts);

  InputOptions generate_opts;
  auto *generate = app.add_subcommand("generate", "Write a generated graph in the graph file format");
  add_input_options(*generate, generate_opts);

  imgame::CorpusOptions corpus_opts;
  bool corpus_json = false;
  auto *corpus = app.add_subcommand("corpus", "Run the property suites over a generated corpus");
  corpus->add_option("--n", corpus_opts.max_n, "Largest graph order")->check(CLI::Range(1, 16));
  corpus->add_option("--min-n", corpus_opts.min_n, "Smallest graph order")->check(CLI::Range(1, 16));
  corpus->add_option("--count", corpus_opts.count, "Number of perfect instances")->check(CLI::NonNegativeNumber);
  corpus->add_option("--seed", corpus_opts.seed, "Corpus seed");
  corpus->add_option("--max-weight", corpus_opts.max_weight, "Largest vertex weight")->check(CLI::NonNegativeNumber);
  corpus->add_flag("--include-imperfect", corpus_opts.include_imperfect, "Also report on graphs with odd holes");
  corpus->add_flag("--json", corpus_json, "Emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : imgame::exit_code::input_error;
  }

  try {
    if (*solve) {
      const auto g = load_graph(solve_opts);
      if (!dump_lp.empty()) {
        std::ofstream out(dump_lp);
        if (!out) throw std::invalid_argument("cannot write '" + dump_lp + "'");
        out << imgame::lp_dump(g);
      }
      return emit(imgame::solve_command(g), solve_opts.json);
    }
    if (*verify) {
      const auto g = load_graph(verify_opts);
      const auto j = nlohmann::json::parse(read_file(imputation_path));
      return emit(imgame::verify_command(g, j, exhaustive), verify_opts.json);
    }
    if (*check_perfect) return emit(imgame::check_perfect_command(load_graph(perfect_opts)), perfect_opts.json);
    if (*cliques) return emit(imgame::cliques_command(load_graph(cliques_opts)), cliques_opts.json);
    if (*generate) return emit(imgame::generate_command(load_graph(generate_opts)), generate_opts.json);
    if (*corpus) {
      if (corpus_opts.min_n > corpus_opts.max_n) corpus_opts.min_n = corpus_opts.max_n;
      return emit(imgame::corpus_command(corpus_opts), corpus_json);
    }
  } catch (const imgame::GuardError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return imgame::exit_code::guard_violation;
  } catch (const imgame::ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return imgame::exit_code::input_error;
  } catch (const nlohmann::json::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return imgame::exit_code::input_error;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return imgame::exit_code::input_error;
  } catch (const std::out_of_range &e) {
    std::cerr << "error: " << e.what() << '\n';
    return imgame::exit_code::input_error;
  }
  return imgame::exit_code::success;
}
