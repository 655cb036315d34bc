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

#include "imgame/graph.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

namespace imgame {

// ---------------------------------------------------------------- Scenario

Scenario::Scenario(VertexList members) : members_(std::move(members))
{
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.front() < 0) {
    throw std::out_of_range("scenario contains negative vertex id");
  }
}

Scenario Scenario::all(int n)
{
  VertexList v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return Scenario(std::move(v));
}

Scenario Scenario::from_mask(std::uint64_t mask)
{
  VertexList v;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) v.push_back(i);
  }
  return Scenario(std::move(v));
}

bool Scenario::contains(VertexId v) const { return std::binary_search(members_.begin(), members_.end(), v); }

std::uint64_t Scenario::mask() const
{
  std::uint64_t m = 0;
  for (VertexId v : members_) {
    if (v >= kMaxMaskVertices) throw std::out_of_range("scenario too large for a 64-bit mask");
    m |= std::uint64_t{1} << v;
  }
  return m;
}

void Scenario::check_valid_for(int n) const
{
  if (!members_.empty() && members_.back() >= n) {
    throw std::out_of_range("scenario member " + std::to_string(members_.back()) + " is not a vertex of a " +
                            std::to_string(n) + "-vertex graph");
  }
}

// ----------------------------------------------------------- WeightedGraph

WeightedGraph::WeightedGraph(int n)
    : adjacency_(AdjacencyMatrix::Constant(n, n, false)), weights_(VectorXq::Constant(n, Rational(1)))
{
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

WeightedGraph::WeightedGraph(AdjacencyMatrix adjacency, VectorXq weights, std::vector<std::string> labels)
    : adjacency_(std::move(adjacency)), weights_(std::move(weights)), labels_(std::move(labels))
{
  const Eigen::Index n = weights_.size();
  if (adjacency_.rows() != n || adjacency_.cols() != n) {
    throw std::invalid_argument("adjacency and weight dimensions disagree");
  }
  if (!labels_.empty() && static_cast<Eigen::Index>(labels_.size()) != n) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  for (Eigen::Index u = 0; u < n; ++u) {
    if (adjacency_(u, u)) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (weights_(u) < 0) throw std::invalid_argument("negative weight at vertex " + std::to_string(u));
    for (Eigen::Index v = u + 1; v < n; ++v) {
      if (adjacency_(u, v) != adjacency_(v, u)) throw std::invalid_argument("adjacency is not symmetric");
      if (adjacency_(u, v)) ++edge_count_;
    }
  }
  if (std::all_of(labels_.begin(), labels_.end(), [](const std::string &l) { return l.empty(); })) {
    labels_.clear();
  }
}

std::vector<std::pair<VertexId, VertexId>> WeightedGraph::edges() const
{
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (int v = u + 1; v < order(); ++v) {
      if (adjacency_(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexList WeightedGraph::neighbors(VertexId v) const
{
  VertexList out;
  for (int u = 0; u < order(); ++u) {
    if (adjacency_(v, u)) out.push_back(u);
  }
  return out;
}

int WeightedGraph::degree(VertexId v) const { return static_cast<int>(adjacency_.row(v).count()); }

std::uint64_t WeightedGraph::neighbor_mask(VertexId v) const
{
  if (order() > kMaxMaskVertices) throw GuardError("graph too large for bitmask routines");
  std::uint64_t m = 0;
  for (int u = 0; u < order(); ++u) {
    if (adjacency_(v, u)) m |= std::uint64_t{1} << u;
  }
  return m;
}

WeightedGraph WeightedGraph::with_weights(VectorXq weights) const
{
  return WeightedGraph(adjacency_, std::move(weights), labels_);
}

bool WeightedGraph::operator==(const WeightedGraph &other) const
{
  return order() == other.order() && adjacency_ == other.adjacency_ && weights_ == other.weights_ &&
         labels_ == other.labels_;
}

// ------------------------------------------------------------ GraphBuilder

GraphBuilder::GraphBuilder(int n)
    : n_(n), adjacency_(AdjacencyMatrix::Constant(n, n, false)), weights_(VectorXq::Constant(n, Rational(1))),
      labels_(static_cast<std::size_t>(std::max(n, 0)))
{
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

void GraphBuilder::check_vertex(VertexId v) const
{
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex id " + std::to_string(v) + " out of range 0.." + std::to_string(n_ - 1));
  }
}

bool GraphBuilder::add_edge(VertexId u, VertexId v)
{
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (adjacency_(u, v)) return false;
  adjacency_(u, v) = adjacency_(v, u) = true;
  return true;
}

void GraphBuilder::set_weight(VertexId v, Rational w)
{
  check_vertex(v);
  if (w < 0) throw std::invalid_argument("negative weight at vertex " + std::to_string(v));
  weights_(v) = std::move(w);
}

void GraphBuilder::set_label(VertexId v, std::string label)
{
  check_vertex(v);
  labels_[static_cast<std::size_t>(v)] = std::move(label);
}

WeightedGraph GraphBuilder::build() const { return WeightedGraph(adjacency_, weights_, labels_); }

// ------------------------------------------------------------------ file I/O

ParseError::ParseError(std::size_t line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
{
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line)
{
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long parse_integer(std::string_view field, std::size_t line_no, const char *what)
{
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line_no, std::string("expected integer ") + what + ", got '" + std::string(field) + "'");
  }
  return value;
}

} // namespace

WeightedGraph parse_graph(std::string_view text)
{
  std::optional<GraphBuilder> builder;
  long long declared_edges = 0;
  long long seen_edges = 0;
  std::size_t header_line = 0;
  std::vector<bool> weighted;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto fields = split_fields(line);
    if (fields.empty()) continue;

    const std::string_view tag = fields[0];
    if (tag == "p") {
      if (builder) throw ParseError(line_no, "duplicate 'p' header");
      if (fields.size() != 3) throw ParseError(line_no, "expected 'p <n> <m>'");
      const long long n = parse_integer(fields[1], line_no, "vertex count");
      declared_edges = parse_integer(fields[2], line_no, "edge count");
      if (n < 0 || declared_edges < 0) throw ParseError(line_no, "negative count in header");
      if (n > 1'000'000) throw ParseError(line_no, "vertex count too large");
      builder.emplace(static_cast<int>(n));
      weighted.assign(static_cast<std::size_t>(n), false);
      header_line = line_no;
      continue;
    }
    if (!builder) throw ParseError(line_no, "'" + std::string(tag) + "' line before 'p' header");
    const int n = static_cast<int>(weighted.size());
    const auto vertex = [&](std::string_view f) {
      const long long v = parse_integer(f, line_no, "vertex id");
      if (v < 0 || v >= n) {
        throw ParseError(line_no, "vertex id " + std::string(f) + " out of range 0.." + std::to_string(n - 1));
      }
      return static_cast<VertexId>(v);
    };

    if (tag == "e") {
      if (fields.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      const VertexId u = vertex(fields[1]);
      const VertexId v = vertex(fields[2]);
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      if (!builder->add_edge(u, v)) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      }
      ++seen_edges;
    } else if (tag == "w") {
      if (fields.size() != 3) throw ParseError(line_no, "expected 'w <v> <num>[/<den>]'");
      const VertexId v = vertex(fields[1]);
      if (weighted[static_cast<std::size_t>(v)]) {
        throw ParseError(line_no, "duplicate weight for vertex " + std::to_string(v));
      }
      Rational w;
      try {
        w = parse_rational(fields[2]);
      } catch (const std::invalid_argument &e) {
        throw ParseError(line_no, e.what());
      }
      if (w < 0) throw ParseError(line_no, "negative weight " + std::string(fields[2]));
      builder->set_weight(v, std::move(w));
      weighted[static_cast<std::size_t>(v)] = true;
    } else if (tag == "l") {
      if (fields.size() < 3) throw ParseError(line_no, "expected 'l <v> <name>'");
      const VertexId v = vertex(fields[1]);
      const auto start = static_cast<std::size_t>(fields[2].data() - line.data());
      std::string_view name = line.substr(start);
      while (!name.empty() && (name.back() == ' ' || name.back() == '\t' || name.back() == '\r')) {
        name.remove_suffix(1);
      }
      builder->set_label(v, std::string(name));
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tag) + "'");
    }
  }
  if (!builder) throw ParseError(line_no, "missing 'p' header");
  if (seen_edges != declared_edges) {
    throw ParseError(header_line, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                      std::to_string(seen_edges));
  }
  return builder->build();
}

std::string serialize_graph(const WeightedGraph &g)
{
  std::ostringstream out;
  out << "p " << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto &[u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  for (int v = 0; v < g.order(); ++v) {
    if (g.weight(v) != 1) out << "w " << v << ' ' << to_display_string(g.weight(v)) << '\n';
  }
  for (std::size_t v = 0; v < g.labels().size(); ++v) {
    if (!g.labels()[v].empty()) out << "l " << v << ' ' << g.labels()[v] << '\n';
  }
  return out.str();
}

nlohmann::json graph_to_json(const WeightedGraph &g)
{
  nlohmann::json edges = nlohmann::json::array();
  for (const auto &[u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::json weights = nlohmann::json::array();
  for (int v = 0; v < g.order(); ++v) weights.push_back(to_fraction_string(g.weight(v)));
  nlohmann::json out = {{"n", g.order()}, {"edges", std::move(edges)}, {"weights", std::move(weights)}};
  if (!g.labels().empty()) out["labels"] = g.labels();
  return out;
}

// --------------------------------------------------------------- transforms

InducedSubgraph induced_subgraph(const WeightedGraph &g, const Scenario &s)
{
  s.check_valid_for(g.order());
  const VertexList &keep = s.members();
  const auto k = static_cast<Eigen::Index>(keep.size());
  AdjacencyMatrix adjacency(k, k);
  VectorXq weights(k);
  std::vector<std::string> labels;
  if (!g.labels().empty()) labels.resize(keep.size());
  for (Eigen::Index i = 0; i < k; ++i) {
    const VertexId u = keep[static_cast<std::size_t>(i)];
    weights(i) = g.weight(u);
    if (!labels.empty()) labels[static_cast<std::size_t>(i)] = g.labels()[static_cast<std::size_t>(u)];
    for (Eigen::Index j = 0; j < k; ++j) adjacency(i, j) = g.adjacent(u, keep[static_cast<std::size_t>(j)]);
  }
  return {WeightedGraph(std::move(adjacency), std::move(weights), std::move(labels)), keep};
}

WeightedGraph complement(const WeightedGraph &g)
{
  AdjacencyMatrix adjacency = g.adjacency().unaryExpr([](bool a) { return !a; });
  adjacency.diagonal().setConstant(false);
  return WeightedGraph(std::move(adjacency), g.weights(), g.labels());
}

} // namespace imgame
