#include "commbench/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>

namespace commbench {

std::size_t Graph::check(NodeId u) const {
  if (u < 0 || u >= node_count_) {
    throw ArgumentError("node index " + std::to_string(u) + " out of range [0, " +
                        std::to_string(node_count_) + ")");
  }
  return static_cast<std::size_t>(u);
}

double Graph::degree(NodeId u) const { return degrees_[check(u)]; }

std::int64_t Graph::unweighted_degree(NodeId u) const {
  const std::size_t i = check(u);
  return offsets_[i + 1] - offsets_[i];
}

std::span<const Neighbor> Graph::neighbors(NodeId u) const {
  const std::size_t i = check(u);
  return {adjacency_.data() + offsets_[i],
          static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
}

Graph Graph::from_edges(NodeId node_count,
                        std::span<const std::tuple<NodeId, NodeId, double>> edges,
                        std::vector<double> self_loops, std::vector<Label> labels) {
  if (node_count < 0) throw ArgumentError("negative node count");
  Graph g;
  g.node_count_ = node_count;
  const std::size_t n = static_cast<std::size_t>(node_count);

  if (self_loops.empty()) self_loops.assign(n, 0.0);
  if (self_loops.size() != n) throw ArgumentError("self_loops size mismatch");
  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Label>(i);
  }
  if (labels.size() != n) throw ArgumentError("labels size mismatch");
  for (double w : self_loops)
    if (w < 0.0) throw ArgumentError("negative self-loop weight");

  // Normalize to (min, max) pairs, then merge duplicates.
  std::vector<std::tuple<NodeId, NodeId, double>> es(edges.begin(), edges.end());
  for (auto& [u, v, w] : es) {
    if (u < 0 || u >= node_count || v < 0 || v >= node_count)
      throw ArgumentError("edge endpoint out of range");
    if (u == v) throw ArgumentError("self-loop passed as edge; use self_loops");
    if (w < 0.0) throw ArgumentError("negative edge weight");
    if (u > v) std::swap(u, v);
  }
  std::sort(es.begin(), es.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  std::vector<std::tuple<NodeId, NodeId, double>> merged;
  merged.reserve(es.size());
  for (const auto& e : es) {
    if (!merged.empty() && std::get<0>(merged.back()) == std::get<0>(e) &&
        std::get<1>(merged.back()) == std::get<1>(e)) {
      std::get<2>(merged.back()) += std::get<2>(e);
    } else {
      merged.push_back(e);
    }
  }

  std::vector<std::int64_t> counts(n + 1, 0);
  for (const auto& [u, v, w] : merged) {
    ++counts[static_cast<std::size_t>(u) + 1];
    ++counts[static_cast<std::size_t>(v) + 1];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + counts[i + 1];
  g.adjacency_.resize(static_cast<std::size_t>(g.offsets_[n]));

  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v, w] : merged) {
    g.adjacency_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(u)]++)] = {v, w};
    g.adjacency_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(v)]++)] = {u, w};
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(g.adjacency_.begin() + g.offsets_[i], g.adjacency_.begin() + g.offsets_[i + 1],
              [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
  }

  g.self_loops_ = std::move(self_loops);
  g.original_ids_ = std::move(labels);
  g.degrees_.assign(n, 0.0);
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double d = 0.0;
    for (std::int64_t e = g.offsets_[i]; e < g.offsets_[i + 1]; ++e)
      d += g.adjacency_[static_cast<std::size_t>(e)].weight;
    g.degrees_[i] = d + 2.0 * g.self_loops_[i];
    m += g.self_loops_[i];
  }
  for (const auto& [u, v, w] : merged) m += w;
  g.total_weight_m_ = m;
  return g;
}

ComponentLabeling Graph::connected_components() const {
  ComponentLabeling out;
  out.component_of.assign(static_cast<std::size_t>(node_count_), -1);
  NodeId next = 0;
  std::deque<NodeId> queue;
  for (NodeId root = 0; root < node_count_; ++root) {
    if (out.component_of[static_cast<std::size_t>(root)] != -1) continue;
    out.component_of[static_cast<std::size_t>(root)] = next;
    queue.push_back(root);
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      for (const Neighbor& nb : neighbors(u)) {
        if (out.component_of[static_cast<std::size_t>(nb.id)] == -1) {
          out.component_of[static_cast<std::size_t>(nb.id)] = next;
          queue.push_back(nb.id);
        }
      }
    }
    ++next;
  }
  out.component_count = next;
  return out;
}

void Graph::serialize(std::ostream& out) const {
  for (NodeId u = 0; u < node_count_; ++u) {
    for (const Neighbor& nb : neighbors(u)) {
      if (nb.id > u) out << label_of(u) << ' ' << label_of(nb.id) << '\n';
    }
  }
}

namespace {

bool parse_label(std::string_view token, Label& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && out >= 0;
}

}  // namespace

Graph parse_edge_list(std::istream& in, ParseStats* stats) {
  ParseStats local;
  std::map<Label, NodeId> index_of;  // ordered: ascending-label dense re-indexing
  std::vector<std::pair<Label, Label>> edges;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;  // blank
    if (line[pos] == '#') {
      ++local.comment_lines;
      continue;
    }
    Label tokens[2];
    int count = 0;
    while (pos < line.size()) {
      std::size_t end = line.find_first_of(" \t\r", pos);
      if (end == std::string::npos) end = line.size();
      std::string_view token(line.data() + pos, end - pos);
      if (count >= 2) throw ParseError("expected two node labels, found extra token", line_no);
      if (!parse_label(token, tokens[count]))
        throw ParseError("invalid node label '" + std::string(token) + "'", line_no);
      ++count;
      pos = line.find_first_not_of(" \t\r", end);
      if (pos == std::string::npos) break;
    }
    if (count != 2) throw ParseError("expected two node labels", line_no);
    index_of.emplace(tokens[0], 0);
    index_of.emplace(tokens[1], 0);
    if (tokens[0] == tokens[1]) {
      ++local.self_loop_lines;
      continue;
    }
    edges.emplace_back(tokens[0], tokens[1]);
  }
  if (index_of.empty()) throw ParseError("empty edge list");

  NodeId next = 0;
  for (auto& [label, idx] : index_of) idx = next++;

  std::vector<std::tuple<NodeId, NodeId, double>> dense;
  dense.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    NodeId u = index_of[a], v = index_of[b];
    if (u > v) std::swap(u, v);
    dense.emplace_back(u, v, 1.0);
  }
  std::sort(dense.begin(), dense.end());
  const auto last = std::unique(dense.begin(), dense.end(),
                                [](const auto& a, const auto& b) {
                                  return std::get<0>(a) == std::get<0>(b) &&
                                         std::get<1>(a) == std::get<1>(b);
                                });
  local.duplicate_edges = static_cast<std::size_t>(dense.end() - last);
  dense.erase(last, dense.end());

  std::vector<Label> labels(index_of.size());
  for (const auto& [label, idx] : index_of) labels[static_cast<std::size_t>(idx)] = label;

  if (stats) *stats = local;
  return Graph::from_edges(next, dense, {}, std::move(labels));
}

Graph parse_edge_list_file(const std::filesystem::path& path, ParseStats* stats) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return parse_edge_list(in, stats);
}

std::vector<CutVolume> cut_and_volume(const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count())
    throw ArgumentError("partition covers " + std::to_string(p.node_count()) +
                        " nodes, graph has " + std::to_string(g.node_count()));
  std::vector<CutVolume> out(static_cast<std::size_t>(p.community_count()));
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const NodeId cu = p.community_of(u);
    out[static_cast<std::size_t>(cu)].volume += g.degree(u);
    for (const Neighbor& nb : g.neighbors(u)) {
      if (p.community_of(nb.id) != cu) out[static_cast<std::size_t>(cu)].cut += nb.weight;
    }
  }
  return out;
}

Graph aggregate(const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count()) throw ArgumentError("partition/graph size mismatch");
  const NodeId k = p.community_count();
  std::vector<double> self(static_cast<std::size_t>(k), 0.0);
  std::map<std::pair<NodeId, NodeId>, double> between;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const NodeId cu = p.community_of(u);
    self[static_cast<std::size_t>(cu)] += g.self_loop(u);
    for (const Neighbor& nb : g.neighbors(u)) {
      if (nb.id < u) continue;  // each unordered edge once
      const NodeId cv = p.community_of(nb.id);
      if (cu == cv) {
        self[static_cast<std::size_t>(cu)] += nb.weight;
      } else {
        between[{std::min(cu, cv), std::max(cu, cv)}] += nb.weight;
      }
    }
  }
  std::vector<std::tuple<NodeId, NodeId, double>> edges;
  edges.reserve(between.size());
  for (const auto& [uv, w] : between) edges.emplace_back(uv.first, uv.second, w);
  return Graph::from_edges(k, edges, std::move(self));
}

}  // namespace commbench
