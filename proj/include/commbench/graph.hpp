#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <tuple>
#include <vector>

#include "commbench/partition.hpp"

namespace commbench {

struct Neighbor {
  NodeId id;
  double weight;
};

struct ComponentLabeling {
  std::vector<NodeId> component_of;
  NodeId component_count = 0;
};

/// Immutable undirected weighted graph in compressed adjacency form.
///
/// Self-loops are stored apart from the adjacency (they only arise through
/// aggregation). degree(u) = incident edge weight + 2*self_loop(u), and
/// total_weight() is m = sum of unordered edge weights + self-loop weights.
class Graph {
 public:
  Graph() = default;

  /// Build from unordered (u, v, w) entries, u != v; duplicate entries are
  /// merged by summing weights. `labels` defaults to 0..n-1.
  static Graph from_edges(NodeId node_count,
                          std::span<const std::tuple<NodeId, NodeId, double>> edges,
                          std::vector<double> self_loops = {},
                          std::vector<Label> labels = {});

  NodeId node_count() const { return node_count_; }
  /// Number of stored unordered edges (self-loops not included).
  std::int64_t edge_count() const { return static_cast<std::int64_t>(adjacency_.size()) / 2; }
  double total_weight() const { return total_weight_m_; }

  double degree(NodeId u) const;
  std::int64_t unweighted_degree(NodeId u) const;
  double self_loop(NodeId u) const { return self_loops_[check(u)]; }
  std::span<const Neighbor> neighbors(NodeId u) const;

  Label label_of(NodeId u) const { return original_ids_[check(u)]; }
  const std::vector<Label>& labels() const { return original_ids_; }

  ComponentLabeling connected_components() const;

  /// Writes "u v" per unordered edge, ascending, with original labels.
  void serialize(std::ostream& out) const;

 private:
  std::size_t check(NodeId u) const;

  NodeId node_count_ = 0;
  std::vector<std::int64_t> offsets_;   // node_count + 1
  std::vector<Neighbor> adjacency_;     // both directions, sorted per node
  std::vector<double> self_loops_;
  std::vector<double> degrees_;
  std::vector<Label> original_ids_;
  double total_weight_m_ = 0.0;
};

struct ParseStats {
  std::size_t self_loop_lines = 0;
  std::size_t duplicate_edges = 0;
  std::size_t comment_lines = 0;
};

/// Parse a SNAP-style edge list: whitespace-separated non-negative integer
/// label pairs, '#' comment lines. Duplicate and reversed-duplicate edges
/// collapse to weight 1; self-loop lines are skipped and counted in `stats`.
/// Nodes are densely re-indexed in ascending label order.
Graph parse_edge_list(std::istream& in, ParseStats* stats = nullptr);
Graph parse_edge_list_file(const std::filesystem::path& path, ParseStats* stats = nullptr);

struct CutVolume {
  double cut = 0.0;
  double volume = 0.0;
};

/// Per-community cut (weight leaving the community) and volume (sum of
/// member degrees). Throws ArgumentError on size mismatch.
std::vector<CutVolume> cut_and_volume(const Graph& g, const Partition& p);

/// Coarsen: one node per community, inter-community weights summed,
/// intra-community weight folded into self-loops. Preserves total weight.
Graph aggregate(const Graph& g, const Partition& p);

}  // namespace commbench
