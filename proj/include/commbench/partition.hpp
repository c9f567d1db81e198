#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "commbench/errors.hpp"

namespace commbench {

using NodeId = std::int32_t;
using Label = std::int64_t;

/// Flat community assignment in canonical form: community indices are
/// 0..count-1, every community non-empty, labels ordered by first occurrence
/// in node order.
class Partition {
 public:
  Partition() = default;

  /// Canonicalize an arbitrary integer labeling (the `canonicalize` op).
  static Partition from_raw(std::span<const std::int64_t> raw);
  static Partition from_raw(std::span<const NodeId> raw);

  static Partition all_in_one(NodeId n);
  static Partition singletons(NodeId n);

  NodeId node_count() const { return static_cast<NodeId>(community_of_.size()); }
  NodeId community_count() const { return community_count_; }
  NodeId community_of(NodeId u) const { return community_of_[static_cast<std::size_t>(u)]; }
  const std::vector<NodeId>& assignments() const { return community_of_; }
  const std::vector<NodeId>& sizes() const { return sizes_; }

  /// Indices of the k largest communities, ties broken by lower index.
  /// Returns all communities when fewer than k exist.
  std::vector<NodeId> top_k_communities(NodeId k) const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<NodeId> community_of_;
  NodeId community_count_ = 0;
  std::vector<NodeId> sizes_;
};

/// Percentile-style size digest used by reporting (count, min/median/max,
/// the top sizes descending).
struct CommunitySizeSummary {
  NodeId count = 0;
  NodeId min_size = 0;
  NodeId median_size = 0;
  NodeId max_size = 0;
  std::vector<NodeId> top_sizes;
};

CommunitySizeSummary summarize(const Partition& p, NodeId top_k = 15);

}  // namespace commbench
