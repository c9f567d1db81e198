#include "commbench/partition.hpp"

#include <algorithm>
#include <unordered_map>

namespace commbench {

namespace {

template <class T>
std::pair<std::vector<NodeId>, NodeId> relabel_first_occurrence(std::span<const T> raw) {
  std::vector<NodeId> community_of(raw.size());
  std::unordered_map<std::int64_t, NodeId> remap;
  remap.reserve(raw.size());
  NodeId next = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, inserted] = remap.try_emplace(static_cast<std::int64_t>(raw[i]), next);
    if (inserted) ++next;
    community_of[i] = it->second;
  }
  return {std::move(community_of), next};
}

}  // namespace

Partition Partition::from_raw(std::span<const std::int64_t> raw) {
  auto [community_of, count] = relabel_first_occurrence(raw);
  Partition p;
  p.community_of_ = std::move(community_of);
  p.community_count_ = count;
  p.sizes_.assign(static_cast<std::size_t>(count), 0);
  for (NodeId c : p.community_of_) ++p.sizes_[static_cast<std::size_t>(c)];
  return p;
}

Partition Partition::from_raw(std::span<const NodeId> raw) {
  auto [community_of, count] = relabel_first_occurrence(raw);
  Partition p;
  p.community_of_ = std::move(community_of);
  p.community_count_ = count;
  p.sizes_.assign(static_cast<std::size_t>(count), 0);
  for (NodeId c : p.community_of_) ++p.sizes_[static_cast<std::size_t>(c)];
  return p;
}

Partition Partition::all_in_one(NodeId n) {
  std::vector<NodeId> raw(static_cast<std::size_t>(n), 0);
  return from_raw(std::span<const NodeId>(raw));
}

Partition Partition::singletons(NodeId n) {
  std::vector<NodeId> raw(static_cast<std::size_t>(n));
  for (NodeId i = 0; i < n; ++i) raw[static_cast<std::size_t>(i)] = i;
  return from_raw(std::span<const NodeId>(raw));
}

std::vector<NodeId> Partition::top_k_communities(NodeId k) const {
  if (k < 1) throw ArgumentError("top_k_communities requires k >= 1");
  std::vector<NodeId> order(static_cast<std::size_t>(community_count_));
  for (NodeId i = 0; i < community_count_; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    const NodeId sa = sizes_[static_cast<std::size_t>(a)];
    const NodeId sb = sizes_[static_cast<std::size_t>(b)];
    return sa != sb ? sa > sb : a < b;
  });
  if (static_cast<std::size_t>(k) < order.size()) order.resize(static_cast<std::size_t>(k));
  return order;
}

CommunitySizeSummary summarize(const Partition& p, NodeId top_k) {
  CommunitySizeSummary s;
  s.count = p.community_count();
  if (s.count == 0) return s;
  std::vector<NodeId> sorted = p.sizes();
  std::sort(sorted.begin(), sorted.end());
  s.min_size = sorted.front();
  s.max_size = sorted.back();
  s.median_size = sorted[sorted.size() / 2];
  for (NodeId c : p.top_k_communities(top_k))
    s.top_sizes.push_back(p.sizes()[static_cast<std::size_t>(c)]);
  return s;
}

}  // namespace commbench
