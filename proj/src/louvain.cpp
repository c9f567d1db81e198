#include <algorithm>
#include <chrono>
#include <numeric>

#include "commbench/detect.hpp"
#include "commbench/metrics.hpp"
#include "commbench/rng.hpp"

namespace commbench {

namespace {

/// One local-move phase: greedy node moves to the neighboring community with
/// the largest positive modularity gain. Returns the raw assignment and
/// whether any move happened.
std::pair<std::vector<NodeId>, bool> local_move_phase(const Graph& g, double m, Rng& rng,
                                                      double tolerance) {
  const NodeId n = g.node_count();
  std::vector<NodeId> comm(static_cast<std::size_t>(n));
  std::iota(comm.begin(), comm.end(), 0);
  std::vector<double> vol(static_cast<std::size_t>(n));
  for (NodeId u = 0; u < n; ++u) vol[static_cast<std::size_t>(u)] = g.degree(u);

  std::vector<NodeId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);

  std::vector<std::pair<NodeId, double>> links;  // candidate community -> edge weight from u
  bool any_move = false;
  bool moved_in_sweep = true;
  while (moved_in_sweep) {
    moved_in_sweep = false;
    for (NodeId u : order) {
      const std::size_t su = static_cast<std::size_t>(u);
      const NodeId a = comm[su];
      const double ku = g.degree(u);

      links.clear();
      for (const Neighbor& nb : g.neighbors(u))
        links.emplace_back(comm[static_cast<std::size_t>(nb.id)], nb.weight);
      std::sort(links.begin(), links.end());
      double k_u_a = 0.0;  // weight into the current community, u excluded
      std::size_t write = 0;
      for (std::size_t i = 0; i < links.size();) {
        std::size_t j = i;
        double w = 0.0;
        while (j < links.size() && links[j].first == links[i].first) w += links[j++].second;
        if (links[i].first == a)
          k_u_a = w;
        else
          links[write++] = {links[i].first, w};
        i = j;
      }
      links.resize(write);

      // gain of moving u from a to b; equal gains keep the current community
      const double vol_a_rest = vol[static_cast<std::size_t>(a)] - ku;
      NodeId best = a;
      double best_gain = 0.0;
      for (const auto& [b, k_u_b] : links) {
        const double gain = (k_u_b - k_u_a) / m -
                            ku * (vol[static_cast<std::size_t>(b)] - vol_a_rest) / (2.0 * m * m);
        if (gain > best_gain) {
          best_gain = gain;
          best = b;
        }
      }
      if (best != a && best_gain > tolerance) {
        vol[static_cast<std::size_t>(a)] -= ku;
        vol[static_cast<std::size_t>(best)] += ku;
        comm[su] = best;
        moved_in_sweep = true;
        any_move = true;
      }
    }
  }
  return {std::move(comm), any_move};
}

}  // namespace

DetectOutcome louvain(const Graph& g, const DetectParams& params) {
  const auto start = std::chrono::steady_clock::now();
  if (g.total_weight() <= 0.0) throw ArgumentError("louvain requires m > 0");
  const double m = g.total_weight();
  Rng rng(params.seed);

  const NodeId n = g.node_count();
  std::vector<NodeId> node_to_level(static_cast<std::size_t>(n));
  std::iota(node_to_level.begin(), node_to_level.end(), 0);

  DetectOutcome out;
  out.algorithm_name = "louvain";
  out.seed = params.seed;
  out.partition = Partition::from_raw(std::span<const NodeId>(node_to_level));
  out.objective_trace.push_back(modularity(g, out.partition));

  Graph level = g;
  for (int pass = 0; pass < params.max_passes; ++pass) {
    auto [assignment, moved] = local_move_phase(level, m, rng, params.tolerance);
    if (!moved) {
      out.objective_trace.push_back(out.objective_trace.back());
      break;
    }
    const Partition level_part = Partition::from_raw(std::span<const NodeId>(assignment));
    for (NodeId u = 0; u < n; ++u) {
      auto& c = node_to_level[static_cast<std::size_t>(u)];
      c = level_part.community_of(c);
    }
    out.partition = Partition::from_raw(std::span<const NodeId>(node_to_level));
    out.objective_trace.push_back(modularity(g, out.partition));
    level = aggregate(level, level_part);
  }

  out.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace commbench
