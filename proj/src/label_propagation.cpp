#include <algorithm>
#include <chrono>
#include <numeric>

#include "commbench/detect.hpp"
#include "commbench/rng.hpp"

namespace commbench {

DetectOutcome label_propagation(const Graph& g, const DetectParams& params) {
  const auto start = std::chrono::steady_clock::now();
  if (g.total_weight() <= 0.0) throw ArgumentError("label propagation requires m > 0");
  const NodeId n = g.node_count();
  Rng rng(params.seed);

  std::vector<NodeId> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<NodeId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);

  DetectOutcome out;
  out.algorithm_name = "label_propagation";
  out.seed = params.seed;

  std::vector<std::pair<NodeId, double>> tally;
  std::vector<NodeId> maxima;
  for (int sweep = 0; sweep < params.max_iter; ++sweep) {
    rng.shuffle(order);
    std::size_t changes = 0;
    for (NodeId u : order) {
      const auto nbrs = g.neighbors(u);
      if (nbrs.empty()) continue;
      tally.clear();
      for (const Neighbor& nb : nbrs)
        tally.emplace_back(labels[static_cast<std::size_t>(nb.id)], nb.weight);
      std::sort(tally.begin(), tally.end());
      double best = 0.0;
      maxima.clear();
      for (std::size_t i = 0; i < tally.size();) {
        std::size_t j = i;
        double w = 0.0;
        while (j < tally.size() && tally[j].first == tally[i].first) w += tally[j++].second;
        if (w > best) {
          best = w;
          maxima.assign(1, tally[i].first);
        } else if (w == best) {
          maxima.push_back(tally[i].first);
        }
        i = j;
      }
      NodeId& current = labels[static_cast<std::size_t>(u)];
      if (std::find(maxima.begin(), maxima.end(), current) != maxima.end()) continue;
      const NodeId pick = maxima[rng.below(maxima.size())];
      current = pick;
      ++changes;
    }
    out.objective_trace.push_back(static_cast<double>(changes));
    if (changes == 0) break;
  }

  out.partition = Partition::from_raw(std::span<const NodeId>(labels));
  out.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace commbench
