#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "commbench/graph.hpp"

namespace commbench {

/// Exact unweighted-degree distribution of a graph.
struct DegreeSummary {
  std::vector<std::pair<std::int64_t, NodeId>> histogram;  // (degree, count) ascending
  std::vector<std::pair<std::int64_t, double>> cdf;        // (degree, cumulative fraction)
  std::int64_t max_degree = 0;

  /// Fraction of nodes with degree <= threshold.
  double fraction_leq(std::int64_t threshold) const;
};

DegreeSummary degree_summary(const Graph& g);

/// degree(u) / (n - 1), unweighted. Requires n >= 2.
std::vector<double> degree_centrality(const Graph& g);

/// The `count` highest-centrality nodes as (original label, centrality),
/// descending, ties broken by ascending label.
std::vector<std::pair<Label, double>> top_hubs(const Graph& g, NodeId count);

}  // namespace commbench
