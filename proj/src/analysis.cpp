#include "commbench/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace commbench {

double DegreeSummary::fraction_leq(std::int64_t threshold) const {
  double frac = 0.0;
  for (const auto& [deg, cum] : cdf) {
    if (deg > threshold) break;
    frac = cum;
  }
  return frac;
}

DegreeSummary degree_summary(const Graph& g) {
  std::map<std::int64_t, NodeId> hist;
  for (NodeId u = 0; u < g.node_count(); ++u) ++hist[g.unweighted_degree(u)];

  DegreeSummary s;
  s.histogram.assign(hist.begin(), hist.end());
  if (!s.histogram.empty()) s.max_degree = s.histogram.back().first;
  const double n = static_cast<double>(g.node_count());
  std::int64_t cum = 0;
  for (const auto& [deg, count] : s.histogram) {
    cum += count;
    s.cdf.emplace_back(deg, static_cast<double>(cum) / n);
  }
  return s;
}

std::vector<double> degree_centrality(const Graph& g) {
  const NodeId n = g.node_count();
  if (n < 2) throw ArgumentError("degree centrality requires at least 2 nodes");
  std::vector<double> c(static_cast<std::size_t>(n));
  for (NodeId u = 0; u < n; ++u)
    c[static_cast<std::size_t>(u)] =
        static_cast<double>(g.unweighted_degree(u)) / static_cast<double>(n - 1);
  return c;
}

std::vector<std::pair<Label, double>> top_hubs(const Graph& g, NodeId count) {
  if (count < 1) throw ArgumentError("top_hubs requires count >= 1");
  const std::vector<double> c = degree_centrality(g);
  std::vector<NodeId> order(c.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    const double ca = c[static_cast<std::size_t>(a)];
    const double cb = c[static_cast<std::size_t>(b)];
    if (ca != cb) return ca > cb;
    return g.label_of(a) < g.label_of(b);
  });
  std::vector<std::pair<Label, double>> out;
  const std::size_t take = std::min<std::size_t>(order.size(), static_cast<std::size_t>(count));
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i)
    out.emplace_back(g.label_of(order[i]), c[static_cast<std::size_t>(order[i])]);
  return out;
}

}  // namespace commbench
