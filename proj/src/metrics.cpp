#include "commbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "commbench/detect.hpp"
#include "commbench/rng.hpp"

namespace commbench {

double modularity(const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count()) throw ArgumentError("partition/graph size mismatch");
  const double m = g.total_weight();
  if (m <= 0.0) throw MetricUndefined("modularity undefined for a graph with m = 0");
  const std::size_t k = static_cast<std::size_t>(p.community_count());
  std::vector<double> w_in(k, 0.0), vol(k, 0.0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const std::size_t cu = static_cast<std::size_t>(p.community_of(u));
    vol[cu] += g.degree(u);
    w_in[cu] += g.self_loop(u);
    for (const Neighbor& nb : g.neighbors(u)) {
      if (nb.id > u && p.community_of(nb.id) == p.community_of(u)) w_in[cu] += nb.weight;
    }
  }
  double q = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    const double frac = vol[c] / (2.0 * m);
    q += w_in[c] / m - frac * frac;
  }
  return q;
}

double normalized_cut(const Graph& g, const Partition& p) {
  const auto cv = cut_and_volume(g, p);
  double sum = 0.0;
  for (const CutVolume& c : cv) {
    if (c.volume <= 0.0)
      throw MetricUndefined("normalized cut undefined: community with zero volume");
    sum += c.cut / c.volume;
  }
  return sum / static_cast<double>(cv.size());
}

double silhouette(const Embedding& e, const Partition& p, std::optional<NodeId> sample,
                  std::uint64_t seed) {
  if (p.node_count() != e.nodes) throw ArgumentError("partition/embedding size mismatch");
  const NodeId n = e.nodes;
  const std::size_t k = static_cast<std::size_t>(p.community_count());
  if (k < 2) throw MetricUndefined("silhouette requires at least two communities");

  std::vector<NodeId> eval(static_cast<std::size_t>(n));
  std::iota(eval.begin(), eval.end(), 0);
  if (sample && *sample < n) {
    Rng rng(seed ^ 0x51C0A1B2C3D4E5F6ull);
    for (std::size_t i = 0; i < static_cast<std::size_t>(*sample); ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(eval.size() - i));
      std::swap(eval[i], eval[j]);
    }
    eval.resize(static_cast<std::size_t>(*sample));
    std::sort(eval.begin(), eval.end());
  }

  const auto& sizes = p.sizes();
  std::vector<double> dist_sum(k);
  double total = 0.0;
  for (NodeId i : eval) {
    const std::size_t ci = static_cast<std::size_t>(p.community_of(i));
    if (sizes[ci] <= 1) continue;  // singleton convention: s_i = 0
    std::fill(dist_sum.begin(), dist_sum.end(), 0.0);
    for (NodeId j = 0; j < n; ++j) {
      if (j == i) continue;
      dist_sum[static_cast<std::size_t>(p.community_of(j))] += distance(e.row(i), e.row(j));
    }
    const double a = dist_sum[ci] / static_cast<double>(sizes[ci] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < k; ++c) {
      if (c == ci) continue;
      b = std::min(b, dist_sum[c] / static_cast<double>(sizes[c]));
    }
    const double denom = std::max(a, b);
    if (denom > 0.0) total += (b - a) / denom;
  }
  return total / static_cast<double>(eval.size());
}

namespace {

std::vector<double> centroids_of(const Embedding& e, const Partition& p) {
  const std::size_t k = static_cast<std::size_t>(p.community_count());
  const std::size_t d = static_cast<std::size_t>(e.dim);
  std::vector<double> mu(k * d, 0.0);
  for (NodeId i = 0; i < e.nodes; ++i) {
    const std::size_t c = static_cast<std::size_t>(p.community_of(i));
    const auto r = e.row(i);
    for (std::size_t j = 0; j < d; ++j) mu[c * d + j] += r[j];
  }
  for (std::size_t c = 0; c < k; ++c) {
    const double size = static_cast<double>(p.sizes()[c]);
    for (std::size_t j = 0; j < d; ++j) mu[c * d + j] /= size;
  }
  return mu;
}

}  // namespace

double compactness(const Embedding& e, const Partition& p) {
  if (p.node_count() != e.nodes) throw ArgumentError("partition/embedding size mismatch");
  const std::size_t d = static_cast<std::size_t>(e.dim);
  const std::vector<double> mu = centroids_of(e, p);
  std::vector<double> acc(static_cast<std::size_t>(p.community_count()), 0.0);
  for (NodeId i = 0; i < e.nodes; ++i) {
    const std::size_t c = static_cast<std::size_t>(p.community_of(i));
    acc[c] += squared_distance(e.row(i), {mu.data() + c * d, d});
  }
  double total = 0.0;
  for (std::size_t c = 0; c < acc.size(); ++c)
    total += acc[c] / static_cast<double>(p.sizes()[c]);
  return total;
}

double calinski_harabasz(const Embedding& e, const Partition& p) {
  if (p.node_count() != e.nodes) throw ArgumentError("partition/embedding size mismatch");
  const NodeId n = e.nodes;
  const NodeId k = p.community_count();
  if (k < 2 || k >= n)
    throw MetricUndefined("calinski-harabasz requires 2 <= k < N");
  const std::size_t d = static_cast<std::size_t>(e.dim);
  const std::vector<double> mu = centroids_of(e, p);
  std::vector<double> global(d, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    const auto r = e.row(i);
    for (std::size_t j = 0; j < d; ++j) global[j] += r[j];
  }
  for (std::size_t j = 0; j < d; ++j) global[j] /= static_cast<double>(n);

  double between = 0.0;
  for (std::size_t c = 0; c < static_cast<std::size_t>(k); ++c)
    between += static_cast<double>(p.sizes()[c]) *
               squared_distance({mu.data() + c * d, d}, {global.data(), d});
  double within = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    const std::size_t c = static_cast<std::size_t>(p.community_of(i));
    within += squared_distance(e.row(i), {mu.data() + c * d, d});
  }
  const double factor = static_cast<double>(n - k) / static_cast<double>(k - 1);
  if (within == 0.0) return std::numeric_limits<double>::infinity();
  return (between / within) * factor;
}

double separability(const Embedding& e, const Partition& p) {
  if (p.node_count() != e.nodes) throw ArgumentError("partition/embedding size mismatch");
  const std::size_t k = static_cast<std::size_t>(p.community_count());
  if (k < 2) throw MetricUndefined("separability requires at least two communities");
  const std::size_t d = static_cast<std::size_t>(e.dim);
  const std::vector<double> mu = centroids_of(e, p);
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      sum += distance({mu.data() + i * d, d}, {mu.data() + j * d, d});
    }
  return sum / (static_cast<double>(k) * static_cast<double>(k - 1));
}

MetricReport evaluate_all(const Graph& g, const Embedding& e, const DetectOutcome& outcome,
                          std::optional<NodeId> silhouette_sample) {
  MetricReport r;
  r.algorithm_name = outcome.algorithm_name;
  r.community_count = outcome.partition.community_count();
  r.wall_time_seconds = outcome.wall_time_seconds;
  r.seed = outcome.seed;
  const Partition& p = outcome.partition;

  auto record = [&](std::optional<double>& slot, const char* name, auto&& fn) {
    try {
      slot = fn();
    } catch (const MetricUndefined& err) {
      slot = std::nullopt;
      r.notes.push_back(std::string(name) + ": " + err.what());
    }
  };
  record(r.modularity, "modularity", [&] { return modularity(g, p); });
  record(r.normalized_cut, "normalized_cut", [&] { return normalized_cut(g, p); });
  std::optional<NodeId> sample = silhouette_sample;
  if (!sample && e.nodes > 5000) sample = 2000;
  record(r.silhouette, "silhouette", [&] { return silhouette(e, p, sample, outcome.seed); });
  record(r.compactness, "compactness", [&] { return compactness(e, p); });
  record(r.calinski_harabasz, "calinski_harabasz", [&] { return calinski_harabasz(e, p); });
  record(r.separability, "separability", [&] { return separability(e, p); });
  return r;
}

}  // namespace commbench
