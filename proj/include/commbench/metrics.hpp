#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commbench/embedding.hpp"
#include "commbench/graph.hpp"

namespace commbench {

struct DetectOutcome;  // detect.hpp

/// Per-algorithm record of the six quality metrics. Metrics that are
/// undefined for the partition are nullopt and explained in `notes`.
struct MetricReport {
  std::string algorithm_name;
  std::optional<double> modularity;
  std::optional<double> normalized_cut;
  std::optional<double> silhouette;
  std::optional<double> compactness;
  std::optional<double> calinski_harabasz;
  std::optional<double> separability;
  NodeId community_count = 0;
  double wall_time_seconds = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;
};

/// Q = (1/2m) sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j), computed through
/// the per-community form sum_c [W_in(c)/m - (vol(c)/2m)^2].
/// Throws MetricUndefined when m = 0.
double modularity(const Graph& g, const Partition& p);

/// (1/k) sum_i cut(C_i)/vol(C_i). Throws MetricUndefined on a zero-volume
/// community.
double normalized_cut(const Graph& g, const Partition& p);

/// Mean silhouette in the embedding's Euclidean space. Nodes in singleton
/// communities score 0, as does max(a, b) = 0. With `sample`, the mean runs
/// over a seeded uniform node sample (distances still against all nodes).
/// Throws MetricUndefined with fewer than two communities.
double silhouette(const Embedding& e, const Partition& p,
                  std::optional<NodeId> sample = std::nullopt, std::uint64_t seed = 0);

/// sum_i (1/|C_i|) sum_{x in C_i} ||x - mu_i||^2.
double compactness(const Embedding& e, const Partition& p);

/// (B/W) * ((N-k)/(k-1)). Throws MetricUndefined unless 2 <= k < N;
/// W = 0 reports +infinity.
double calinski_harabasz(const Embedding& e, const Partition& p);

/// Mean pairwise centroid distance, (1/(k(k-1))) sum over ordered pairs.
/// Throws MetricUndefined when k < 2.
double separability(const Embedding& e, const Partition& p);

/// Run all six metrics; undefined ones are recorded as NA with a note.
/// Silhouette sampling default: full for n <= 5000, else a seeded
/// 2000-node sample.
MetricReport evaluate_all(const Graph& g, const Embedding& e, const DetectOutcome& outcome,
                          std::optional<NodeId> silhouette_sample = std::nullopt);

}  // namespace commbench
