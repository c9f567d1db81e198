#include <chrono>

#include "commbench/detect.hpp"

namespace commbench {

DetectOutcome spectral_communities(const Graph& g, const DetectParams& params) {
  const auto start = std::chrono::steady_clock::now();
  const int k = params.k.value_or(15);
  if (k < 2) throw ArgumentError("spectral clustering requires k >= 2");
  if (k > g.node_count()) throw ArgumentError("k exceeds the number of nodes");

  const int dim = std::min<int>(k, g.node_count() - 1);
  Embedding e = row_normalized(
      spectral_embedding(g, dim, params.tolerance, params.max_iter, params.seed));

  KMeansOptions kopts;
  kopts.seed = params.seed;
  KMeansResult km = kmeans(e, k, kopts);

  DetectOutcome out;
  out.algorithm_name = "spectral";
  out.seed = params.seed;
  out.partition = Partition::from_raw(std::span<const NodeId>(km.assignment));
  out.objective_trace = std::move(km.inertia_trace);
  out.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

DetectOutcome kmeans_communities(const Graph& g, const DetectParams& params,
                                 const Embedding& shared) {
  const auto start = std::chrono::steady_clock::now();
  const int k = params.k.value_or(15);
  if (k < 1) throw ArgumentError("kmeans requires k >= 1");
  if (k > g.node_count()) throw ArgumentError("k exceeds the number of nodes");

  KMeansOptions kopts;
  kopts.seed = params.seed;
  KMeansResult km = kmeans(shared, k, kopts);

  DetectOutcome out;
  out.algorithm_name = "kmeans";
  out.seed = params.seed;
  out.partition = Partition::from_raw(std::span<const NodeId>(km.assignment));
  out.objective_trace = std::move(km.inertia_trace);
  out.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

DetectOutcome kmeans_communities(const Graph& g, const DetectParams& params) {
  const auto start = std::chrono::steady_clock::now();
  const int dim = std::min<int>(params.embed_dim, g.node_count() - 1);
  if (dim < 1) throw ArgumentError("graph too small for a spectral embedding");
  const Embedding shared =
      spectral_embedding(g, dim, params.tolerance, params.max_iter, params.seed);
  DetectOutcome out = kmeans_communities(g, params, shared);
  out.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace commbench
