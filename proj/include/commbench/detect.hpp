#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commbench/embedding.hpp"
#include "commbench/graph.hpp"
#include "commbench/kmeans.hpp"

namespace commbench {

struct DetectParams {
  std::uint64_t seed = 42;
  std::optional<int> k;     // cluster count, required by kmeans/spectral
  int embed_dim = 32;       // shared embedding dimension (capped at n-1)
  double tolerance = 1e-8;  // objective-gain threshold / eigensolver residual tol
  int max_iter = 10000;     // eigensolver iterations / label-propagation sweeps
  int max_passes = 64;      // outer move-aggregate passes
};

struct DetectOutcome {
  Partition partition;
  std::vector<double> objective_trace;  // per pass (see each algorithm)
  double wall_time_seconds = 0.0;
  std::string algorithm_name;
  std::uint64_t seed = 0;
};

/// Greedy modularity optimization: seed-shuffled local moves until no move
/// gains more than `tolerance`, then aggregation; repeats until a pass stops
/// improving. Trace is Q per pass (initial partition first).
DetectOutcome louvain(const Graph& g, const DetectParams& params);

/// Asynchronous label propagation, seed-shuffled sweeps; ties keep the
/// current label when possible, otherwise a seeded uniform pick among the
/// maxima. Trace is the number of label changes per sweep.
DetectOutcome label_propagation(const Graph& g, const DetectParams& params);

/// Two-level map equation (bits) minimized by seed-shuffled greedy moves and
/// aggregation; communities never span connected components. Trace is L per
/// pass (initial partition first).
DetectOutcome infomap(const Graph& g, const DetectParams& params);

/// Newman recursive bisection on the group modularity operator; groups split
/// by leading-eigenvector sign while the leading eigenvalue exceeds
/// `tolerance` and the split improves Q. Trace is Q after each accepted split.
DetectOutcome leading_eigenvector(const Graph& g, const DetectParams& params);

/// Spectral clustering: k-dimensional embedding, row-normalized, k-means.
DetectOutcome spectral_communities(const Graph& g, const DetectParams& params);

/// k-means on the shared (non-normalized) spectral embedding.
DetectOutcome kmeans_communities(const Graph& g, const DetectParams& params);
DetectOutcome kmeans_communities(const Graph& g, const DetectParams& params,
                                 const Embedding& shared);

/// Two-level map equation L(M) in bits for an undirected random walk;
/// the quantity infomap minimizes.
double map_equation_bits(const Graph& g, const Partition& p);

enum class Algorithm {
  louvain,
  label_propagation,
  infomap,
  leading_eigenvector,
  spectral,
  kmeans,
};

constexpr std::array<Algorithm, 6> kAllAlgorithms = {
    Algorithm::louvain,       Algorithm::label_propagation,   Algorithm::infomap,
    Algorithm::leading_eigenvector, Algorithm::spectral,      Algorithm::kmeans,
};

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

/// Dispatch by id; `shared` (when given) supplies the embedding reused by
/// kmeans so the harness computes it once.
DetectOutcome run_algorithm(const Graph& g, Algorithm a, const DetectParams& params,
                            const Embedding* shared = nullptr);

}  // namespace commbench
