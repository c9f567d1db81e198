#pragma once

#include <cstdint>
#include <vector>

#include "commbench/embedding.hpp"

namespace commbench {

struct KMeansOptions {
  std::uint64_t seed = 0;
  int max_iter = 300;
  int restarts = 8;
};

struct KMeansResult {
  std::vector<NodeId> assignment;     // per point, cluster index in [0, k)
  std::vector<double> centroids;      // row-major k x dim
  double inertia = 0.0;               // sum of squared distances to assigned centroids
  int iterations = 0;                 // Lloyd iterations of the winning restart
  std::vector<double> inertia_trace;  // per iteration, non-increasing
};

/// Lloyd iterations from k-means++ seeding; the best of `restarts` runs by
/// inertia wins. Empty clusters are repaired by stealing the point farthest
/// from its assigned centroid. All clusters in the result are non-empty.
/// Initialization walks points in a canonical (coordinate-sorted) order, so
/// the result does not depend on input point order.
KMeansResult kmeans(const Embedding& points, int k, const KMeansOptions& opts = {});

}  // namespace commbench
