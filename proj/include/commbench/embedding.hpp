#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "commbench/eigensolver.hpp"
#include "commbench/graph.hpp"

namespace commbench {

enum class EmbeddingKind { laplacian_rows, row_normalized };

/// Dense per-node coordinates from the spectral decomposition; row i holds
/// node i's position.
struct Embedding {
  std::vector<double> coords;  // row-major node_count x dim
  NodeId nodes = 0;
  int dim = 0;
  EmbeddingKind kind = EmbeddingKind::laplacian_rows;

  std::span<const double> row(NodeId i) const {
    return {coords.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(dim),
            static_cast<std::size_t>(dim)};
  }
  std::span<double> row(NodeId i) {
    return {coords.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(dim),
            static_cast<std::size_t>(dim)};
  }
};

/// Rows from the `dim` largest eigenvectors of D^{-1/2} A D^{-1/2}
/// (equivalently the smallest of the symmetric normalized Laplacian).
/// Zero-degree nodes get zero rows. Requires 1 <= dim < node_count.
Embedding spectral_embedding(const Graph& g, int dim, double tol = 1e-8, int max_iter = 10000,
                             std::uint64_t seed = 0);

/// Unit-norm rows; zero rows map to the first basis vector.
Embedding row_normalized(const Embedding& e);

double squared_distance(std::span<const double> a, std::span<const double> b);
double distance(std::span<const double> a, std::span<const double> b);

}  // namespace commbench
