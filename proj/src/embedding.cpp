#include "commbench/embedding.hpp"

#include <cmath>

namespace commbench {

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

Embedding spectral_embedding(const Graph& g, int dim, double tol, int max_iter,
                             std::uint64_t seed) {
  const NodeId n = g.node_count();
  if (dim < 1 || dim >= n)
    throw ArgumentError("embedding dim must satisfy 1 <= dim < node_count");
  const std::size_t sn = static_cast<std::size_t>(n);

  std::vector<double> inv_sqrt_deg(sn, 0.0);
  for (NodeId u = 0; u < n; ++u) {
    const double d = g.degree(u);
    if (d > 0.0) inv_sqrt_deg[static_cast<std::size_t>(u)] = 1.0 / std::sqrt(d);
  }

  LinearOperator normalized_adjacency = [&](std::span<const double> x, std::span<double> y) {
    for (NodeId u = 0; u < n; ++u) {
      const std::size_t su = static_cast<std::size_t>(u);
      double acc = 0.0;
      for (const Neighbor& nb : g.neighbors(u))
        acc += nb.weight * inv_sqrt_deg[static_cast<std::size_t>(nb.id)] *
               x[static_cast<std::size_t>(nb.id)];
      acc += 2.0 * g.self_loop(u) * inv_sqrt_deg[su] * x[su];
      y[su] = inv_sqrt_deg[su] * acc;
    }
  };

  EigenOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  opts.seed = seed;
  opts.spectral_bound = 1.0;  // eigenvalues of the normalized adjacency lie in [-1, 1]
  EigenResult eig = top_eigenpairs(normalized_adjacency, n, dim, opts);

  Embedding e;
  e.nodes = n;
  e.dim = dim;
  e.kind = EmbeddingKind::laplacian_rows;
  e.coords.assign(sn * static_cast<std::size_t>(dim), 0.0);
  for (int j = 0; j < dim; ++j) {
    const auto& vec = eig.vectors[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < sn; ++i) {
      if (inv_sqrt_deg[i] == 0.0) continue;  // isolated nodes stay at the origin
      e.coords[i * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)] = vec[i];
    }
  }
  return e;
}

Embedding row_normalized(const Embedding& in) {
  Embedding e = in;
  e.kind = EmbeddingKind::row_normalized;
  for (NodeId i = 0; i < e.nodes; ++i) {
    auto r = e.row(i);
    double nrm = 0.0;
    for (double x : r) nrm += x * x;
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) {
      r[0] = 1.0;
    } else {
      for (double& x : r) x /= nrm;
    }
  }
  return e;
}

}  // namespace commbench
