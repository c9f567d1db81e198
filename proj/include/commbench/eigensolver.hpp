#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "commbench/errors.hpp"
#include "commbench/partition.hpp"

namespace commbench {

/// y = M x for a symmetric operator M. x and y never alias.
using LinearOperator = std::function<void(std::span<const double>, std::span<double>)>;

struct EigenOptions {
  double tol = 1e-8;       // per-pair residual tolerance, relative to a ||M|| proxy
  int max_iter = 10000;
  std::uint64_t seed = 0;
  /// Known bound on the spectral radius; skips the estimation phase
  /// (e.g. 1.0 for the normalized adjacency operator).
  std::optional<double> spectral_bound;
  int oversample = 8;      // extra block vectors beyond `count`
};

struct EigenResult {
  std::vector<double> values;                // descending, algebraically largest first
  std::vector<std::vector<double>> vectors;  // orthonormal, vectors[j] pairs with values[j]
  int iterations = 0;
  double residual = 0.0;                     // max ||Mv - lambda v|| over returned pairs
};

/// The `count` algebraically largest eigenpairs of a symmetric operator.
///
/// Block power iteration: the iterated block is orthonormalized every step
/// and eigenpairs are extracted by a Rayleigh-Ritz projection; a positive
/// spectral shift makes the algebraically largest eigenvalues dominant.
/// Throws NumericalError (carrying the residual) if the first `count` pairs
/// have not reached tol * ||M||-proxy after max_iter steps.
EigenResult top_eigenpairs(const LinearOperator& op, NodeId n, int count,
                           const EigenOptions& opts = {});

/// Dense symmetric eigendecomposition by cyclic Jacobi rotations; `a` is
/// row-major n*n and is destroyed. Values descend; vectors[j*n..] is the
/// eigenvector for values[j].
void dense_symmetric_eigen(std::vector<double>& a, int n, std::vector<double>& values,
                           std::vector<double>& vectors);

}  // namespace commbench
