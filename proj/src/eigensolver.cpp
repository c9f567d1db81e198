#include "commbench/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "commbench/rng.hpp"

namespace commbench {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

void fill_random_unit(std::span<double> v, Rng& rng) {
  double nv = 0.0;
  do {
    for (double& x : v) x = 2.0 * rng.next_double() - 1.0;
    nv = norm(v);
  } while (nv == 0.0);
  for (double& x : v) x /= nv;
}

/// Modified Gram-Schmidt over the block columns. Rank-deficient columns are
/// replaced with fresh random directions so the block keeps full rank.
void orthonormalize(std::vector<std::vector<double>>& v, Rng& rng) {
  const std::size_t b = v.size();
  for (std::size_t j = 0; j < b; ++j) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      for (std::size_t i = 0; i < j; ++i) {
        const double c = dot(v[j], v[i]);
        for (std::size_t r = 0; r < v[j].size(); ++r) v[j][r] -= c * v[i][r];
      }
      const double nj = norm(v[j]);
      if (nj > 1e-12) {
        for (double& x : v[j]) x /= nj;
        break;
      }
      fill_random_unit(v[j], rng);
    }
  }
}

/// Crude spectral-radius estimate: max growth factor over a short power run.
double estimate_spectral_bound(const LinearOperator& op, std::size_t n, Rng& rng) {
  std::vector<double> v(n), w(n);
  fill_random_unit(v, rng);
  double bound = 0.0;
  for (int t = 0; t < 60; ++t) {
    op(v, w);
    const double nw = norm(w);
    bound = std::max(bound, nw);
    if (nw < 1e-300) break;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / nw;
  }
  return bound;
}

void flip_to_canonical_sign(std::vector<double>& v) {
  std::size_t arg = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > best) {
      best = a;
      arg = i;
    }
  }
  if (v[arg] < 0.0)
    for (double& x : v) x = -x;
}

}  // namespace

void dense_symmetric_eigen(std::vector<double>& a, int n, std::vector<double>& values,
                           std::vector<double>& vectors) {
  const std::size_t sn = static_cast<std::size_t>(n);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * sn + j]; };
  // accumulated rotations; row r ends up as the eigenvector of values[r]
  vectors.assign(sn * sn, 0.0);
  for (std::size_t i = 0; i < sn; ++i) vectors[i * sn + i] = 1.0;

  double scale = 0.0;
  for (double x : a) scale = std::max(scale, std::abs(x));
  const double stop = (scale == 0.0) ? 1.0 : 1e-15 * scale;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < sn; ++p)
      for (std::size_t q = p + 1; q < sn; ++q) off = std::max(off, std::abs(at(p, q)));
    if (off <= stop) break;
    for (std::size_t p = 0; p + 1 < sn; ++p) {
      for (std::size_t q = p + 1; q < sn; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) <= stop * 1e-2) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t i = 0; i < sn; ++i) {  // A <- A J
          const double aip = at(i, p), aiq = at(i, q);
          at(i, p) = c * aip - s * aiq;
          at(i, q) = s * aip + c * aiq;
        }
        for (std::size_t j = 0; j < sn; ++j) {  // A <- J^T A
          const double apj = at(p, j), aqj = at(q, j);
          at(p, j) = c * apj - s * aqj;
          at(q, j) = s * apj + c * aqj;
        }
        for (std::size_t j = 0; j < sn; ++j) {
          const double vpj = vectors[p * sn + j], vqj = vectors[q * sn + j];
          vectors[p * sn + j] = c * vpj - s * vqj;
          vectors[q * sn + j] = s * vpj + c * vqj;
        }
      }
    }
  }

  values.resize(sn);
  for (std::size_t i = 0; i < sn; ++i) values[i] = at(i, i);
  std::vector<std::size_t> order(sn);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });
  std::vector<double> sorted_values(sn);
  std::vector<double> sorted_vectors(sn * sn);
  for (std::size_t r = 0; r < sn; ++r) {
    sorted_values[r] = values[order[r]];
    for (std::size_t j = 0; j < sn; ++j) sorted_vectors[r * sn + j] = vectors[order[r] * sn + j];
  }
  values = std::move(sorted_values);
  vectors = std::move(sorted_vectors);
}

EigenResult top_eigenpairs(const LinearOperator& op, NodeId n, int count,
                           const EigenOptions& opts) {
  if (n <= 0) throw ArgumentError("operator dimension must be positive");
  if (count < 1) throw ArgumentError("eigenpair count must be >= 1");
  if (count > n) throw ArgumentError("eigenpair count exceeds operator dimension");
  const std::size_t sn = static_cast<std::size_t>(n);
  const std::size_t sb =
      static_cast<std::size_t>(std::min<int>(n, count + std::max(0, opts.oversample)));
  const std::size_t sc = static_cast<std::size_t>(count);

  Rng rng(opts.seed ^ 0xE1605C5150F153A1ull);
  const double bound =
      opts.spectral_bound ? *opts.spectral_bound : estimate_spectral_bound(op, sn, rng);
  // shift makes lambda + s >= 0 across the spectrum, so the dominant block of
  // the shifted operator is the algebraically largest block of M
  const double shift = 1.25 * bound + 1e-12;

  std::vector<std::vector<double>> v(sb, std::vector<double>(sn));
  for (auto& col : v) fill_random_unit(col, rng);
  orthonormalize(v, rng);

  std::vector<std::vector<double>> w(sb, std::vector<double>(sn));
  std::vector<double> h(sb * sb);
  std::vector<double> theta, q;
  std::vector<std::vector<double>> ritz(sc, std::vector<double>(sn));
  std::vector<double> my(sn);

  EigenResult result;
  double max_resid = std::numeric_limits<double>::infinity();

  for (int iter = 1; iter <= opts.max_iter; ++iter) {
    result.iterations = iter;
    for (std::size_t j = 0; j < sb; ++j) op(v[j], w[j]);

    // Rayleigh-Ritz on span(v)
    for (std::size_t i = 0; i < sb; ++i)
      for (std::size_t j = i; j < sb; ++j)
        h[i * sb + j] = h[j * sb + i] = 0.5 * (dot(v[i], w[j]) + dot(v[j], w[i]));
    std::vector<double> hcopy = h;
    dense_symmetric_eigen(hcopy, static_cast<int>(sb), theta, q);

    double scale = 0.0;
    for (double t : theta) scale = std::max(scale, std::abs(t));

    // explicit residuals ||M x - theta x|| for the leading `count` Ritz pairs
    bool converged = true;
    max_resid = 0.0;
    for (std::size_t j = 0; j < sc; ++j) {
      const double* qj = q.data() + j * sb;
      auto& x = ritz[j];
      std::fill(x.begin(), x.end(), 0.0);
      std::fill(my.begin(), my.end(), 0.0);
      for (std::size_t a = 0; a < sb; ++a) {
        const double c = qj[a];
        if (c == 0.0) continue;
        for (std::size_t r = 0; r < sn; ++r) {
          x[r] += c * v[a][r];
          my[r] += c * w[a][r];
        }
      }
      double r2 = 0.0;
      for (std::size_t r = 0; r < sn; ++r) {
        const double d = my[r] - theta[j] * x[r];
        r2 += d * d;
      }
      const double resid = std::sqrt(r2);
      max_resid = std::max(max_resid, resid);
      if (resid > opts.tol * std::max(scale, 1e-300)) converged = false;
    }

    if (converged) {
      result.values.assign(theta.begin(), theta.begin() + count);
      result.vectors = std::move(ritz);
      for (auto& col : result.vectors) flip_to_canonical_sign(col);
      result.residual = max_resid;
      return result;
    }

    // next block: (M + shift I) V, re-orthonormalized
    for (std::size_t j = 0; j < sb; ++j)
      for (std::size_t r = 0; r < sn; ++r) v[j][r] = w[j][r] + shift * v[j][r];
    orthonormalize(v, rng);
  }

  throw NumericalError("eigensolver did not converge after " +
                           std::to_string(opts.max_iter) + " iterations",
                       max_resid);
}

}  // namespace commbench
