#include "commbench/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "commbench/rng.hpp"

namespace commbench {

namespace {

struct LloydRun {
  std::vector<NodeId> assignment;
  std::vector<double> centroids;
  double inertia = std::numeric_limits<double>::infinity();
  int iterations = 0;
  std::vector<double> trace;
};

LloydRun run_once(const std::vector<double>& pts, std::size_t n, std::size_t d, std::size_t k,
                  Rng rng, int max_iter) {
  auto point = [&](std::size_t i) { return std::span<const double>(pts.data() + i * d, d); };

  // k-means++ seeding
  std::vector<double> centroids(k * d, 0.0);
  std::vector<double> dist2(n, std::numeric_limits<double>::infinity());
  std::vector<char> chosen(n, 0);
  auto centroid = [&](std::size_t c) { return std::span<double>(centroids.data() + c * d, d); };

  std::size_t first = static_cast<std::size_t>(rng.below(n));
  std::copy_n(point(first).data(), d, centroid(0).data());
  chosen[first] = 1;
  for (std::size_t c = 1; c < k; ++c) {
    for (std::size_t i = 0; i < n; ++i)
      dist2[i] = std::min(dist2[i], squared_distance(point(i), centroid(c - 1)));
    double total = 0.0;
    for (double x : dist2) total += x;
    std::size_t pick = n;
    if (total > 0.0) {
      const double r = rng.next_double() * total;
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += dist2[i];
        if (acc > r) {
          pick = i;
          break;
        }
      }
      if (pick == n) {  // numerical edge: fall back to the last positive mass
        for (std::size_t i = n; i-- > 0;)
          if (dist2[i] > 0.0) {
            pick = i;
            break;
          }
      }
    }
    if (pick == n) {  // all remaining points coincide with chosen centroids
      for (std::size_t i = 0; i < n; ++i)
        if (!chosen[i]) {
          pick = i;
          break;
        }
    }
    std::copy_n(point(pick).data(), d, centroid(c).data());
    chosen[pick] = 1;
  }

  LloydRun run;
  run.assignment.assign(n, -1);
  std::vector<std::size_t> counts(k, 0);

  for (int iter = 1; iter <= max_iter; ++iter) {
    run.iterations = iter;
    // assign
    std::size_t changes = 0;
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t best = 0;
      double best_d = squared_distance(point(i), centroid(0));
      for (std::size_t c = 1; c < k; ++c) {
        const double dc = squared_distance(point(i), centroid(c));
        if (dc < best_d) {
          best_d = dc;
          best = c;
        }
      }
      dist2[i] = best_d;
      if (run.assignment[i] != static_cast<NodeId>(best)) {
        run.assignment[i] = static_cast<NodeId>(best);
        ++changes;
      }
      ++counts[best];
    }
    // repair: an empty cluster steals the point farthest from its centroid
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] > 0) continue;
      std::size_t far = n;
      double far_d = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (counts[static_cast<std::size_t>(run.assignment[i])] < 2) continue;
        if (dist2[i] > far_d) {
          far_d = dist2[i];
          far = i;
        }
      }
      if (far == n) break;  // k > distinct points; leave as-is
      --counts[static_cast<std::size_t>(run.assignment[far])];
      run.assignment[far] = static_cast<NodeId>(c);
      ++counts[c];
      std::copy_n(point(far).data(), d, centroid(c).data());
      dist2[far] = 0.0;
      ++changes;
    }

    double inertia = 0.0;
    for (double x : dist2) inertia += x;
    if (changes == 0) break;
    run.trace.push_back(inertia);

    // update: centroid = mean of members, accumulated in canonical order
    std::fill(centroids.begin(), centroids.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      auto c = centroid(static_cast<std::size_t>(run.assignment[i]));
      auto p = point(i);
      for (std::size_t j = 0; j < d; ++j) c[j] += p[j];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) centroid(c)[j] /= static_cast<double>(counts[c]);
    }
  }

  run.inertia = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    run.inertia += squared_distance(point(i), centroid(static_cast<std::size_t>(run.assignment[i])));
  run.centroids = std::move(centroids);
  return run;
}

}  // namespace

KMeansResult kmeans(const Embedding& points, int k, const KMeansOptions& opts) {
  const std::size_t n = static_cast<std::size_t>(points.nodes);
  const std::size_t d = static_cast<std::size_t>(points.dim);
  if (k < 1) throw ArgumentError("k must be >= 1");
  if (static_cast<std::size_t>(k) > n) throw ArgumentError("k exceeds the number of points");

  // canonical point order: lexicographic by coordinates, ties by index
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ra = points.row(static_cast<NodeId>(a));
    const auto rb = points.row(static_cast<NodeId>(b));
    for (std::size_t j = 0; j < d; ++j) {
      if (ra[j] != rb[j]) return ra[j] < rb[j];
    }
    return a < b;
  });
  std::vector<double> pts(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = points.row(static_cast<NodeId>(order[i]));
    std::copy(r.begin(), r.end(), pts.begin() + static_cast<std::ptrdiff_t>(i * d));
  }

  Rng base(opts.seed);
  LloydRun best;
  const int restarts = std::max(1, opts.restarts);
  for (int r = 0; r < restarts; ++r) {
    LloydRun run = run_once(pts, n, d, static_cast<std::size_t>(k), base.fork(r), opts.max_iter);
    if (run.inertia < best.inertia) best = std::move(run);
  }

  KMeansResult out;
  out.assignment.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    out.assignment[order[i]] = best.assignment[i];
  out.centroids = std::move(best.centroids);
  out.inertia = best.inertia;
  out.iterations = best.iterations;
  out.inertia_trace = std::move(best.trace);
  return out;
}

}  // namespace commbench
