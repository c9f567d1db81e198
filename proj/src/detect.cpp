#include "commbench/detect.hpp"

namespace commbench {

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::louvain: return "louvain";
    case Algorithm::label_propagation: return "label_propagation";
    case Algorithm::infomap: return "infomap";
    case Algorithm::leading_eigenvector: return "leading_eigenvector";
    case Algorithm::spectral: return "spectral";
    case Algorithm::kmeans: return "kmeans";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
  for (Algorithm a : kAllAlgorithms)
    if (algorithm_name(a) == name) return a;
  return std::nullopt;
}

DetectOutcome run_algorithm(const Graph& g, Algorithm a, const DetectParams& params,
                            const Embedding* shared) {
  switch (a) {
    case Algorithm::louvain: return louvain(g, params);
    case Algorithm::label_propagation: return label_propagation(g, params);
    case Algorithm::infomap: return infomap(g, params);
    case Algorithm::leading_eigenvector: return leading_eigenvector(g, params);
    case Algorithm::spectral: return spectral_communities(g, params);
    case Algorithm::kmeans:
      return shared ? kmeans_communities(g, params, *shared) : kmeans_communities(g, params);
  }
  throw ArgumentError("unknown algorithm");
}

}  // namespace commbench
