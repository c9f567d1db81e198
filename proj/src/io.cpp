#include "commbench/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

namespace commbench {

std::string format_sig6(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

namespace {

std::string na_or(const std::optional<double>& v) { return v ? format_sig6(*v) : "NA"; }

}  // namespace

void write_membership_csv(std::ostream& out, const Graph& g, const Partition& p) {
  std::vector<NodeId> order(static_cast<std::size_t>(g.node_count()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](NodeId a, NodeId b) { return g.label_of(a) < g.label_of(b); });
  out << "node,community\n";
  for (NodeId u : order) out << g.label_of(u) << ',' << p.community_of(u) << '\n';
}

void write_objective_trace_csv(std::ostream& out, std::span<const double> trace) {
  out << "pass,objective\n";
  for (std::size_t i = 0; i < trace.size(); ++i)
    out << i << ',' << format_sig6(trace[i]) << '\n';
}

void write_metric_table_csv(std::ostream& out, std::span<const MetricReport> reports) {
  out << "algorithm,communities,modularity,normalized_cut,silhouette,compactness,"
         "calinski_harabasz,separability,seconds\n";
  for (const MetricReport& r : reports) {
    out << r.algorithm_name << ',' << r.community_count << ',' << na_or(r.modularity) << ','
        << na_or(r.normalized_cut) << ',' << na_or(r.silhouette) << ',' << na_or(r.compactness)
        << ',' << na_or(r.calinski_harabasz) << ',' << na_or(r.separability) << ','
        << format_sig6(r.wall_time_seconds) << '\n';
  }
}

void write_embedding_csv(std::ostream& out, const Graph& g, const Embedding& e) {
  out << "node";
  for (int j = 0; j < e.dim; ++j) out << ",c" << j;
  out << '\n';
  for (NodeId i = 0; i < e.nodes; ++i) {
    out << g.label_of(i);
    for (double x : e.row(i)) out << ',' << format_sig6(x);
    out << '\n';
  }
}

void write_degree_histogram_csv(std::ostream& out, const DegreeSummary& s) {
  out << "degree,count\n";
  for (const auto& [deg, count] : s.histogram) out << deg << ',' << count << '\n';
}

void write_degree_cdf_csv(std::ostream& out, const DegreeSummary& s) {
  out << "degree,cumulative_fraction\n";
  for (const auto& [deg, frac] : s.cdf) out << deg << ',' << format_sig6(frac) << '\n';
}

void write_centrality_csv(std::ostream& out, const Graph& g,
                          std::span<const double> centrality) {
  std::vector<NodeId> order(static_cast<std::size_t>(g.node_count()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](NodeId a, NodeId b) { return g.label_of(a) < g.label_of(b); });
  out << "node,centrality\n";
  for (NodeId u : order)
    out << g.label_of(u) << ',' << format_sig6(centrality[static_cast<std::size_t>(u)]) << '\n';
}

}  // namespace commbench
