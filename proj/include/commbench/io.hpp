#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "commbench/analysis.hpp"
#include "commbench/embedding.hpp"
#include "commbench/graph.hpp"
#include "commbench/metrics.hpp"

namespace commbench {

/// Fixed 6-significant-digit decimal formatting; keeps CSV output
/// byte-stable across runs.
std::string format_sig6(double v);

/// `node,community` with original labels, rows ascending by label.
void write_membership_csv(std::ostream& out, const Graph& g, const Partition& p);

/// `pass,objective`.
void write_objective_trace_csv(std::ostream& out, std::span<const double> trace);

/// One row per algorithm; undefined metrics render as NA.
void write_metric_table_csv(std::ostream& out, std::span<const MetricReport> reports);

/// `node,c0,...,c{dim-1}`.
void write_embedding_csv(std::ostream& out, const Graph& g, const Embedding& e);

void write_degree_histogram_csv(std::ostream& out, const DegreeSummary& s);
void write_degree_cdf_csv(std::ostream& out, const DegreeSummary& s);
void write_centrality_csv(std::ostream& out, const Graph& g, std::span<const double> centrality);

}  // namespace commbench
