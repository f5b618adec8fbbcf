#pragma once

#include <string>

#include "hypermatch/chain.hpp"
#include "hypermatch/counting.hpp"
#include "hypermatch/hypergraph.hpp"
#include "hypermatch/paths.hpp"

namespace hypermatch {

// Two accepted input formats, auto-detected: a JSON document {"n", "k",
// "edges"} (edges 1-based), or a line format "n k m" followed by m lines of k
// vertex ids. Malformed text raises ParseError; semantic violations raise the
// validate taxonomy.
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph read_hypergraph(const std::string& path);

std::string format_hypergraph_json(const Hypergraph& h);
std::string format_hypergraph_lines(const Hypergraph& h);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Exact dump: one row per state, entries as reduced "p/q", tab-separated,
// preceded by the state list.
std::string format_matrix(const TransitionMatrix& t);

// CSV columns: t, tv_distance, bound_eq2. The third column is the proven
// geometric envelope |Omega|^2 (1 - Phi^2/2)^t, blank when the exact
// conductance was not computed.
std::string format_analysis_csv(const ChainAnalysis& analysis, int state_count);

// CSV columns: transition, paths, omega_prime, certificate.
std::string format_congestion_csv(const CongestionReport& report);

} // namespace hypermatch
