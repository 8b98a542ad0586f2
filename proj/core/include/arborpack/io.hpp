#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "arborpack/feasibility.hpp"
#include "arborpack/graph.hpp"
#include "arborpack/ratios.hpp"
#include "arborpack/sharpness.hpp"
#include "arborpack/solver.hpp"
#include "arborpack/uncross.hpp"

namespace arborpack {

// parse failure with a 1-based line number (0 when no line applies)
struct ParseError : std::runtime_error {
  ParseError(std::string msg, int line_number = 0)
      : std::runtime_error(std::move(msg)), line(line_number) {}
  int line;
};

enum class GraphKind { directed, undirected };

// Edge-list text: first line "n m directed|undirected", then m lines
// "tail head" with 0-based vertex ids; parallel lines are parallel
// arcs/edges; blank lines are ignored.
struct ParsedGraph {
  GraphKind kind;
  std::optional<Digraph> digraph;  // set when directed
  std::optional<Graph> graph;      // set when undirected
};
ParsedGraph parse_edge_list(const std::string& text);
ParsedGraph load_edge_list(const std::string& path);

std::string serialize_edge_list(const Digraph& d);
std::string serialize_edge_list(const Graph& g);

// JSON with deterministic field order; arcs appear as [tail, head, id]
std::string certificate_to_json(const Digraph& d, const PackingCertificate& cert);
// validates ids and endpoints against d; throws ParseError on any mismatch
PackingCertificate certificate_from_json(const Digraph& d, const std::string& text);

std::string violation_to_json(const Violation& v);
std::string ratio_witness_to_json(const RatioWitness& w);
std::string gamma_witness_to_json(const GammaWitness& w);
std::string trace_to_json(std::span<const TraceEntry> trace);
std::string pieo_trace_to_json(const PieoTrace& trace);
std::string sharpness_report_to_json(const SharpnessReport& report);

}  // namespace arborpack
