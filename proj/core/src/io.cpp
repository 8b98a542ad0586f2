#include "arborpack/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace arborpack {

namespace {

using Json = nlohmann::ordered_json;

Json set_to_json(VertexSet x) {
  Json out = Json::array();
  x.for_each([&](int v) { out.push_back(v); });
  return out;
}

Json parts_to_json(const SubPartition& p) {
  Json out = Json::array();
  for (const VertexSet& x : p.parts()) out.push_back(set_to_json(x));
  return out;
}

Json family_to_json(const SetFamily& f) {
  Json out = Json::array();
  for (const VertexSet& x : f.members()) out.push_back(set_to_json(x));
  return out;
}

Json arcs_to_json(const Digraph& d, const std::vector<int>& ids) {
  Json out = Json::array();
  for (int id : ids) {
    const Arc& a = d.arc(id);
    out.push_back(Json::array({a.tail, a.head, a.id}));
  }
  return out;
}

int expect_int(const std::string& token, int line, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("expected an integer for ") + what + ", got '" + token + "'",
                     line);
  }
  if (used != token.size()) {
    throw ParseError(std::string("trailing characters after ") + what + " in '" + token + "'",
                     line);
  }
  return value;
}

}  // namespace

ParsedGraph parse_edge_list(const std::string& text) {
  std::istringstream stream(text);
  std::string line;
  int line_number = 0;

  int n = -1;
  int m = -1;
  GraphKind kind = GraphKind::directed;
  bool header_done = false;
  std::vector<std::pair<int, int>> endpoints;

  while (std::getline(stream, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string token;
    while (fields >> token) tokens.push_back(token);
    if (tokens.empty()) continue;  // blank line

    if (!header_done) {
      if (tokens.size() != 3) {
        throw ParseError("header must be 'n m directed|undirected'", line_number);
      }
      n = expect_int(tokens[0], line_number, "the vertex count");
      m = expect_int(tokens[1], line_number, "the edge count");
      if (n < 0) throw ParseError("negative vertex count", line_number);
      if (m < 0) throw ParseError("negative edge count", line_number);
      if (n > VertexSet::max_vertices) {
        throw ParseError("at most " + std::to_string(VertexSet::max_vertices) +
                             " vertices are supported",
                         line_number);
      }
      if (tokens[2] == "directed") {
        kind = GraphKind::directed;
      } else if (tokens[2] == "undirected") {
        kind = GraphKind::undirected;
      } else {
        throw ParseError("graph kind must be 'directed' or 'undirected', got '" + tokens[2] + "'",
                         line_number);
      }
      header_done = true;
      continue;
    }

    if (static_cast<int>(endpoints.size()) == m) {
      throw ParseError("more edge lines than the declared count " + std::to_string(m),
                       line_number);
    }
    if (tokens.size() != 2) {
      throw ParseError("edge line must be 'tail head'", line_number);
    }
    int tail = expect_int(tokens[0], line_number, "the tail");
    int head = expect_int(tokens[1], line_number, "the head");
    if (tail < 0 || tail >= n || head < 0 || head >= n) {
      throw ParseError("vertex out of range [0, " + std::to_string(n) + ")", line_number);
    }
    if (tail == head) {
      throw ParseError("loops are not allowed (vertex " + std::to_string(tail) + ")",
                       line_number);
    }
    endpoints.emplace_back(tail, head);
  }

  if (!header_done) throw ParseError("empty input, expected a header line", 1);
  if (static_cast<int>(endpoints.size()) != m) {
    throw ParseError("declared " + std::to_string(m) + " edges but found " +
                         std::to_string(endpoints.size()),
                     line_number);
  }

  ParsedGraph out{kind, std::nullopt, std::nullopt};
  if (kind == GraphKind::directed) {
    out.digraph.emplace(n, endpoints);
  } else {
    out.graph.emplace(n, endpoints);
  }
  return out;
}

ParsedGraph load_edge_list(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  std::ostringstream content;
  content << file.rdbuf();
  return parse_edge_list(content.str());
}

std::string serialize_edge_list(const Digraph& d) {
  std::ostringstream out;
  out << d.vertex_count() << ' ' << d.arc_count() << " directed\n";
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << " undirected\n";
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string certificate_to_json(const Digraph& d, const PackingCertificate& cert) {
  Json out;
  out["k"] = cert.k;
  out["d"] = cert.d;
  out["mode"] = cert.mode;
  Json trees = Json::array();
  for (const ArborescenceCert& tree : cert.trees) {
    Json t;
    t["root"] = tree.root;
    t["arcs"] = arcs_to_json(d, tree.arc_ids);
    trees.push_back(std::move(t));
  }
  out["trees"] = std::move(trees);
  Json extra;
  extra["roots"] = set_to_json(cert.extra.roots);
  extra["arcs"] = arcs_to_json(d, cert.extra.arc_ids);
  out["extra"] = std::move(extra);
  return out.dump(2);
}

PackingCertificate certificate_from_json(const Digraph& d, const std::string& text) {
  Json parsed;
  try {
    parsed = Json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }

  auto read_arcs = [&d](const Json& array, const char* what) {
    if (!array.is_array()) throw ParseError(std::string(what) + ": expected an arc array");
    std::vector<int> ids;
    for (const Json& item : array) {
      if (!item.is_array() || item.size() != 3) {
        throw ParseError(std::string(what) + ": each arc must be [tail, head, id]");
      }
      int tail = item[0].get<int>();
      int head = item[1].get<int>();
      int id = item[2].get<int>();
      if (!d.has_arc(id)) {
        throw ParseError(std::string(what) + ": unknown arc id " + std::to_string(id));
      }
      const Arc& a = d.arc(id);
      if (a.tail != tail || a.head != head) {
        throw ParseError(std::string(what) + ": arc " + std::to_string(id) +
                         " endpoints do not match the graph");
      }
      ids.push_back(id);
    }
    return ids;
  };

  try {
    PackingCertificate cert;
    cert.k = parsed.at("k").get<int>();
    cert.d = parsed.at("d").get<int>();
    cert.mode = parsed.value("mode", std::string("oracle"));
    for (const Json& tree : parsed.at("trees")) {
      ArborescenceCert t;
      t.root = tree.at("root").get<int>();
      t.arc_ids = read_arcs(tree.at("arcs"), "tree");
      cert.trees.push_back(std::move(t));
    }
    const Json& extra = parsed.at("extra");
    VertexSet roots;
    for (const Json& r : extra.at("roots")) {
      int v = r.get<int>();
      check_vertex(v, d.vertex_count(), "certificate root");
      roots = roots.with(v);
    }
    cert.extra = Branching{read_arcs(extra.at("arcs"), "extra"), roots};
    return cert;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

std::string violation_to_json(const Violation& v) {
  Json out;
  out["inequality"] = v.inequality;
  out["branchings"] = v.branching_indices;
  out["parts"] = parts_to_json(v.parts);
  out["lhs"] = v.lhs;
  out["rhs"] = v.rhs;
  return out.dump(2);
}

std::string ratio_witness_to_json(const RatioWitness& w) {
  Json out;
  out["value"] = rational_to_string(w.value);
  out["witness"] = parts_to_json(w.witness);
  return out.dump(2);
}

std::string gamma_witness_to_json(const GammaWitness& w) {
  Json out;
  out["value"] = rational_to_string(w.value);
  out["witness"] = set_to_json(w.witness);
  return out.dump(2);
}

std::string trace_to_json(std::span<const TraceEntry> trace) {
  Json out = Json::array();
  for (const TraceEntry& entry : trace) {
    Json e;
    e["case"] = entry.case_tag;
    e["depth"] = entry.depth;
    e["n"] = entry.vertex_count;
    e["c"] = entry.c;
    e["detail"] = entry.detail;
    out.push_back(std::move(e));
  }
  return out.dump(2);
}

std::string pieo_trace_to_json(const PieoTrace& trace) {
  Json out;
  out["initial"] = family_to_json(trace.initial);
  Json steps = Json::array();
  for (const PieoStep& step : trace.steps) {
    Json s;
    s["removed"] = Json::array({set_to_json(step.removed_a), set_to_json(step.removed_b)});
    s["added"] =
        Json::array({set_to_json(step.added_union), set_to_json(step.added_intersection)});
    steps.push_back(std::move(s));
  }
  out["steps"] = std::move(steps);
  out["final"] = family_to_json(trace.final_family);
  out["maximal"] = family_to_json(trace.maximal);
  out["remainder"] = family_to_json(trace.remainder);
  return out.dump(2);
}

std::string sharpness_report_to_json(const SharpnessReport& report) {
  Json out;
  out["ok"] = report.ok;
  out["nu"] = rational_to_string(report.nu_value);
  out["nu_matches"] = report.nu_matches;
  out["singleton_witness"] = report.singleton_witness;
  out["no_packing"] = report.no_packing;
  out["arc_bound"] = report.arc_bound;
  out["indegree_bound"] = report.indegree_bound;
  out["failures"] = report.failures;
  return out.dump(2);
}

}  // namespace arborpack
