// command-line front end: exact arborescence-packing computations on
// edge-list files, JSON on stdout, diagnostics on stderr.
// exit codes: 0 success/feasible/verified, 1 infeasible/none/failed, 2 usage.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arborpack/guard.hpp"
#include "arborpack/io.hpp"
#include "arborpack/ratios.hpp"
#include "arborpack/sharpness.hpp"
#include "arborpack/solver.hpp"
#include "arborpack/uncross.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace arborpack;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

Digraph require_directed(const ParsedGraph& parsed, const std::string& path) {
  if (!parsed.digraph) {
    throw ParseError("'" + path + "' is undirected; this command needs a directed graph");
  }
  return *parsed.digraph;
}

Graph require_undirected(const ParsedGraph& parsed, const std::string& path) {
  if (!parsed.graph) {
    throw ParseError("'" + path + "' is directed; this command needs an undirected graph");
  }
  return *parsed.graph;
}

VertexSet parse_vertex_list(const std::string& text, int n, const char* what) {
  VertexSet out;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    if (token.empty()) throw ParseError(std::string(what) + ": empty vertex entry");
    int v = 0;
    std::size_t used = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": '" + token + "' is not a vertex id");
    }
    if (used != token.size()) {
      throw ParseError(std::string(what) + ": '" + token + "' is not a vertex id");
    }
    check_vertex(v, n, what);
    out = out.with(v);
  }
  return out;
}

SubPartition parse_subpartition(const std::string& text, int n, const char* what) {
  std::vector<VertexSet> parts;
  std::string chunk;
  std::istringstream stream(text);
  while (std::getline(stream, chunk, '|')) {
    parts.push_back(parse_vertex_list(chunk, n, what));
  }
  return SubPartition(parts);
}

int run_nu_f(const std::string& file) {
  ParsedGraph parsed = load_edge_list(file);
  RatioWitness witness =
      parsed.digraph ? nu_f_digraph(*parsed.digraph) : nu_f_graph(*parsed.graph);
  std::cout << ratio_witness_to_json(witness) << "\n";
  return kExitOk;
}

int run_gamma_f(const std::string& file) {
  Graph g = require_undirected(load_edge_list(file), file);
  std::cout << gamma_witness_to_json(gamma_f(g)) << "\n";
  return kExitOk;
}

int run_feasibility(const std::string& file, int k, std::optional<int> c,
                    const std::string& roots_text) {
  Digraph d = require_directed(load_edge_list(file), file);
  std::optional<Violation> violation;
  if (c) {
    VertexSet roots = parse_vertex_list(roots_text, d.vertex_count(), "roots");
    violation = check_k_plus_extra(d, k, *c, roots);
  } else {
    violation = check_spanning_arborescences(d, k);
  }
  Json out;
  out["feasible"] = !violation.has_value();
  if (violation) out["violation"] = Json::parse(violation_to_json(*violation));
  std::cout << out.dump(2) << "\n";
  return violation ? kExitNegative : kExitOk;
}

int run_pack(const std::string& file, int k, int d_param, bool proof_trace) {
  Digraph d = require_directed(load_edge_list(file), file);
  RatioWitness nu = nu_f_digraph(d);
  Rational threshold = theorem_threshold(k, d_param);
  if (!(nu.value > threshold)) {
    Json out;
    out["packed"] = false;
    out["reason"] = "hypothesis fails: nu_f = " + rational_to_string(nu.value) +
                    (nu.value == threshold ? " = " : " < ") + "k+(d-1)/d = " +
                    rational_to_string(threshold);
    out["nu_f"] = Json::parse(ratio_witness_to_json(nu));
    std::cout << out.dump(2) << "\n";
    return kExitNegative;
  }

  SolveOutcome outcome =
      solve_theorem7(d, k, d_param, proof_trace ? SolveMode::proof_trace : SolveMode::oracle);
  VerifyReport report = verify_theorem7(d, k, d_param, outcome.certificate);
  if (!report.ok) {
    Json out;
    out["packed"] = false;
    out["reason"] = "internal error: produced certificate failed verification";
    out["failures"] = report.failures;
    std::cout << out.dump(2) << "\n";
    return kExitNegative;
  }

  Json out;
  out["packed"] = true;
  out["certificate"] = Json::parse(certificate_to_json(d, outcome.certificate));
  out["verified"] = true;
  if (proof_trace) {
    out["trace"] = Json::parse(trace_to_json(outcome.trace));
    out["used_fallback"] = outcome.used_fallback;
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int run_verify(const std::string& file, const std::string& cert_path, int k, int d_param) {
  Digraph d = require_directed(load_edge_list(file), file);
  std::ifstream cert_file(cert_path);
  if (!cert_file) throw ParseError("cannot open '" + cert_path + "'");
  std::ostringstream content;
  content << cert_file.rdbuf();
  PackingCertificate cert = certificate_from_json(d, content.str());
  VerifyReport report = verify_theorem7(d, k, d_param, cert);
  Json out;
  out["verified"] = report.ok;
  out["failures"] = report.failures;
  std::cout << out.dump(2) << "\n";
  return report.ok ? kExitOk : kExitNegative;
}

int run_sharpness(int k, int d_param, const std::string& out_dir) {
  SharpInstance instance = build_sharp_instance(k, d_param);
  SharpnessReport report = verify_sharp(instance.digraph, k, d_param);

  Json out;
  out["k"] = k;
  out["d"] = d_param;
  out["graph"] = serialize_edge_list(instance.graph);
  out["digraph"] = serialize_edge_list(instance.digraph);
  Json forests = Json::array();
  for (const auto& forest : instance.forests) forests.push_back(forest);
  out["forests"] = std::move(forests);
  Json roots = Json::array();
  for (const Branching& b : instance.branchings) {
    Json r = Json::array();
    b.roots.for_each([&](int v) { r.push_back(v); });
    roots.push_back(std::move(r));
  }
  out["roots"] = std::move(roots);
  out["report"] = Json::parse(sharpness_report_to_json(report));
  std::cout << out.dump(2) << "\n";

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream(out_dir + "/graph.txt") << serialize_edge_list(instance.graph);
    std::ofstream(out_dir + "/digraph.txt") << serialize_edge_list(instance.digraph);
    std::ofstream(out_dir + "/report.json") << sharpness_report_to_json(report) << "\n";
  }
  return report.ok ? kExitOk : kExitNegative;
}

int run_uncross_demo(const std::string& file, const std::string& p1_text,
                     const std::string& p2_text) {
  Digraph d = require_directed(load_edge_list(file), file);
  SubPartition p1 = parse_subpartition(p1_text, d.vertex_count(), "first subpartition");
  SubPartition p2 = parse_subpartition(p2_text, d.vertex_count(), "second subpartition");
  PieoTrace trace = pieo_run(p1, p2);

  Json out = Json::parse(pieo_trace_to_json(trace));
  out["indegree_sums"] = trace_indegree_sums(d, trace);
  out["all_sums_equal"] = submodular_chain_check(d, trace);
  out["laminar"] = is_laminar(trace.final_family);
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact packing of spanning arborescences and extremal instances"};
  app.require_subcommand(1);

  std::string file;
  std::string cert_path;
  std::string roots_text;
  std::string out_dir;
  std::string p1_text;
  std::string p2_text;
  int k = 0;
  int d_param = 1;
  std::optional<int> c;
  bool proof_trace = false;

  CLI::App* nu = app.add_subcommand("nu-f", "fractional packing ratio of a graph file");
  nu->add_option("file", file, "edge-list file")->required();

  CLI::App* gamma = app.add_subcommand("gamma-f", "fractional arboricity of an undirected file");
  gamma->add_option("file", file, "edge-list file")->required();

  CLI::App* feas = app.add_subcommand("feasibility", "branching-packing feasibility inequalities");
  feas->add_option("--k", k, "number of spanning arborescences")->required();
  CLI::Option* c_opt = feas->add_option("--c", c, "root budget of the extra branching");
  feas->add_option("--roots", roots_text, "forced roots, comma-separated")->needs(c_opt);
  feas->add_option("file", file, "edge-list file")->required();

  CLI::App* pack = app.add_subcommand("pack", "build a k trees + extra branching certificate");
  pack->add_option("--k", k, "number of spanning arborescences")->required();
  pack->add_option("--d", d_param, "density parameter")->required();
  pack->add_flag("--proof-trace", proof_trace, "constructive mode with a case trace");
  pack->add_option("file", file, "edge-list file")->required();

  CLI::App* verify = app.add_subcommand("verify", "check a certificate against a graph");
  verify->add_option("--k", k, "number of spanning arborescences")->required();
  verify->add_option("--d", d_param, "density parameter")->required();
  verify->add_option("file", file, "edge-list file")->required();
  verify->add_option("cert", cert_path, "certificate JSON file")->required();

  CLI::App* sharp = app.add_subcommand("sharpness", "generate and certify an extremal instance");
  sharp->add_option("--k", k, "number of spanning arborescences")->required();
  sharp->add_option("--d", d_param, "density parameter")->required();
  sharp->add_option("--out", out_dir, "directory for the generated files");

  CLI::App* demo = app.add_subcommand("uncross-demo", "uncross two subpartitions step by step");
  demo->add_option("file", file, "edge-list file (directed)")->required();
  demo->add_option("p1", p1_text, "first subpartition, e.g. 0,1|2")->required();
  demo->add_option("p2", p2_text, "second subpartition")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(nu)) return run_nu_f(file);
    if (app.got_subcommand(gamma)) return run_gamma_f(file);
    if (app.got_subcommand(feas)) return run_feasibility(file, k, c, roots_text);
    if (app.got_subcommand(pack)) return run_pack(file, k, d_param, proof_trace);
    if (app.got_subcommand(verify)) return run_verify(file, cert_path, k, d_param);
    if (app.got_subcommand(sharp)) return run_sharpness(k, d_param, out_dir);
    if (app.got_subcommand(demo)) return run_uncross_demo(file, p1_text, p2_text);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what();
    if (e.line > 0) std::cerr << " (line " << e.line << ")";
    std::cerr << "\n";
    return kExitUsage;
  } catch (const SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
