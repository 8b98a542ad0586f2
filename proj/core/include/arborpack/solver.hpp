#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arborpack/branching.hpp"
#include "arborpack/packing_search.hpp"
#include "arborpack/rational.hpp"
#include "arborpack/subpartition.hpp"

namespace arborpack {

// k arc-disjoint spanning arborescences plus one extra branching. A valid
// certificate for (d, k, d_param) satisfies, beyond disjointness and the
// structural clauses, |extra arcs| * d_param > (d_param - 1) * (n - 1), and the
// extra branching is either a spanning arborescence or has a component with at
// least d_param arcs.
struct PackingCertificate {
  int k = 0;
  int d = 1;
  std::vector<ArborescenceCert> trees;
  Branching extra;
  std::string mode;  // "oracle" or "proof-trace"
};

struct VerifyReport {
  bool ok = false;
  std::vector<std::string> failures;  // one entry per failed clause
};

// Checks every clause and reports all failures; never throws on bad input.
VerifyReport verify_theorem7(const Digraph& d, int k, int d_param,
                             const PackingCertificate& cert);

// Ground-truth search: first packing (in canonical assignment order) whose
// certificate passes verify_theorem7, or nothing. Guarded to small instances.
std::optional<PackingCertificate> solve_exhaustive(const Digraph& d, int k, int d_param);

enum class SolveMode { oracle, proof_trace };

struct TraceEntry {
  std::string case_tag;
  int depth = 0;          // contraction depth; vertex labels below refer to it
  int vertex_count = 0;
  int c = 0;              // branching root budget at this level
  std::vector<int> detail;  // contracted set / located set / designated component
};

struct SolveOutcome {
  PackingCertificate certificate;
  std::vector<TraceEntry> trace;
  bool used_fallback = false;
};

// Requires the packing hypothesis (nu_f strictly above the threshold); throws
// std::invalid_argument carrying the minimizing subpartition otherwise.
// Oracle mode defers to solve_exhaustive; proof-trace mode builds the packing
// by the constructive case analysis (initial packing with ceil((n-1)/d) roots,
// root-budget tightening, component minimization, contraction and recursion,
// arc augmentation, minimal blocked set) and records one trace entry per case.
// If the construction ever disagrees with the expected structure it falls
// back to the oracle and flags the outcome.
SolveOutcome solve_theorem7(const Digraph& d, int k, int d_param,
                            SolveMode mode = SolveMode::proof_trace);

// Inclusion-minimal vertex set that is (a) a member of some subpartition whose
// in-degree sum in d minus removed_arc_ids meets the k-tree lower bound with
// equality and (b) entered by one of the candidate arcs. Nothing when no
// candidate arc enters any such member.
struct MinimalEqualitySet {
  VertexSet x0;
  int entering_arc;
  SubPartition witness;
};
std::optional<MinimalEqualitySet> minimal_violating_set(const Digraph& d, int k,
                                                        std::span<const int> removed_arc_ids,
                                                        std::span<const int> candidate_arc_ids);

// Combines a packing of the contraction d/w with k+1 spanning arborescences of
// d[w] into a packing of d. Every inner arc entering the merged vertex must be
// matched by a w-arborescence rooted at the original head of that arc; hosts
// in which the merged vertex is a root take the leftover arborescences.
// w_arbs are given in d's own vertex and arc ids.
struct SubArborescence {
  int root;
  std::vector<int> arc_ids;
};
PackingCertificate lift_contraction(const Digraph& d, VertexSet w,
                                    const Digraph::Contraction& ctr,
                                    const PackingCertificate& inner,
                                    std::span<const SubArborescence> w_arbs);

}  // namespace arborpack
