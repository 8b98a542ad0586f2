#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arborpack/branching.hpp"
#include "arborpack/graph.hpp"
#include "arborpack/rational.hpp"

namespace arborpack {

// Multigraph on d+1 vertices with exactly k*d + d - 1 edges, spread as evenly
// as possible over the vertex pairs in lexicographic order; certified to have
// gamma_f < k + 1. Requires k >= d + 1 >= 2. Throws std::runtime_error if the
// even spread misses the gamma_f bound (never returns an uncertified graph).
Graph build_sharp_graph(int k, int d);

// Partition of the edge set into exactly t forests (edge-id lists, empty
// forests allowed), found by backtracking with cycle pruning, or nothing.
// Succeeds precisely when gamma_f(g) <= t. Guarded to small instances.
std::optional<std::vector<std::vector<int>>> nash_williams_decompose(const Graph& g, int t);

// Each forest oriented away from per-component roots; roots are chosen
// greedily (forests in order, components by least vertex, root = least vertex
// not yet used as a root anywhere, else the component's least vertex) so that
// every vertex ends up in some root set. Arc ids equal edge ids. Throws
// std::runtime_error when the greedy pass fails to cover every vertex.
struct OrientationResult {
  Digraph digraph;
  std::vector<Branching> branchings;  // one per forest, in forest order
};
OrientationResult orient_to_branchings(const Graph& g,
                                       const std::vector<std::vector<int>>& forests);

struct SharpInstance {
  int k;
  int d;
  Graph graph;
  std::vector<std::vector<int>> forests;
  Digraph digraph;
  std::vector<Branching> branchings;
};

// Full pipeline: build the graph, decompose into k+1 forests, orient.
SharpInstance build_sharp_instance(int k, int d);

// Certification report for a claimed extremal digraph:
//  - nu_matches: nu_f equals k + (d-1)/d exactly
//  - singleton_witness: the all-singleton partition attains that value
//  - no_packing: the exhaustive search finds no valid certificate
//  - arc_bound: |A(X)| <= (k+1)(|X|-1) for every nonempty X, equality only
//    when |X| = 1
//  - indegree_bound: sum of in-degrees over S >= (k+1)|S| - (k+2) for every
//    nonempty S, equality only when S is the whole vertex set
struct SharpnessReport {
  bool ok = false;
  bool nu_matches = false;
  bool singleton_witness = false;
  bool no_packing = false;
  bool arc_bound = false;
  bool indegree_bound = false;
  Rational nu_value;
  std::vector<std::string> failures;
};
SharpnessReport verify_sharp(const Digraph& d, int k, int d_param);

}  // namespace arborpack
