#pragma once

#include <optional>
#include <span>
#include <vector>

#include "arborpack/graph.hpp"
#include "arborpack/subpartition.hpp"

namespace arborpack {

// Requested spanning branching: exactly root_count roots, forced_roots must
// all be roots. forced_roots may be any subset of size <= root_count.
struct BranchingSpec {
  int root_count = 1;
  VertexSet forced_roots;
};

// First failing inequality in canonical enumeration order: subpartitions in
// canonical order, index subsets in ascending bitmask order within each.
struct Violation {
  int inequality;                       // 1, 2 or 3
  std::vector<int> branching_indices;   // 1-based indices of the involved branchings
  SubPartition parts;
  long long lhs;
  long long rhs;
};

// Feasibility of packing |specs| arc-disjoint spanning branchings: for every
// index subset I and every subpartition P,
//   sum over X in P of indeg(X)
//     >= sum over X in P of #{i in I : X misses forced_roots_i}
//        - sum over i in I of (root_count_i - |forced_roots_i|).
std::optional<Violation> check_pack_branching(const Digraph& d,
                                              std::span<const BranchingSpec> specs);

// Feasibility of k spanning arborescences plus one spanning branching with
// root_count roots containing forced_roots; k = 0 is accepted. Two families
// are checked, tagged 2 and 3 in the reported violation:
//   tag 2 (tree bound):        sum indeg(X) >= k(|P| - 1)
//   tag 3 (root-budget bound): sum indeg(X) >= k(|P| - 1)
//                                + #{X in P : X misses forced_roots}
//                                - (root_count - |forced_roots|)
std::optional<Violation> check_k_plus_extra(const Digraph& d, int k, int root_count,
                                            VertexSet forced_roots);

// Feasibility of k arc-disjoint spanning arborescences: the tree bound alone.
std::optional<Violation> check_spanning_arborescences(const Digraph& d, int k);

}  // namespace arborpack
