#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "arborpack/branching.hpp"
#include "arborpack/feasibility.hpp"
#include "arborpack/graph.hpp"

namespace arborpack {

// Exhaustive assignment of arcs to packing slots. Arcs are tried in ascending
// id order; for each arc the slots are tried in order, with "unused" last, so
// results are deterministic. Every slot keeps branching validity (in-degree
// at most one, no cycles) during the search.
struct SlotSpec {
  // required final arc count; -1 leaves the count free
  int exact_arcs = -1;
  // arcs may never enter these vertices in this slot
  VertexSet forced_roots;
  // smallest admissible final arc count, used for pruning free slots
  int min_arcs = 0;
  // when set, the slot's arcs within this set must form a spanning
  // arborescence of it and no slot arc may cross its boundary
  std::optional<VertexSet> isolated_component;
};

struct PackingProblem {
  std::vector<SlotSpec> slots;
  // extra acceptance check on a structurally valid complete assignment
  std::function<bool(const std::vector<std::vector<int>>&)> accept;
};

// First complete assignment (slot -> ascending arc ids) in search order, or
// nothing when the assignment space is exhausted.
std::optional<std::vector<std::vector<int>>> find_packing(const Digraph& d,
                                                          const PackingProblem& problem);

// Convenience wrappers used by the equivalence tests and the solver.

struct ArborescenceCert {
  int root;
  std::vector<int> arc_ids;  // ascending
};

// k arc-disjoint spanning arborescences, or nothing.
std::optional<std::vector<ArborescenceCert>> find_spanning_arborescences(const Digraph& d,
                                                                         int k);

// Arc-disjoint spanning branchings matching the specs, or nothing.
std::optional<std::vector<Branching>> find_branching_packing(
    const Digraph& d, std::span<const BranchingSpec> specs);

struct KPlusExtraPacking {
  std::vector<ArborescenceCert> trees;
  Branching extra;
};

// k spanning arborescences plus a spanning branching with root_count roots
// containing forced_roots, or nothing.
std::optional<KPlusExtraPacking> find_k_plus_extra_packing(const Digraph& d, int k,
                                                           int root_count,
                                                           VertexSet forced_roots);

}  // namespace arborpack
