#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "arborpack/graph.hpp"
#include "arborpack/subpartition.hpp"
#include "arborpack/vertex_set.hpp"

namespace arborpack {

// Multiset of nonempty vertex sets, kept sorted by the canonical set order
// (ascending bit pattern); duplicates are adjacent.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(std::vector<VertexSet> members);

  std::span<const VertexSet> members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  int count(VertexSet x) const;
  VertexSet support() const;

  bool operator==(const SetFamily&) const = default;

 private:
  std::vector<VertexSet> members_;
};

// X and Y properly intersect when X&Y, X-Y and Y-X are all nonempty.
bool properly_intersecting(VertexSet x, VertexSet y);

// Replaces one copy each of x and y by their union and intersection.
// Throws when the pair is absent or does not properly intersect.
SetFamily pieo_step(const SetFamily& family, VertexSet x, VertexSet y);

struct PieoStep {
  VertexSet removed_a;
  VertexSet removed_b;
  VertexSet added_union;
  VertexSet added_intersection;
};

struct PieoTrace {
  SetFamily initial;
  std::vector<PieoStep> steps;
  SetFamily final_family;
  SetFamily maximal;    // distinct inclusion-maximal members of final_family
  SetFamily remainder;  // final_family minus one copy of each maximal member
};

// Repeatedly uncrosses the multiset union of two subpartitions until no pair
// properly intersects, replacing at each step the first properly intersecting
// pair (i, j), i < j, in the family's canonical member order.
PieoTrace pieo_run(const SubPartition& f1, const SubPartition& f2);

// Same, but the caller chooses which candidate pair to uncross at every step;
// the invariants of the result do not depend on the choice. `candidates`
// holds index pairs (i < j) into the current family.
using PairChooser = std::function<std::size_t(const SetFamily& family,
                                              std::span<const std::pair<int, int>> candidates)>;
PieoTrace pieo_run_with_chooser(const SubPartition& f1, const SubPartition& f2,
                                const PairChooser& choose);

// No two members properly intersect.
bool is_laminar(const SetFamily& family);

// Verifies that the total in-degree of the family is non-increasing along the
// trace (throws std::logic_error otherwise) and returns whether every step
// kept it equal.
bool submodular_chain_check(const Digraph& d, const PieoTrace& trace);

// In-degree sums along the trace: initial family first, then after each step.
std::vector<long long> trace_indegree_sums(const Digraph& d, const PieoTrace& trace);

}  // namespace arborpack
