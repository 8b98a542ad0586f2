#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arborpack/graph.hpp"
#include "arborpack/vertex_set.hpp"

namespace arborpack {

// Arc set whose components are arborescences, together with its root set
// (every vertex of the host graph with no entering arc, so isolated vertices
// count as roots and the branching is spanning by convention).
struct Branching {
  std::vector<int> arc_ids;  // ascending
  VertexSet roots;
};

struct RootsOrDefect {
  std::optional<VertexSet> roots;
  std::string defect;  // set when roots is empty
};

// Checks that the arc ids form a branching of d; on success reports the root
// set, otherwise a description of the first defect found. An id that does not
// name an arc of d is a precondition violation and throws.
RootsOrDefect is_branching(const Digraph& d, std::span<const int> arc_ids);

// Vertex sets of the components of a branching, keyed by their roots.
struct BranchingComponent {
  int root;
  VertexSet span;
  std::vector<int> arc_ids;
};
std::vector<BranchingComponent> branching_components(const Digraph& d,
                                                     std::span<const int> arc_ids);

}  // namespace arborpack
