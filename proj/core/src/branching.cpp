#include "arborpack/branching.hpp"

#include <algorithm>
#include <stdexcept>

namespace arborpack {

RootsOrDefect is_branching(const Digraph& d, std::span<const int> arc_ids) {
  int n = d.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int id : arc_ids) {
    const Arc* a = d.find_arc(id);
    if (!a) throw std::invalid_argument("is_branching: unknown arc id " + std::to_string(id));
    if (parent[static_cast<std::size_t>(a->head)] != -1) {
      return {std::nullopt,
              "vertex " + std::to_string(a->head) + " has more than one entering arc"};
    }
    parent[static_cast<std::size_t>(a->head)] = a->tail;
  }
  // walk parent pointers; a revisit inside the active walk is a cycle
  for (int v = 0; v < n; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    int u = v;
    std::vector<int> path;
    while (u != -1 && !seen[static_cast<std::size_t>(u)]) {
      seen[static_cast<std::size_t>(u)] = 1;
      path.push_back(u);
      u = parent[static_cast<std::size_t>(u)];
      if (std::find(path.begin(), path.end(), u) != path.end()) {
        return {std::nullopt, "arcs contain a cycle through vertex " + std::to_string(u)};
      }
    }
  }
  VertexSet roots;
  for (int v = 0; v < n; ++v) {
    if (parent[static_cast<std::size_t>(v)] == -1) roots = roots.with(v);
  }
  return {roots, ""};
}

std::vector<BranchingComponent> branching_components(const Digraph& d,
                                                     std::span<const int> arc_ids) {
  RootsOrDefect check = is_branching(d, arc_ids);
  if (!check.roots) {
    throw std::invalid_argument("branching_components: " + check.defect);
  }
  int n = d.vertex_count();
  std::vector<int> component_root(static_cast<std::size_t>(n), -1);
  check.roots->for_each([&](int r) { component_root[static_cast<std::size_t>(r)] = r; });
  // propagate along arcs until fixed; n passes suffice for any branching
  for (int pass = 0; pass < n; ++pass) {
    bool changed = false;
    for (int id : arc_ids) {
      const Arc& a = d.arc(id);
      int tr = component_root[static_cast<std::size_t>(a.tail)];
      if (tr != -1 && component_root[static_cast<std::size_t>(a.head)] != tr) {
        component_root[static_cast<std::size_t>(a.head)] = tr;
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::vector<BranchingComponent> out;
  check.roots->for_each([&](int r) {
    BranchingComponent comp{r, VertexSet{}, {}};
    for (int v = 0; v < n; ++v) {
      if (component_root[static_cast<std::size_t>(v)] == r) comp.span = comp.span.with(v);
    }
    for (int id : arc_ids) {
      if (comp.span.contains(d.arc(id).head)) comp.arc_ids.push_back(id);
    }
    std::sort(comp.arc_ids.begin(), comp.arc_ids.end());
    out.push_back(std::move(comp));
  });
  return out;
}

}  // namespace arborpack
