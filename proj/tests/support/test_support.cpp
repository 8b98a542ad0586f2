#include "test_support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace testsupport {

int compare(const Frac& a, const Frac& b) {
  if (a.den <= 0 || b.den <= 0) throw std::invalid_argument("compare: nonpositive denominator");
  __int128 lhs = static_cast<__int128>(a.num) * b.den;
  __int128 rhs = static_cast<__int128>(b.num) * a.den;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

namespace {

using PairList = std::vector<std::pair<int, int>>;

// Smallest relabeled image of the arc multiset over all vertex permutations.
PairList canonical_form(int n, const PairList& arcs, bool directed) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  PairList best;
  bool first = true;
  do {
    PairList mapped;
    mapped.reserve(arcs.size());
    for (const auto& [u, v] : arcs) {
      int a = perm[u], b = perm[v];
      if (!directed && a > b) std::swap(a, b);
      mapped.emplace_back(a, b);
    }
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = std::move(mapped);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// All multisets of at most max_count elements drawn from `universe`,
// canonicalized and deduplicated, handed to `emit`.
void for_each_multiset_class(int n, const PairList& universe, int max_count, bool directed,
                             const std::function<void(const PairList&)>& emit) {
  std::set<PairList> seen;
  PairList current;
  std::function<void(std::size_t, int)> counts = [&](std::size_t idx, int remaining) {
    if (idx == universe.size()) {
      PairList canon = canonical_form(n, current, directed);
      if (seen.insert(canon).second) emit(canon);
      return;
    }
    int pushed = 0;
    for (int copies = 0; copies <= remaining; ++copies) {
      counts(idx + 1, remaining - copies);
      if (copies < remaining) {
        current.push_back(universe[idx]);
        ++pushed;
      }
    }
    for (; pushed > 0; --pushed) current.pop_back();
  };
  counts(0, max_count);
}

}  // namespace

std::vector<Digraph> all_digraphs_up_to_iso(int n, int max_arcs) {
  if (n < 1) throw std::invalid_argument("all_digraphs_up_to_iso: n must be positive");
  PairList universe;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) universe.emplace_back(u, v);
  std::vector<Digraph> out;
  for_each_multiset_class(n, universe, max_arcs, /*directed=*/true,
                          [&](const PairList& arcs) { out.emplace_back(n, arcs); });
  return out;
}

std::vector<Graph> all_multigraphs_up_to_iso(int n, int max_edges) {
  if (n < 1) throw std::invalid_argument("all_multigraphs_up_to_iso: n must be positive");
  PairList universe;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) universe.emplace_back(u, v);
  std::vector<Graph> out;
  for_each_multiset_class(n, universe, max_edges, /*directed=*/false,
                          [&](const PairList& edges) { out.emplace_back(n, edges); });
  return out;
}

Digraph random_digraph(std::mt19937_64& rng, int n, int arc_count) {
  if (n < 2 && arc_count > 0)
    throw std::invalid_argument("random_digraph: arcs need at least 2 vertices");
  std::uniform_int_distribution<int> pick(0, n - 1);
  PairList arcs;
  arcs.reserve(static_cast<std::size_t>(arc_count));
  while (static_cast<int>(arcs.size()) < arc_count) {
    int u = pick(rng), v = pick(rng);
    if (u != v) arcs.emplace_back(u, v);
  }
  return Digraph(n, arcs);
}

SubPartition random_subpartition(std::mt19937_64& rng, int n, int min_parts) {
  if (min_parts > n) throw std::invalid_argument("random_subpartition: min_parts > n");
  std::uniform_int_distribution<int> part_count(min_parts, std::max(min_parts, n));
  for (;;) {
    int target = part_count(rng);
    if (target == 0) return SubPartition{};
    // assign each vertex to one of target parts or to none
    std::uniform_int_distribution<int> label(0, target);
    std::vector<VertexSet> parts(static_cast<std::size_t>(target));
    for (int v = 0; v < n; ++v) {
      int l = label(rng);
      if (l > 0) parts[static_cast<std::size_t>(l - 1)] = parts[static_cast<std::size_t>(l - 1)].with(v);
    }
    std::vector<VertexSet> nonempty;
    for (VertexSet p : parts)
      if (!p.empty()) nonempty.push_back(p);
    if (static_cast<int>(nonempty.size()) >= min_parts) return SubPartition(std::move(nonempty));
  }
}

namespace {

// Walks every subpartition of {0..n-1} once: vertex v takes label 0
// (uncovered) or a 1-based part index in restricted-growth form.
void walk_labelings(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> go = [&](int v, int used) {
    if (v == n) {
      visit(label, used);
      return;
    }
    for (int l = 0; l <= used + 1; ++l) {
      label[static_cast<std::size_t>(v)] = l;
      go(v + 1, std::max(used, l));
    }
  };
  go(0, 0);
}

}  // namespace

std::optional<Frac> oracle_nu_f(const Digraph& d) {
  const int n = d.vertex_count();
  if (n < 2) return std::nullopt;
  std::optional<Frac> best;
  walk_labelings(n, [&](const std::vector<int>& label, int parts) {
    if (parts < 2) return;
    long long entering = 0;
    for (const auto& a : d.arcs()) {
      int lh = label[static_cast<std::size_t>(a.head)];
      if (lh != 0 && label[static_cast<std::size_t>(a.tail)] != lh) ++entering;
    }
    Frac f{entering, parts - 1};
    if (!best || compare(f, *best) < 0) best = f;
  });
  return best;
}

std::optional<Frac> oracle_nu_f_graph(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  std::optional<Frac> best;
  // full partitions: labels 1..parts only
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> go = [&](int v, int used) {
    if (v == n) {
      if (used < 2) return;
      long long crossing = 0;
      for (const auto& e : g.edges())
        if (label[static_cast<std::size_t>(e.u)] != label[static_cast<std::size_t>(e.v)]) ++crossing;
      Frac f{crossing, used - 1};
      if (!best || compare(f, *best) < 0) best = f;
      return;
    }
    for (int l = 1; l <= used + 1; ++l) {
      label[static_cast<std::size_t>(v)] = l;
      go(v + 1, std::max(used, l));
    }
  };
  go(0, 0);
  return best;
}

std::optional<Frac> oracle_gamma_f(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  std::optional<Frac> best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    int size = __builtin_popcountll(mask);
    if (size < 2) continue;
    long long inner = 0;
    for (const auto& e : g.edges())
      if (((mask >> e.u) & 1u) && ((mask >> e.v) & 1u)) ++inner;
    Frac f{inner, size - 1};
    if (!best || compare(f, *best) > 0) best = f;
  }
  return best;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  }
  // false when u and v were already connected
  bool join(int u, int v) {
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[static_cast<std::size_t>(ru)] = rv;
    return true;
  }
};

// With per-vertex in-degree at most one, an arc set is a spanning branching
// exactly when its underlying edges are acyclic; the roots are the vertices
// with no entering arc.
bool slot_is_valid(const Digraph& d, const std::vector<int>& arc_ids, const SlotOracleSpec& spec) {
  const int n = d.vertex_count();
  if (static_cast<int>(arc_ids.size()) != n - spec.root_count) return false;
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  Dsu dsu(n);
  for (int id : arc_ids) {
    const auto& a = d.arc(id);
    if (++indeg[static_cast<std::size_t>(a.head)] > 1) return false;
    if (!dsu.join(a.tail, a.head)) return false;
  }
  bool ok = true;
  spec.forced_roots.for_each([&](int v) {
    if (indeg[static_cast<std::size_t>(v)] != 0) ok = false;
  });
  return ok;
}

}  // namespace

bool oracle_branching_packing_exists(const Digraph& d, const std::vector<SlotOracleSpec>& slots) {
  const int n = d.vertex_count();
  for (const auto& s : slots) {
    if (s.root_count < 0 || s.root_count > n) return false;
    if (s.forced_roots.size() > s.root_count) return false;
    if (!s.forced_roots.is_subset_of(VertexSet::all(n))) return false;
  }
  const int m = d.arc_count();
  const int s = static_cast<int>(slots.size());
  std::vector<std::vector<int>> slot_arcs(static_cast<std::size_t>(s));
  std::vector<std::vector<int>> indeg(static_cast<std::size_t>(s),
                                      std::vector<int>(static_cast<std::size_t>(n), 0));
  std::function<bool(int)> go = [&](int idx) {
    if (idx == m) {
      for (int i = 0; i < s; ++i)
        if (!slot_is_valid(d, slot_arcs[static_cast<std::size_t>(i)], slots[static_cast<std::size_t>(i)]))
          return false;
      return true;
    }
    const auto& arc = d.arcs()[static_cast<std::size_t>(idx)];
    for (int i = -1; i < s; ++i) {
      if (i < 0) {
        if (go(idx + 1)) return true;
        continue;
      }
      const auto& spec = slots[static_cast<std::size_t>(i)];
      auto& chosen = slot_arcs[static_cast<std::size_t>(i)];
      auto& deg = indeg[static_cast<std::size_t>(i)];
      if (static_cast<int>(chosen.size()) >= n - spec.root_count) continue;
      if (deg[static_cast<std::size_t>(arc.head)] > 0) continue;
      if (spec.forced_roots.contains(arc.head)) continue;
      chosen.push_back(arc.id);
      deg[static_cast<std::size_t>(arc.head)] = 1;
      if (go(idx + 1)) return true;
      chosen.pop_back();
      deg[static_cast<std::size_t>(arc.head)] = 0;
    }
    return false;
  };
  return go(0);
}

bool oracle_has_spanning_arborescences(const Digraph& d, int k) {
  std::vector<SlotOracleSpec> slots(static_cast<std::size_t>(k));
  return oracle_branching_packing_exists(d, slots);
}

bool oracle_k_plus_extra_exists(const Digraph& d, int k, int root_count, VertexSet forced_roots) {
  std::vector<SlotOracleSpec> slots(static_cast<std::size_t>(k));
  slots.push_back(SlotOracleSpec{root_count, forced_roots});
  return oracle_branching_packing_exists(d, slots);
}

}  // namespace testsupport
