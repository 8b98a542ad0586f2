#include "arborpack/sharpness.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>

#include "arborpack/guard.hpp"
#include "arborpack/ratios.hpp"
#include "arborpack/solver.hpp"

namespace arborpack {

namespace {

// union-find without path compression so assignments can be rolled back
int dsu_find(const std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
  return v;
}

}  // namespace

Graph build_sharp_graph(int k, int d) {
  if (d < 1) throw std::invalid_argument("build_sharp_graph: d must be at least 1");
  if (k < d + 1) throw std::invalid_argument("build_sharp_graph: k must be at least d + 1");
  int n = d + 1;
  int pair_count = n * (n - 1) / 2;
  int m = k * d + d - 1;
  int base = m / pair_count;
  int leftover = m % pair_count;

  std::vector<std::pair<int, int>> endpoints;
  endpoints.reserve(static_cast<std::size_t>(m));
  int pair_index = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int copies = base + (pair_index < leftover ? 1 : 0);
      for (int c = 0; c < copies; ++c) endpoints.emplace_back(u, v);
      ++pair_index;
    }
  }
  Graph g(n, endpoints);
  GammaWitness gamma = gamma_f(g);
  if (!(gamma.value < Rational(k + 1))) {
    throw std::runtime_error("build_sharp_graph: even edge spread has gamma_f = " +
                             rational_to_string(gamma.value) + ", not below " +
                             std::to_string(k + 1));
  }
  return g;
}

std::optional<std::vector<std::vector<int>>> nash_williams_decompose(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("nash_williams_decompose: need at least one forest");
  check_search_size(g.vertex_count(), g.edge_count(), "nash_williams_decompose");

  int n = g.vertex_count();
  int m = g.edge_count();
  // one union-find per forest, stored flat
  std::vector<std::vector<int>> parent(static_cast<std::size_t>(t));
  for (auto& p : parent) {
    p.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) p[static_cast<std::size_t>(v)] = v;
  }
  std::vector<int> forest_size(static_cast<std::size_t>(t), 0);
  std::vector<int> assigned(static_cast<std::size_t>(m), -1);

  auto place = [&](auto&& self, int e) -> bool {
    if (e == m) return true;
    const Edge& edge = g.edge(e);
    bool tried_empty = false;
    for (int j = 0; j < t; ++j) {
      if (forest_size[static_cast<std::size_t>(j)] == 0) {
        // empty forests are interchangeable: try only the first one
        if (tried_empty) continue;
        tried_empty = true;
      }
      int ru = dsu_find(parent[static_cast<std::size_t>(j)], edge.u);
      int rv = dsu_find(parent[static_cast<std::size_t>(j)], edge.v);
      if (ru == rv) continue;  // would close a cycle in forest j
      parent[static_cast<std::size_t>(j)][static_cast<std::size_t>(ru)] = rv;
      forest_size[static_cast<std::size_t>(j)] += 1;
      assigned[static_cast<std::size_t>(e)] = j;
      if (self(self, e + 1)) return true;
      assigned[static_cast<std::size_t>(e)] = -1;
      forest_size[static_cast<std::size_t>(j)] -= 1;
      parent[static_cast<std::size_t>(j)][static_cast<std::size_t>(ru)] = ru;
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;

  std::vector<std::vector<int>> forests(static_cast<std::size_t>(t));
  for (int e = 0; e < m; ++e) {
    forests[static_cast<std::size_t>(assigned[static_cast<std::size_t>(e)])].push_back(e);
  }
  return forests;
}

OrientationResult orient_to_branchings(const Graph& g,
                                       const std::vector<std::vector<int>>& forests) {
  int n = g.vertex_count();
  int m = g.edge_count();
  std::vector<int> owner(static_cast<std::size_t>(m), -1);
  for (std::size_t i = 0; i < forests.size(); ++i) {
    for (int id : forests[i]) {
      if (id < 0 || id >= m) {
        throw std::invalid_argument("orient_to_branchings: unknown edge id");
      }
      if (owner[static_cast<std::size_t>(id)] != -1) {
        throw std::invalid_argument("orient_to_branchings: edge assigned twice");
      }
      owner[static_cast<std::size_t>(id)] = static_cast<int>(i);
    }
  }
  for (int e = 0; e < m; ++e) {
    if (owner[static_cast<std::size_t>(e)] == -1) {
      throw std::invalid_argument("orient_to_branchings: edge missing from every forest");
    }
  }

  std::vector<std::pair<int, int>> arc_endpoints(static_cast<std::size_t>(m));
  std::vector<Branching> branchings;
  VertexSet covered;

  for (const std::vector<int>& forest : forests) {
    // adjacency restricted to this forest, neighbors ascending
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    for (int id : forest) {
      const Edge& e = g.edge(id);
      adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, id);
      adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, id);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    VertexSet visited;
    VertexSet roots;
    for (int seed = 0; seed < n; ++seed) {
      if (visited.contains(seed)) continue;
      // collect the component of seed; seed is its least vertex
      std::vector<int> comp{seed};
      VertexSet comp_set = VertexSet::of({seed});
      for (std::size_t head = 0; head < comp.size(); ++head) {
        for (const auto& [nb, id] : adj[static_cast<std::size_t>(comp[head])]) {
          if (!comp_set.contains(nb)) {
            comp_set = comp_set.with(nb);
            comp.push_back(nb);
          }
        }
      }
      visited = visited | comp_set;

      VertexSet fresh = comp_set - covered;
      int root = fresh.empty() ? comp_set.least() : fresh.least();
      covered = covered.with(root);
      roots = roots.with(root);

      // orient the component's edges away from the root
      VertexSet reached = VertexSet::of({root});
      std::queue<int> queue;
      queue.push(root);
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (const auto& [nb, id] : adj[static_cast<std::size_t>(u)]) {
          if (reached.contains(nb)) continue;
          reached = reached.with(nb);
          arc_endpoints[static_cast<std::size_t>(id)] = {u, nb};
          queue.push(nb);
        }
      }
    }

    std::vector<int> arc_ids = forest;
    std::sort(arc_ids.begin(), arc_ids.end());
    branchings.push_back(Branching{std::move(arc_ids), roots});
  }

  if (!(covered == VertexSet::all(n))) {
    throw std::runtime_error("orient_to_branchings: roots do not cover every vertex");
  }
  return OrientationResult{Digraph(n, arc_endpoints), std::move(branchings)};
}

SharpInstance build_sharp_instance(int k, int d) {
  Graph g = build_sharp_graph(k, d);
  auto forests = nash_williams_decompose(g, k + 1);
  if (!forests) {
    throw std::runtime_error("build_sharp_instance: no decomposition into k+1 forests");
  }
  OrientationResult oriented = orient_to_branchings(g, *forests);
  return SharpInstance{k,
                       d,
                       std::move(g),
                       std::move(*forests),
                       std::move(oriented.digraph),
                       std::move(oriented.branchings)};
}

SharpnessReport verify_sharp(const Digraph& d, int k, int d_param) {
  SharpnessReport report;
  auto fail = [&report](std::string msg) { report.failures.push_back(std::move(msg)); };

  if (k < 0 || d_param < 1) {
    fail("invalid parameters");
    return report;
  }
  int n = d.vertex_count();
  if (n != d_param + 1) {
    fail("vertex count " + std::to_string(n) + " differs from d + 1 = " +
         std::to_string(d_param + 1));
    return report;
  }

  Rational target = theorem_threshold(k, d_param);
  RatioWitness nu = nu_f_digraph(d);
  report.nu_value = nu.value;
  report.nu_matches = nu.value == target;
  if (!report.nu_matches) {
    fail("nu_f = " + rational_to_string(nu.value) + ", expected " + rational_to_string(target));
  }
  Rational singleton_ratio = make_rational(d.arc_count(), n - 1);
  report.singleton_witness = singleton_ratio == nu.value;
  if (!report.singleton_witness) {
    fail("all-singleton partition gives " + rational_to_string(singleton_ratio) +
         ", not the minimum " + rational_to_string(nu.value));
  }

  report.no_packing = !solve_exhaustive(d, k, d_param).has_value();
  if (!report.no_packing) fail("a packing certificate exists");

  std::vector<long long> indeg(static_cast<std::size_t>(n), 0);
  for (const Arc& a : d.arcs()) indeg[static_cast<std::size_t>(a.head)] += 1;

  report.arc_bound = true;
  report.indegree_bound = true;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    VertexSet x = VertexSet::from_bits(bits);
    long long inside = 0;
    long long indeg_sum = 0;
    for (const Arc& a : d.arcs()) {
      if (x.contains(a.head) && x.contains(a.tail)) ++inside;
    }
    x.for_each([&](int v) { indeg_sum += indeg[static_cast<std::size_t>(v)]; });

    long long arc_rhs = static_cast<long long>(k + 1) * (x.size() - 1);
    if (inside > arc_rhs || (x.size() >= 2 && inside == arc_rhs)) {
      if (report.arc_bound) {
        fail("arc-count bound fails on a set of size " + std::to_string(x.size()) + ": " +
             std::to_string(inside) + " vs " + std::to_string(arc_rhs));
      }
      report.arc_bound = false;
    }

    long long indeg_rhs = static_cast<long long>(k + 1) * x.size() - (k + 2);
    bool is_all = x == VertexSet::all(n);
    if (indeg_sum < indeg_rhs || (indeg_sum == indeg_rhs) != is_all) {
      if (report.indegree_bound) {
        fail("in-degree bound fails on a set of size " + std::to_string(x.size()) + ": " +
             std::to_string(indeg_sum) + " vs " + std::to_string(indeg_rhs));
      }
      report.indegree_bound = false;
    }
  }

  report.ok = report.nu_matches && report.singleton_witness && report.no_packing &&
              report.arc_bound && report.indegree_bound;
  return report;
}

}  // namespace arborpack
