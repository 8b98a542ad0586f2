#include "arborpack/graph.hpp"

#include <algorithm>

namespace arborpack {

void check_vertex(int v, int n, const char* what) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                " out of range [0," + std::to_string(n) + ")");
  }
}

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& endpoints) : n_(n) {
  if (n < 0) throw std::invalid_argument("Digraph: negative vertex count");
  if (n > VertexSet::max_vertices) throw std::invalid_argument("Digraph: too many vertices");
  arcs_.reserve(endpoints.size());
  int id = 0;
  for (const auto& [t, h] : endpoints) {
    check_vertex(t, n, "Digraph arc tail");
    check_vertex(h, n, "Digraph arc head");
    if (t == h) {
      throw std::invalid_argument("Digraph: loop " + std::to_string(t) + "->" +
                                  std::to_string(h) + " not allowed");
    }
    arcs_.push_back(Arc{id++, t, h});
  }
}

const Arc* Digraph::find_arc(int id) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), id,
                             [](const Arc& a, int key) { return a.id < key; });
  if (it == arcs_.end() || it->id != id) return nullptr;
  return &*it;
}

const Arc& Digraph::arc(int id) const {
  const Arc* a = find_arc(id);
  if (!a) throw std::invalid_argument("Digraph: unknown arc id " + std::to_string(id));
  return *a;
}

int Digraph::in_degree_set(VertexSet x) const {
  if (!x.is_subset_of(vertices())) {
    throw std::invalid_argument("in_degree_set: set not within the vertex range");
  }
  int deg = 0;
  for (const Arc& a : arcs_) {
    if (x.contains(a.head) && !x.contains(a.tail)) ++deg;
  }
  return deg;
}

Digraph Digraph::remove_arcs(std::span<const int> ids) const {
  for (int id : ids) {
    if (!has_arc(id)) throw std::invalid_argument("remove_arcs: unknown arc id " + std::to_string(id));
  }
  Digraph out;
  out.n_ = n_;
  out.arcs_.reserve(arcs_.size());
  for (const Arc& a : arcs_) {
    bool removed = std::find(ids.begin(), ids.end(), a.id) != ids.end();
    if (!removed) out.arcs_.push_back(a);
  }
  return out;
}

Digraph Digraph::add_arcs(const std::vector<std::pair<int, int>>& endpoints,
                          std::vector<int>* new_ids) const {
  Digraph out;
  out.n_ = n_;
  out.arcs_ = arcs_;
  int next = arcs_.empty() ? 0 : arcs_.back().id + 1;
  if (new_ids) new_ids->clear();
  for (const auto& [t, h] : endpoints) {
    check_vertex(t, n_, "add_arcs tail");
    check_vertex(h, n_, "add_arcs head");
    if (t == h) throw std::invalid_argument("add_arcs: loop not allowed");
    out.arcs_.push_back(Arc{next, t, h});
    if (new_ids) new_ids->push_back(next);
    ++next;
  }
  return out;
}

Digraph::Contraction Digraph::contract(VertexSet w) const {
  if (w.empty()) throw std::invalid_argument("contract: empty vertex set");
  if (!w.is_subset_of(vertices())) throw std::invalid_argument("contract: set not within the vertex range");

  std::vector<int> vmap(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (int v = 0; v < n_; ++v) {
    if (!w.contains(v)) vmap[static_cast<std::size_t>(v)] = next++;
  }
  int merged = next;
  for (int v = 0; v < n_; ++v) {
    if (w.contains(v)) vmap[static_cast<std::size_t>(v)] = merged;
  }

  Contraction out{Digraph(), {}, std::move(vmap), merged};
  out.graph.n_ = merged + 1;
  int next_id = 0;
  for (const Arc& a : arcs_) {
    int t = out.vertex_map[static_cast<std::size_t>(a.tail)];
    int h = out.vertex_map[static_cast<std::size_t>(a.head)];
    if (t == h) continue;  // inside w
    out.graph.arcs_.push_back(Arc{next_id, t, h});
    out.arc_map.emplace(a.id, next_id);
    ++next_id;
  }
  return out;
}

Digraph::Induced Digraph::induced(VertexSet x) const {
  if (x.empty()) throw std::invalid_argument("induced: empty vertex set");
  if (!x.is_subset_of(vertices())) throw std::invalid_argument("induced: set not within the vertex range");
  Induced out{Digraph(), std::vector<int>(static_cast<std::size_t>(n_), -1), {}, {}};
  x.for_each([&](int v) {
    out.vertex_map[static_cast<std::size_t>(v)] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(v);
  });
  out.graph.n_ = x.size();
  int next_id = 0;
  for (const Arc& a : arcs_) {
    if (x.contains(a.tail) && x.contains(a.head)) {
      out.graph.arcs_.push_back(Arc{next_id,
                                    out.vertex_map[static_cast<std::size_t>(a.tail)],
                                    out.vertex_map[static_cast<std::size_t>(a.head)]});
      out.arc_map.emplace(a.id, next_id);
      ++next_id;
    }
  }
  return out;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& endpoints) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  if (n > VertexSet::max_vertices) throw std::invalid_argument("Graph: too many vertices");
  edges_.reserve(endpoints.size());
  int id = 0;
  for (const auto& [u, v] : endpoints) {
    check_vertex(u, n, "Graph edge endpoint");
    check_vertex(v, n, "Graph edge endpoint");
    if (u == v) {
      throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u) + " not allowed");
    }
    edges_.push_back(Edge{id++, u, v});
  }
}

const Edge& Graph::edge(int id) const {
  if (id < 0 || id >= static_cast<int>(edges_.size())) {
    throw std::invalid_argument("Graph: unknown edge id " + std::to_string(id));
  }
  return edges_[static_cast<std::size_t>(id)];
}

int Graph::edges_within(VertexSet x) const {
  int count = 0;
  for (const Edge& e : edges_) {
    if (x.contains(e.u) && x.contains(e.v)) ++count;
  }
  return count;
}

}  // namespace arborpack
