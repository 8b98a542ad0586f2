#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arborpack/vertex_set.hpp"

namespace arborpack {

struct Arc {
  int id;
  int tail;
  int head;
};

// Multi-digraph on vertices {0,..,n-1}. Parallel arcs are allowed, loops are
// not. Arc ids are dense 0..m-1 at construction; remove_arcs keeps the
// surviving ids stable, add_arcs appends fresh ids, so ids stay unique and
// ascending but may become sparse. Instances are immutable; every mutation
// returns a new graph.
class Digraph {
 public:
  Digraph(int n, const std::vector<std::pair<int, int>>& endpoints);

  static Digraph empty(int n) { return Digraph(n, {}); }

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  std::span<const Arc> arcs() const { return arcs_; }
  VertexSet vertices() const { return VertexSet::all(n_); }

  bool has_arc(int id) const { return find_arc(id) != nullptr; }
  const Arc* find_arc(int id) const;
  const Arc& arc(int id) const;

  // number of arcs with head in x and tail outside x
  int in_degree_set(VertexSet x) const;

  Digraph remove_arcs(std::span<const int> ids) const;
  Digraph add_arcs(const std::vector<std::pair<int, int>>& endpoints,
                   std::vector<int>* new_ids = nullptr) const;

  struct Contraction;
  // Merges w into one vertex and drops the arcs inside w. Vertices outside w
  // keep their relative order as 0..n-|w|-1; the merged vertex is last.
  Contraction contract(VertexSet w) const;

  struct Induced;
  Induced induced(VertexSet x) const;

 private:
  Digraph() : n_(0) {}

  int n_;
  std::vector<Arc> arcs_;  // ascending by id
};

struct Digraph::Contraction {
  Digraph graph;
  // surviving old arc id -> new arc id; arcs inside w are dropped
  std::unordered_map<int, int> arc_map;
  // old vertex -> new vertex; all of w maps to merged_vertex
  std::vector<int> vertex_map;
  int merged_vertex;
};

struct Digraph::Induced {
  Digraph graph;
  std::vector<int> vertex_map;  // old -> new, -1 outside x
  std::vector<int> vertices;    // new -> old
  std::unordered_map<int, int> arc_map;  // old arc id -> new arc id
};

struct Edge {
  int id;
  int u;
  int v;
};

// Undirected multigraph; same id discipline as Digraph, loops rejected.
class Graph {
 public:
  Graph(int n, const std::vector<std::pair<int, int>>& endpoints);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int id) const;

  // number of edges with both endpoints in x
  int edges_within(VertexSet x) const;

 private:
  int n_;
  std::vector<Edge> edges_;
};

void check_vertex(int v, int n, const char* what);

}  // namespace arborpack
