#include "arborpack/ratios.hpp"

#include <optional>
#include <stdexcept>

#include "arborpack/guard.hpp"

namespace arborpack {

namespace {

void require_two_vertices(int n, const char* what) {
  if (n < 2) throw std::invalid_argument(std::string(what) + ": needs at least 2 vertices");
}

}  // namespace

RatioWitness nu_f_digraph(const Digraph& d) {
  require_two_vertices(d.vertex_count(), "nu_f_digraph");
  check_enumeration_size(d.vertex_count(), "nu_f_digraph");
  std::optional<RatioWitness> best;
  for_each_subpartition(d.vertex_count(), 2, [&](const SubPartition& p) {
    long long sum = 0;
    for (const VertexSet& x : p.parts()) sum += d.in_degree_set(x);
    Rational value = make_rational(sum, p.part_count() - 1);
    if (!best || value < best->value) best = RatioWitness{value, p};
    return true;
  });
  return *best;
}

RatioWitness nu_f_graph(const Graph& g) {
  require_two_vertices(g.vertex_count(), "nu_f_graph");
  check_enumeration_size(g.vertex_count(), "nu_f_graph");
  std::optional<RatioWitness> best;
  for_each_partition(g.vertex_count(), 2, [&](const SubPartition& p) {
    long long inside = 0;
    for (const VertexSet& x : p.parts()) inside += g.edges_within(x);
    long long crossing = g.edge_count() - inside;
    Rational value = make_rational(crossing, p.part_count() - 1);
    if (!best || value < best->value) best = RatioWitness{value, p};
    return true;
  });
  return *best;
}

GammaWitness gamma_f(const Graph& g) {
  require_two_vertices(g.vertex_count(), "gamma_f");
  check_enumeration_size(g.vertex_count(), "gamma_f");
  std::optional<GammaWitness> best;
  std::uint64_t limit = std::uint64_t{1} << g.vertex_count();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    VertexSet x = VertexSet::from_bits(bits);
    if (x.size() < 2) continue;
    Rational value = make_rational(g.edges_within(x), x.size() - 1);
    if (!best || value > best->value) best = GammaWitness{value, x};
  }
  return *best;
}

Rational theorem_threshold(int k, int d) {
  if (k < 0) throw std::invalid_argument("theorem_threshold: negative k");
  if (d < 1) throw std::invalid_argument("theorem_threshold: d must be positive");
  return Rational(k) + make_rational(d - 1, d);
}

bool hypothesis_holds(const Digraph& dg, int k, int d_param) {
  return nu_f_digraph(dg).value > theorem_threshold(k, d_param);
}

}  // namespace arborpack
