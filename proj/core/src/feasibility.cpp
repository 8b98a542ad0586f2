#include "arborpack/feasibility.hpp"

#include <stdexcept>

#include "arborpack/guard.hpp"
#include "arborpack/ratios.hpp"

namespace arborpack {

namespace {

void validate_spec(const Digraph& d, const BranchingSpec& spec, const char* what) {
  if (!spec.forced_roots.is_subset_of(d.vertices())) {
    throw std::invalid_argument(std::string(what) + ": forced roots outside the vertex range");
  }
  if (spec.root_count < 0 || spec.root_count > d.vertex_count()) {
    throw std::invalid_argument(std::string(what) + ": root count out of range");
  }
  if (spec.forced_roots.size() > spec.root_count) {
    throw std::invalid_argument(std::string(what) +
                                ": more forced roots than requested roots");
  }
}

long long indegree_sum(const Digraph& d, const SubPartition& p) {
  long long sum = 0;
  for (const VertexSet& x : p.parts()) sum += d.in_degree_set(x);
  return sum;
}

std::vector<int> index_range(int from, int to) {
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(i);
  return out;
}

}  // namespace

std::optional<Violation> check_pack_branching(const Digraph& d,
                                              std::span<const BranchingSpec> specs) {
  check_enumeration_size(d.vertex_count(), "check_pack_branching");
  if (specs.empty()) throw std::invalid_argument("check_pack_branching: no branchings requested");
  for (const BranchingSpec& s : specs) validate_spec(d, s, "check_pack_branching");

  int q = static_cast<int>(specs.size());
  std::optional<Violation> found;
  for_each_subpartition(d.vertex_count(), 1, [&](const SubPartition& p) {
    long long lhs = indegree_sum(d, p);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << q); ++mask) {
      long long rhs = 0;
      for (int i = 0; i < q; ++i) {
        if (!(mask >> i & 1u)) continue;
        rhs -= specs[static_cast<std::size_t>(i)].root_count -
               specs[static_cast<std::size_t>(i)].forced_roots.size();
        for (const VertexSet& x : p.parts()) {
          if (!x.intersects(specs[static_cast<std::size_t>(i)].forced_roots)) rhs += 1;
        }
      }
      if (lhs < rhs) {
        std::vector<int> indices;
        for (int i = 0; i < q; ++i) {
          if (mask >> i & 1u) indices.push_back(i + 1);
        }
        found = Violation{1, std::move(indices), p, lhs, rhs};
        return false;
      }
    }
    return true;
  });
  return found;
}

std::optional<Violation> check_k_plus_extra(const Digraph& d, int k, int root_count,
                                            VertexSet forced_roots) {
  if (k < 0) throw std::invalid_argument("check_k_plus_extra: negative k");
  check_enumeration_size(d.vertex_count(), "check_k_plus_extra");
  validate_spec(d, BranchingSpec{root_count, forced_roots}, "check_k_plus_extra");

  std::optional<Violation> found;
  for_each_subpartition(d.vertex_count(), 1, [&](const SubPartition& p) {
    long long lhs = indegree_sum(d, p);
    long long base = static_cast<long long>(k) * (p.part_count() - 1);
    if (lhs < base) {
      found = Violation{2, index_range(1, k), p, lhs, base};
      return false;
    }
    long long missing = 0;
    for (const VertexSet& x : p.parts()) {
      if (!x.intersects(forced_roots)) ++missing;
    }
    long long rhs = base + missing - (root_count - forced_roots.size());
    if (lhs < rhs) {
      found = Violation{3, index_range(1, k + 1), p, lhs, rhs};
      return false;
    }
    return true;
  });
  return found;
}

std::optional<Violation> check_spanning_arborescences(const Digraph& d, int k) {
  if (k < 0) throw std::invalid_argument("check_spanning_arborescences: negative k");
  RatioWitness nu = nu_f_digraph(d);
  if (nu.value >= Rational(k)) return std::nullopt;
  long long lhs = indegree_sum(d, nu.witness);
  long long rhs = static_cast<long long>(k) * (nu.witness.part_count() - 1);
  return Violation{2, index_range(1, k), nu.witness, lhs, rhs};
}

}  // namespace arborpack
