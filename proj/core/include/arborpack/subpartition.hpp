#pragma once

#include <functional>
#include <span>
#include <vector>

#include "arborpack/vertex_set.hpp"

namespace arborpack {

// Family of pairwise disjoint nonempty vertex sets, kept in canonical form:
// parts ordered by their least element. The family need not cover the ground
// set; an empty family is allowed.
class SubPartition {
 public:
  SubPartition() = default;
  explicit SubPartition(std::vector<VertexSet> parts);

  std::span<const VertexSet> parts() const { return parts_; }
  int part_count() const { return static_cast<int>(parts_.size()); }
  VertexSet support() const;
  bool covers(int n) const { return support() == VertexSet::all(n); }

  bool operator==(const SubPartition&) const = default;

 private:
  std::vector<VertexSet> parts_;
};

// Visits every subpartition of {0,..,n-1} with at least min_parts parts.
// The enumeration (and the canonical order used for "first"/"least" answers
// everywhere in this library) runs in lexicographic order of the per-vertex
// code words: vertex v gets code 0 when uncovered, or the 1-based index of
// its part, parts being numbered by first appearance. Return false from the
// visitor to stop early; the function reports whether the walk ran to the end.
bool for_each_subpartition(int n, int min_parts,
                           const std::function<bool(const SubPartition&)>& visit);

// Same walk restricted to full partitions (every vertex covered).
bool for_each_partition(int n, int min_parts,
                        const std::function<bool(const SubPartition&)>& visit);

// Materialized variants; guarded by the enumeration size ceiling.
std::vector<SubPartition> enumerate_subpartitions(int n, int min_parts);
std::vector<SubPartition> enumerate_partitions(int n, int min_parts);

std::uint64_t count_subpartitions(int n, int min_parts);

}  // namespace arborpack
