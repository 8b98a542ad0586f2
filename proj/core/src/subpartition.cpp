#include "arborpack/subpartition.hpp"

#include <algorithm>
#include <stdexcept>

#include "arborpack/guard.hpp"

namespace arborpack {

SubPartition::SubPartition(std::vector<VertexSet> parts) : parts_(std::move(parts)) {
  VertexSet seen;
  for (const VertexSet& p : parts_) {
    if (p.empty()) throw std::invalid_argument("SubPartition: empty part");
    if (p.intersects(seen)) throw std::invalid_argument("SubPartition: overlapping parts");
    seen = seen | p;
  }
  std::sort(parts_.begin(), parts_.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.least() < b.least(); });
}

VertexSet SubPartition::support() const {
  VertexSet s;
  for (const VertexSet& p : parts_) s = s | p;
  return s;
}

namespace {

struct Walker {
  int n;
  int min_parts;
  bool full_only;
  const std::function<bool(const SubPartition&)>* visit;
  std::vector<VertexSet> parts;

  // Parts are created in order of their least element, so the accumulated
  // vector is already canonical when emitted.
  bool walk(int v) {
    if (v == n) {
      if (static_cast<int>(parts.size()) < min_parts) return true;
      return (*visit)(SubPartition(std::vector<VertexSet>(parts)));
    }
    if (!full_only) {
      if (!walk(v + 1)) return false;  // code 0: leave v uncovered
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      parts[i] = parts[i].with(v);
      if (!walk(v + 1)) return false;
      parts[i] = parts[i].without(v);
    }
    parts.push_back(VertexSet::of({v}));
    bool go_on = walk(v + 1);
    parts.pop_back();
    return go_on;
  }
};

}  // namespace

bool for_each_subpartition(int n, int min_parts,
                           const std::function<bool(const SubPartition&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_subpartition: negative n");
  Walker w{n, min_parts, false, &visit, {}};
  return w.walk(0);
}

bool for_each_partition(int n, int min_parts,
                        const std::function<bool(const SubPartition&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_partition: negative n");
  Walker w{n, min_parts, true, &visit, {}};
  return w.walk(0);
}

std::vector<SubPartition> enumerate_subpartitions(int n, int min_parts) {
  check_enumeration_size(n, "enumerate_subpartitions");
  std::vector<SubPartition> out;
  for_each_subpartition(n, min_parts, [&](const SubPartition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<SubPartition> enumerate_partitions(int n, int min_parts) {
  check_enumeration_size(n, "enumerate_partitions");
  std::vector<SubPartition> out;
  for_each_partition(n, min_parts, [&](const SubPartition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::uint64_t count_subpartitions(int n, int min_parts) {
  check_enumeration_size(n, "count_subpartitions");
  std::uint64_t count = 0;
  for_each_subpartition(n, min_parts, [&](const SubPartition&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace arborpack
