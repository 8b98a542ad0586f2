#include "arborpack/uncross.hpp"

#include <algorithm>
#include <stdexcept>

namespace arborpack {

SetFamily::SetFamily(std::vector<VertexSet> members) : members_(std::move(members)) {
  for (const VertexSet& m : members_) {
    if (m.empty()) throw std::invalid_argument("SetFamily: empty member");
  }
  std::sort(members_.begin(), members_.end());
}

int SetFamily::count(VertexSet x) const {
  auto [lo, hi] = std::equal_range(members_.begin(), members_.end(), x);
  return static_cast<int>(hi - lo);
}

VertexSet SetFamily::support() const {
  VertexSet s;
  for (const VertexSet& m : members_) s = s | m;
  return s;
}

bool properly_intersecting(VertexSet x, VertexSet y) {
  return !(x & y).empty() && !(x - y).empty() && !(y - x).empty();
}

SetFamily pieo_step(const SetFamily& family, VertexSet x, VertexSet y) {
  if (!properly_intersecting(x, y)) {
    throw std::invalid_argument("pieo_step: sets do not properly intersect");
  }
  std::vector<VertexSet> members(family.members().begin(), family.members().end());
  auto erase_one = [&members](VertexSet v) {
    auto it = std::find(members.begin(), members.end(), v);
    if (it == members.end()) throw std::invalid_argument("pieo_step: member not in family");
    members.erase(it);
  };
  erase_one(x);
  erase_one(y);
  members.push_back(x | y);
  members.push_back(x & y);
  return SetFamily(std::move(members));
}

namespace {

std::vector<std::pair<int, int>> crossing_pairs(const SetFamily& family) {
  std::vector<std::pair<int, int>> out;
  auto members = family.members();
  for (int i = 0; i < family.size(); ++i) {
    for (int j = i + 1; j < family.size(); ++j) {
      if (properly_intersecting(members[static_cast<std::size_t>(i)],
                                members[static_cast<std::size_t>(j)])) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

void split_maximal(PieoTrace& trace) {
  auto members = trace.final_family.members();
  std::vector<VertexSet> maximal;
  std::vector<VertexSet> rest;
  for (int i = 0; i < trace.final_family.size(); ++i) {
    VertexSet m = members[static_cast<std::size_t>(i)];
    bool dominated = false;
    for (int j = 0; j < trace.final_family.size() && !dominated; ++j) {
      if (j == i) continue;
      VertexSet other = members[static_cast<std::size_t>(j)];
      if (m == other) {
        dominated = j < i;  // keep a single copy of duplicated maximal members
      } else if (m.is_subset_of(other)) {
        dominated = true;
      }
    }
    if (dominated) {
      rest.push_back(m);
    } else {
      maximal.push_back(m);
    }
  }
  trace.maximal = SetFamily(std::move(maximal));
  trace.remainder = SetFamily(std::move(rest));
}

PieoTrace run_impl(const SubPartition& f1, const SubPartition& f2, const PairChooser* choose) {
  std::vector<VertexSet> members;
  for (const VertexSet& p : f1.parts()) members.push_back(p);
  for (const VertexSet& p : f2.parts()) members.push_back(p);

  PieoTrace trace;
  trace.initial = SetFamily(std::move(members));

  SetFamily current = trace.initial;
  while (true) {
    std::vector<std::pair<int, int>> candidates = crossing_pairs(current);
    if (candidates.empty()) break;
    std::size_t pick = 0;
    if (choose) {
      pick = (*choose)(current, candidates);
      if (pick >= candidates.size()) throw std::invalid_argument("pieo chooser out of range");
    }
    auto [i, j] = candidates[pick];
    VertexSet x = current.members()[static_cast<std::size_t>(i)];
    VertexSet y = current.members()[static_cast<std::size_t>(j)];
    trace.steps.push_back(PieoStep{x, y, x | y, x & y});
    current = pieo_step(current, x, y);
  }

  trace.final_family = current;
  split_maximal(trace);
  return trace;
}

}  // namespace

PieoTrace pieo_run(const SubPartition& f1, const SubPartition& f2) {
  return run_impl(f1, f2, nullptr);
}

PieoTrace pieo_run_with_chooser(const SubPartition& f1, const SubPartition& f2,
                                const PairChooser& choose) {
  return run_impl(f1, f2, &choose);
}

bool is_laminar(const SetFamily& family) {
  return crossing_pairs(family).empty();
}

std::vector<long long> trace_indegree_sums(const Digraph& d, const PieoTrace& trace) {
  std::vector<long long> sums;
  SetFamily current = trace.initial;
  auto total = [&d](const SetFamily& f) {
    long long s = 0;
    for (const VertexSet& m : f.members()) s += d.in_degree_set(m);
    return s;
  };
  sums.push_back(total(current));
  for (const PieoStep& step : trace.steps) {
    current = pieo_step(current, step.removed_a, step.removed_b);
    sums.push_back(total(current));
  }
  if (!(current == trace.final_family)) {
    throw std::logic_error("trace_indegree_sums: trace does not replay to its final family");
  }
  return sums;
}

bool submodular_chain_check(const Digraph& d, const PieoTrace& trace) {
  std::vector<long long> sums = trace_indegree_sums(d, trace);
  bool all_equal = true;
  for (std::size_t i = 1; i < sums.size(); ++i) {
    if (sums[i] > sums[i - 1]) {
      throw std::logic_error("submodular_chain_check: in-degree sum increased along the trace");
    }
    if (sums[i] != sums[i - 1]) all_equal = false;
  }
  return all_equal;
}

}  // namespace arborpack
