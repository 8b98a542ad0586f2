#include "arborpack/packing_search.hpp"

#include <algorithm>
#include <stdexcept>

namespace arborpack {

namespace {

struct SlotState {
  SlotSpec spec;
  std::vector<int> parent;  // in-arc tail per vertex, -1 when absent
  int arc_count = 0;
  int inside_count = 0;  // arcs within isolated_component
  std::vector<int> arcs;
};

class Searcher {
 public:
  Searcher(const Digraph& d, const PackingProblem& problem) : d_(d), problem_(problem) {
    int n = d.vertex_count();
    for (const SlotSpec& spec : problem.slots) {
      if (spec.exact_arcs >= 0 && spec.exact_arcs > n) {
        throw std::invalid_argument("find_packing: slot wants more arcs than vertices");
      }
      SlotState state;
      state.spec = spec;
      state.parent.assign(static_cast<std::size_t>(n), -1);
      slots_.push_back(std::move(state));
    }
    for (const Arc& a : d.arcs()) order_.push_back(a.id);
  }

  std::optional<std::vector<std::vector<int>>> run() {
    if (assign(0)) return result_;
    return std::nullopt;
  }

 private:
  int required_remaining() const {
    int need = 0;
    for (const SlotState& s : slots_) {
      int target = s.spec.exact_arcs >= 0 ? s.spec.exact_arcs : s.spec.min_arcs;
      if (s.arc_count < target) need += target - s.arc_count;
    }
    return need;
  }

  bool creates_cycle(const SlotState& s, int tail, int head) const {
    int u = tail;
    while (u != -1) {
      if (u == head) return true;
      u = s.parent[static_cast<std::size_t>(u)];
    }
    return false;
  }

  bool admissible(const SlotState& s, const Arc& a) const {
    if (s.parent[static_cast<std::size_t>(a.head)] != -1) return false;
    if (s.spec.forced_roots.contains(a.head)) return false;
    if (s.spec.exact_arcs >= 0 && s.arc_count >= s.spec.exact_arcs) return false;
    if (s.spec.isolated_component) {
      bool tail_in = s.spec.isolated_component->contains(a.tail);
      bool head_in = s.spec.isolated_component->contains(a.head);
      if (tail_in != head_in) return false;
    }
    return !creates_cycle(s, a.tail, a.head);
  }

  bool complete() {
    std::vector<std::vector<int>> assignment;
    for (SlotState& s : slots_) {
      int target = s.spec.exact_arcs;
      if (target >= 0 && s.arc_count != target) return false;
      if (s.arc_count < s.spec.min_arcs) return false;
      if (s.spec.isolated_component &&
          s.inside_count != s.spec.isolated_component->size() - 1) {
        return false;
      }
      std::vector<int> arcs = s.arcs;
      std::sort(arcs.begin(), arcs.end());
      assignment.push_back(std::move(arcs));
    }
    if (problem_.accept && !problem_.accept(assignment)) return false;
    result_ = std::move(assignment);
    return true;
  }

  bool assign(std::size_t pos) {
    if (pos == order_.size()) return complete();
    int arcs_left = static_cast<int>(order_.size() - pos);
    if (arcs_left < required_remaining()) return false;

    const Arc& a = d_.arc(order_[pos]);
    for (SlotState& s : slots_) {
      if (!admissible(s, a)) continue;
      s.parent[static_cast<std::size_t>(a.head)] = a.tail;
      s.arc_count += 1;
      bool inside = s.spec.isolated_component && s.spec.isolated_component->contains(a.head);
      if (inside) s.inside_count += 1;
      s.arcs.push_back(a.id);
      if (assign(pos + 1)) return true;
      s.arcs.pop_back();
      if (inside) s.inside_count -= 1;
      s.arc_count -= 1;
      s.parent[static_cast<std::size_t>(a.head)] = -1;
    }
    return assign(pos + 1);  // leave the arc unused
  }

  const Digraph& d_;
  const PackingProblem& problem_;
  std::vector<SlotState> slots_;
  std::vector<int> order_;
  std::optional<std::vector<std::vector<int>>> result_;
};

VertexSet roots_from_parents(const Digraph& d, std::span<const int> arc_ids) {
  std::vector<bool> has_in(static_cast<std::size_t>(d.vertex_count()), false);
  for (int id : arc_ids) has_in[static_cast<std::size_t>(d.arc(id).head)] = true;
  VertexSet roots;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (!has_in[static_cast<std::size_t>(v)]) roots = roots.with(v);
  }
  return roots;
}

ArborescenceCert make_tree_cert(const Digraph& d, std::vector<int> arc_ids) {
  VertexSet roots = roots_from_parents(d, arc_ids);
  return ArborescenceCert{roots.least(), std::move(arc_ids)};
}

}  // namespace

std::optional<std::vector<std::vector<int>>> find_packing(const Digraph& d,
                                                          const PackingProblem& problem) {
  Searcher searcher(d, problem);
  return searcher.run();
}

std::optional<std::vector<ArborescenceCert>> find_spanning_arborescences(const Digraph& d,
                                                                         int k) {
  if (k < 0) throw std::invalid_argument("find_spanning_arborescences: negative k");
  int n = d.vertex_count();
  PackingProblem problem;
  for (int i = 0; i < k; ++i) {
    problem.slots.push_back(SlotSpec{n - 1, VertexSet{}, 0, std::nullopt});
  }
  auto found = find_packing(d, problem);
  if (!found) return std::nullopt;
  std::vector<ArborescenceCert> trees;
  for (std::vector<int>& arcs : *found) trees.push_back(make_tree_cert(d, std::move(arcs)));
  return trees;
}

std::optional<std::vector<Branching>> find_branching_packing(
    const Digraph& d, std::span<const BranchingSpec> specs) {
  int n = d.vertex_count();
  PackingProblem problem;
  for (const BranchingSpec& spec : specs) {
    if (spec.root_count < 0 || spec.root_count > n || spec.forced_roots.size() > spec.root_count) {
      throw std::invalid_argument("find_branching_packing: invalid spec");
    }
    problem.slots.push_back(SlotSpec{n - spec.root_count, spec.forced_roots, 0, std::nullopt});
  }
  auto found = find_packing(d, problem);
  if (!found) return std::nullopt;
  std::vector<Branching> out;
  for (std::vector<int>& arcs : *found) {
    VertexSet roots = roots_from_parents(d, arcs);
    out.push_back(Branching{std::move(arcs), roots});
  }
  return out;
}

std::optional<KPlusExtraPacking> find_k_plus_extra_packing(const Digraph& d, int k,
                                                           int root_count,
                                                           VertexSet forced_roots) {
  if (k < 0) throw std::invalid_argument("find_k_plus_extra_packing: negative k");
  int n = d.vertex_count();
  if (root_count < 0 || root_count > n || forced_roots.size() > root_count) {
    throw std::invalid_argument("find_k_plus_extra_packing: invalid branching spec");
  }
  PackingProblem problem;
  for (int i = 0; i < k; ++i) {
    problem.slots.push_back(SlotSpec{n - 1, VertexSet{}, 0, std::nullopt});
  }
  problem.slots.push_back(SlotSpec{n - root_count, forced_roots, 0, std::nullopt});
  auto found = find_packing(d, problem);
  if (!found) return std::nullopt;
  KPlusExtraPacking out;
  for (int i = 0; i < k; ++i) {
    out.trees.push_back(make_tree_cert(d, std::move((*found)[static_cast<std::size_t>(i)])));
  }
  std::vector<int>& extra = (*found)[static_cast<std::size_t>(k)];
  out.extra = Branching{extra, roots_from_parents(d, extra)};
  return out;
}

}  // namespace arborpack
