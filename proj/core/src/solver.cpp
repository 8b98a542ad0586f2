#include "arborpack/solver.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "arborpack/feasibility.hpp"
#include "arborpack/guard.hpp"
#include "arborpack/ratios.hpp"

namespace arborpack {

namespace {

// signals that the constructive mode hit a state it cannot explain; the
// caller falls back to the exhaustive search
struct Divergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long long indegree_sum(const Digraph& d, const SubPartition& p) {
  long long sum = 0;
  for (const VertexSet& x : p.parts()) sum += d.in_degree_set(x);
  return sum;
}

int minimum_extra_arcs(int d_param, int n) {
  // smallest integer a with a * d > (d - 1) * (n - 1)
  return static_cast<int>((static_cast<long long>(d_param - 1) * (n - 1)) / d_param) + 1;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

PackingCertificate assemble(const Digraph& d, int k, int d_param,
                            std::vector<ArborescenceCert> trees, std::vector<int> extra_arcs,
                            const char* context) {
  std::sort(extra_arcs.begin(), extra_arcs.end());
  RootsOrDefect rb = is_branching(d, extra_arcs);
  if (!rb.roots) {
    throw Divergence(std::string(context) + ": extra arcs are not a branching (" + rb.defect +
                     ")");
  }
  PackingCertificate cert;
  cert.k = k;
  cert.d = d_param;
  cert.trees = std::move(trees);
  cert.extra = Branching{std::move(extra_arcs), *rb.roots};
  cert.mode = "proof-trace";
  return cert;
}

struct PackingState {
  std::vector<ArborescenceCert> trees;
  std::vector<int> extra_arcs;  // ascending
  VertexSet designated;         // span of one extra component
};

// root of the designated component: its unique vertex without an entering
// extra arc
int designated_root(const Digraph& d, const PackingState& state) {
  VertexSet heads;
  for (int id : state.extra_arcs) {
    const Arc& a = d.arc(id);
    if (state.designated.contains(a.head)) heads = heads.with(a.head);
  }
  VertexSet roots = state.designated - heads;
  if (roots.size() != 1) throw Divergence("designated component lacks a unique root");
  return roots.least();
}

std::vector<int> arcs_outside_component(const Digraph& d, const PackingState& state) {
  std::vector<int> out;
  for (int id : state.extra_arcs) {
    if (!state.designated.contains(d.arc(id).head)) out.push_back(id);
  }
  return out;
}

std::vector<int> arcs_from_to(const Digraph& d, VertexSet from, VertexSet to) {
  std::vector<int> out;
  for (const Arc& a : d.arcs()) {
    if (from.contains(a.tail) && to.contains(a.head)) out.push_back(a.id);
  }
  return out;
}

// Restrictions of the k trees and of the extra branching to s, with the roots
// the combination step expects; validates the structure the equality analysis
// promises and throws Divergence on any mismatch.
std::vector<SubArborescence> derive_restrictions(const Digraph& d, VertexSet s,
                                                 const PackingState& state) {
  std::vector<SubArborescence> out;
  std::vector<int> entering_all = arcs_from_to(d, d.vertices() - s, s);
  std::vector<int> entering_by_trees;

  auto validate_spanning_arb = [&](const std::vector<int>& inside, int root, const char* what) {
    if (static_cast<int>(inside.size()) != s.size() - 1) {
      throw Divergence(std::string(what) + ": restriction does not span the set");
    }
    RootsOrDefect rb = is_branching(d, inside);
    if (!rb.roots) throw Divergence(std::string(what) + ": restriction is not a branching");
    VertexSet heads = s.without(root);
    for (int id : inside) {
      const Arc& a = d.arc(id);
      if (!s.contains(a.tail) || !s.contains(a.head)) {
        throw Divergence(std::string(what) + ": restriction leaves the set");
      }
      if (!heads.contains(a.head)) throw Divergence(std::string(what) + ": unexpected head");
      heads = heads.without(a.head);
    }
    if (!heads.empty()) throw Divergence(std::string(what) + ": some vertex is not reached");
  };

  for (const ArborescenceCert& tree : state.trees) {
    std::vector<int> inside;
    std::vector<int> entering;
    for (int id : tree.arc_ids) {
      const Arc& a = d.arc(id);
      bool head_in = s.contains(a.head);
      bool tail_in = s.contains(a.tail);
      if (head_in && tail_in) inside.push_back(id);
      if (head_in && !tail_in) entering.push_back(id);
    }
    int root;
    if (entering.empty()) {
      if (!s.contains(tree.root)) throw Divergence("tree avoids the set entirely");
      root = tree.root;
    } else if (entering.size() == 1) {
      if (s.contains(tree.root)) throw Divergence("rooted tree re-enters the set");
      root = d.arc(entering.front()).head;
      entering_by_trees.push_back(entering.front());
    } else {
      throw Divergence("tree enters the set more than once");
    }
    validate_spanning_arb(inside, root, "tree restriction");
    out.push_back(SubArborescence{root, std::move(inside)});
  }

  std::vector<int> extra_inside;
  for (int id : state.extra_arcs) {
    const Arc& a = d.arc(id);
    bool head_in = s.contains(a.head);
    bool tail_in = s.contains(a.tail);
    if (head_in && !tail_in) throw Divergence("extra branching enters the set");
    if (head_in && tail_in) extra_inside.push_back(id);
  }
  VertexSet extra_heads;
  for (int id : extra_inside) extra_heads = extra_heads.with(d.arc(id).head);
  VertexSet extra_roots = s - extra_heads;
  if (extra_roots.size() != 1) throw Divergence("extra restriction lacks a unique root");
  int extra_root = extra_roots.least();
  validate_spanning_arb(extra_inside, extra_root, "extra restriction");
  out.push_back(SubArborescence{extra_root, std::move(extra_inside)});

  // every arc entering s must be one of the unique tree entries
  std::sort(entering_by_trees.begin(), entering_by_trees.end());
  if (entering_all != entering_by_trees) {
    throw Divergence("an arc outside the trees enters the set");
  }
  return out;
}

class TraceSolver {
 public:
  TraceSolver(int k, int d_param, std::vector<TraceEntry>& trace)
      : k_(k), d_(d_param), trace_(trace) {}

  PackingCertificate solve(const Digraph& d, int depth) {
    int n = d.vertex_count();
    if (!hypothesis_holds(d, k_, d_)) {
      throw Divergence("packing hypothesis does not hold at this level");
    }
    int c = ceil_div(n - 1, d_);
    if (check_k_plus_extra(d, k_, c, VertexSet{})) {
      throw Divergence("initial root budget is infeasible");
    }

    if (c == 1) {
      auto packing = find_k_plus_extra_packing(d, k_, 1, VertexSet{});
      if (!packing) throw Divergence("no packing with a single extra root");
      tag(d, depth, c, "single-root", {});
      return assemble(d, k_, d_, std::move(packing->trees), packing->extra.arc_ids,
                      "single-root");
    }

    if (!fractional_bound_tight(d, c)) {
      // slack everywhere: one fewer root is still feasible
      if (check_k_plus_extra(d, k_, c - 1, VertexSet{})) {
        throw Divergence("tightened root budget is infeasible despite slack");
      }
      auto packing = find_k_plus_extra_packing(d, k_, c - 1, VertexSet{});
      if (!packing) throw Divergence("no packing after tightening the root budget");
      tag(d, depth, c, "tighten-roots", {});
      return assemble(d, k_, d_, std::move(packing->trees), packing->extra.arc_ids,
                      "tighten-roots");
    }

    PackingState state = minimize_component(d, c);
    tag(d, depth, c, "min-component", state.designated.to_vector());

    while (true) {
      if (state.designated.size() == 1) {
        // the other components cover n-1 vertices with c-1 < (n-1)/d roots,
        // so one of them has more than d vertices
        tag(d, depth, c, "small-component-pigeonhole", state.designated.to_vector());
        return assemble(d, k_, d_, std::move(state.trees), state.extra_arcs,
                        "small-component-pigeonhole");
      }

      VertexSet u = d.vertices() - state.designated;
      std::vector<int> candidates = arcs_from_to(d, u, state.designated);
      std::vector<int> removed = arcs_outside_component(d, state);

      if (candidates.empty()) {
        tag(d, depth, c, "contract-component", state.designated.to_vector());
        return contract_and_recurse(d, state.designated, state, depth);
      }

      std::optional<int> free_arc = unblocked_candidate(d, removed, candidates);
      if (free_arc) {
        state = augment(d, state, *free_arc, depth, c);
        continue;
      }

      auto located = minimal_violating_set(d, k_, removed, candidates);
      if (!located) throw Divergence("every candidate arc turned out unblocked");
      VertexSet x0 = located->x0;
      if (!x0.is_subset_of(state.designated)) {
        throw Divergence("located set escapes the designated component");
      }
      if (x0.size() >= 2) {
        tag(d, depth, c, "contract-blocked-set", x0.to_vector());
        return contract_and_recurse(d, x0, state, depth);
      }
      if (x0.least() != designated_root(d, state)) {
        throw Divergence("blocked singleton is not the designated root");
      }
      // the minimum-size tight subpartition has more parts than the other
      // components can separate, so one of them has more than d vertices
      tag(d, depth, c, "blocked-singleton-pigeonhole", x0.to_vector());
      return assemble(d, k_, d_, std::move(state.trees), state.extra_arcs,
                      "blocked-singleton-pigeonhole");
    }
  }

 private:
  void tag(const Digraph& d, int depth, int c, std::string name, std::vector<int> detail) {
    trace_.push_back(TraceEntry{std::move(name), depth, d.vertex_count(), c, std::move(detail)});
  }

  bool fractional_bound_tight(const Digraph& d, int c) {
    bool tight = false;
    for_each_subpartition(d.vertex_count(), 1, [&](const SubPartition& p) {
      long long lhs = indegree_sum(d, p);
      long long rhs = static_cast<long long>(k_) * (p.part_count() - 1) + p.part_count() - c;
      if (lhs == rhs) {
        tight = true;
        return false;
      }
      return true;
    });
    return tight;
  }

  // first packing whose extra branching has a component of the smallest
  // achievable span, scanning spans by size then by canonical set order
  PackingState minimize_component(const Digraph& d, int c) {
    int n = d.vertex_count();
    for (int size = 1; size <= n - c + 1; ++size) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet w = VertexSet::from_bits(bits);
        if (w.size() != size) continue;
        PackingProblem problem;
        for (int i = 0; i < k_; ++i) {
          problem.slots.push_back(SlotSpec{n - 1, VertexSet{}, 0, std::nullopt});
        }
        problem.slots.push_back(SlotSpec{n - c, VertexSet{}, 0, w});
        auto found = find_packing(d, problem);
        if (!found) continue;
        PackingState state;
        for (int i = 0; i < k_; ++i) {
          std::vector<int>& arcs = (*found)[static_cast<std::size_t>(i)];
          VertexSet heads;
          for (int id : arcs) heads = heads.with(d.arc(id).head);
          state.trees.push_back(
              ArborescenceCert{(d.vertices() - heads).least(), std::move(arcs)});
        }
        state.extra_arcs = (*found)[static_cast<std::size_t>(k_)];
        state.designated = w;
        return state;
      }
    }
    throw Divergence("no packing with the initial root budget was found");
  }

  // arc entering no member of any subpartition whose in-degree sum in
  // d minus removed meets the k-tree bound with equality
  std::optional<int> unblocked_candidate(const Digraph& d, const std::vector<int>& removed,
                                         const std::vector<int>& candidates) {
    Digraph d2 = d.remove_arcs(removed);
    std::vector<bool> blocked(candidates.size(), false);
    for_each_subpartition(d.vertex_count(), 1, [&](const SubPartition& p) {
      if (indegree_sum(d2, p) != static_cast<long long>(k_) * (p.part_count() - 1)) return true;
      for (const VertexSet& x : p.parts()) {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          const Arc& a = d.arc(candidates[i]);
          if (x.contains(a.head) && !x.contains(a.tail)) blocked[i] = true;
        }
      }
      return true;
    });
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!blocked[i]) return candidates[i];
    }
    return std::nullopt;
  }

  PackingState augment(const Digraph& d, const PackingState& state, int arc_id, int depth,
                       int c) {
    const Arc& uv = d.arc(arc_id);
    tag(d, depth, c, "augment-arc", {uv.tail, uv.head});

    std::vector<int> removed = arcs_outside_component(d, state);
    removed.push_back(arc_id);
    std::sort(removed.begin(), removed.end());
    VertexSet forced = (d.vertices() - state.designated).with(uv.head);

    Digraph rest = d.remove_arcs(removed);
    if (check_k_plus_extra(rest, k_, forced.size() + 1, forced)) {
      throw Divergence("augmented instance is infeasible");
    }
    auto sub = find_k_plus_extra_packing(rest, k_, forced.size() + 1, forced);
    if (!sub) throw Divergence("no packing for the augmented instance");

    PackingState next;
    next.trees = std::move(sub->trees);
    next.extra_arcs = removed;
    next.extra_arcs.insert(next.extra_arcs.end(), sub->extra.arc_ids.begin(),
                           sub->extra.arc_ids.end());
    std::sort(next.extra_arcs.begin(), next.extra_arcs.end());

    VertexSet sub_roots = sub->extra.roots;
    VertexSet outside_roots = sub_roots - forced;
    if (outside_roots.size() != 1) throw Divergence("augmented packing has no fresh root");
    int r0 = outside_roots.least();
    for (const BranchingComponent& comp : branching_components(d, next.extra_arcs)) {
      if (comp.root == r0) {
        next.designated = comp.span;
        break;
      }
    }
    if (next.designated.empty()) throw Divergence("fresh root lost its component");
    if (static_cast<int>(next.designated.size()) >= static_cast<int>(state.designated.size())) {
      throw Divergence("augmentation did not shrink the designated component");
    }
    return next;
  }

  PackingCertificate contract_and_recurse(const Digraph& d, VertexSet s,
                                          const PackingState& state, int depth) {
    std::vector<SubArborescence> parts = derive_restrictions(d, s, state);
    Digraph::Contraction ctr = d.contract(s);
    PackingCertificate inner = solve(ctr.graph, depth + 1);
    PackingCertificate lifted;
    try {
      lifted = lift_contraction(d, s, ctr, inner, parts);
    } catch (const std::invalid_argument& e) {
      throw Divergence(std::string("combining across the contraction failed: ") + e.what());
    }
    lifted.mode = "proof-trace";
    return lifted;
  }

  int k_;
  int d_;
  std::vector<TraceEntry>& trace_;
};

}  // namespace

VerifyReport verify_theorem7(const Digraph& d, int k, int d_param,
                             const PackingCertificate& cert) {
  VerifyReport report;
  auto fail = [&report](std::string msg) { report.failures.push_back(std::move(msg)); };

  if (k < 0) fail("negative k");
  if (d_param < 1) fail("nonpositive d");
  int n = d.vertex_count();

  if (static_cast<int>(cert.trees.size()) != k) {
    fail("certificate carries " + std::to_string(cert.trees.size()) + " trees, expected " +
         std::to_string(k));
  }

  // (i) known ids, pairwise arc-disjoint
  std::map<int, int> uses;
  auto note_use = [&](int id) { uses[id] += 1; };
  for (const ArborescenceCert& tree : cert.trees) {
    for (int id : tree.arc_ids) note_use(id);
  }
  for (int id : cert.extra.arc_ids) note_use(id);
  for (const auto& [id, count] : uses) {
    if (!d.has_arc(id)) fail("unknown arc id " + std::to_string(id));
    if (count > 1) fail("arc " + std::to_string(id) + " is used " + std::to_string(count) +
                        " times");
  }

  auto all_known = [&d](const std::vector<int>& ids) {
    for (int id : ids) {
      if (!d.has_arc(id)) return false;
    }
    return true;
  };

  // (ii) each tree is a spanning arborescence with the stated root
  for (std::size_t i = 0; i < cert.trees.size(); ++i) {
    const ArborescenceCert& tree = cert.trees[i];
    if (!all_known(tree.arc_ids)) continue;  // already reported under (i)
    RootsOrDefect rb = is_branching(d, tree.arc_ids);
    if (!rb.roots) {
      fail("tree " + std::to_string(i) + ": " + rb.defect);
      continue;
    }
    if (static_cast<int>(tree.arc_ids.size()) != n - 1 || rb.roots->size() != 1) {
      fail("tree " + std::to_string(i) + " is not spanning");
      continue;
    }
    if (rb.roots->least() != tree.root) {
      fail("tree " + std::to_string(i) + " root mismatch");
    }
  }

  // (iii) the extra arc set is a branching with the stated roots
  bool extra_valid = false;
  if (all_known(cert.extra.arc_ids)) {
    RootsOrDefect rb = is_branching(d, cert.extra.arc_ids);
    if (!rb.roots) {
      fail("extra: " + rb.defect);
    } else if (!(*rb.roots == cert.extra.roots)) {
      fail("extra root set mismatch");
    } else {
      extra_valid = true;
    }
  }

  // (iv) strict arc-count bound, exact integer arithmetic
  long long extra_arcs = static_cast<long long>(cert.extra.arc_ids.size());
  if (extra_arcs * d_param <= static_cast<long long>(d_param - 1) * (n - 1)) {
    fail("extra branching too small: " + std::to_string(extra_arcs) + " * " +
         std::to_string(d_param) + " <= " + std::to_string(d_param - 1) + " * " +
         std::to_string(n - 1));
  }

  // (v) spanning arborescence, or some component with at least d arcs
  if (extra_valid) {
    bool spanning_arb =
        cert.extra.roots.size() == 1 && static_cast<int>(cert.extra.arc_ids.size()) == n - 1;
    if (!spanning_arb) {
      int best = 0;
      for (const BranchingComponent& comp : branching_components(d, cert.extra.arc_ids)) {
        best = std::max(best, static_cast<int>(comp.arc_ids.size()));
      }
      if (best < d_param) {
        fail("extra branching is not a spanning arborescence and its largest component has " +
             std::to_string(best) + " arcs, fewer than " + std::to_string(d_param));
      }
    }
  }

  report.ok = report.failures.empty();
  return report;
}

std::optional<PackingCertificate> solve_exhaustive(const Digraph& d, int k, int d_param) {
  if (k < 0) throw std::invalid_argument("solve_exhaustive: negative k");
  if (d_param < 1) throw std::invalid_argument("solve_exhaustive: d must be positive");
  check_search_size(d.vertex_count(), d.arc_count(), "solve_exhaustive");

  int n = d.vertex_count();
  PackingProblem problem;
  for (int i = 0; i < k; ++i) {
    problem.slots.push_back(SlotSpec{n - 1, VertexSet{}, 0, std::nullopt});
  }
  problem.slots.push_back(SlotSpec{-1, VertexSet{}, minimum_extra_arcs(d_param, n), std::nullopt});

  std::optional<PackingCertificate> result;
  problem.accept = [&](const std::vector<std::vector<int>>& assignment) {
    PackingCertificate cert;
    cert.k = k;
    cert.d = d_param;
    cert.mode = "oracle";
    for (int i = 0; i < k; ++i) {
      const std::vector<int>& arcs = assignment[static_cast<std::size_t>(i)];
      VertexSet heads;
      for (int id : arcs) heads = heads.with(d.arc(id).head);
      cert.trees.push_back(ArborescenceCert{(d.vertices() - heads).least(), arcs});
    }
    const std::vector<int>& extra = assignment[static_cast<std::size_t>(k)];
    RootsOrDefect rb = is_branching(d, extra);
    if (!rb.roots) return false;
    cert.extra = Branching{extra, *rb.roots};
    if (!verify_theorem7(d, k, d_param, cert).ok) return false;
    result = std::move(cert);
    return true;
  };
  find_packing(d, problem);
  return result;
}

SolveOutcome solve_theorem7(const Digraph& d, int k, int d_param, SolveMode mode) {
  if (k < 0) throw std::invalid_argument("solve_theorem7: negative k");
  if (d_param < 1) throw std::invalid_argument("solve_theorem7: d must be positive");
  RatioWitness nu = nu_f_digraph(d);
  Rational threshold = theorem_threshold(k, d_param);
  if (!(nu.value > threshold)) {
    std::string witness;
    for (const VertexSet& x : nu.witness.parts()) {
      witness += witness.empty() ? "{" : " {";
      bool first = true;
      x.for_each([&](int v) {
        if (!first) witness += ",";
        witness += std::to_string(v);
        first = false;
      });
      witness += "}";
    }
    throw std::invalid_argument("solve_theorem7: packing hypothesis fails, nu_f = " +
                                rational_to_string(nu.value) + " vs required > " +
                                rational_to_string(threshold) + ", minimizing subpartition " +
                                witness);
  }
  check_search_size(d.vertex_count(), d.arc_count(), "solve_theorem7");

  SolveOutcome outcome;
  if (mode == SolveMode::oracle) {
    auto cert = solve_exhaustive(d, k, d_param);
    if (!cert) {
      throw std::logic_error("solve_theorem7: exhaustive search found nothing under the hypothesis");
    }
    outcome.certificate = std::move(*cert);
    return outcome;
  }

  try {
    TraceSolver solver(k, d_param, outcome.trace);
    outcome.certificate = solver.solve(d, 0);
    VerifyReport report = verify_theorem7(d, k, d_param, outcome.certificate);
    if (!report.ok) {
      throw Divergence("self-verification failed: " + report.failures.front());
    }
  } catch (const Divergence& diag) {
    std::cerr << "solve_theorem7: construction diverged (" << diag.what()
              << "); falling back to the exhaustive search\n";
    auto cert = solve_exhaustive(d, k, d_param);
    if (!cert) {
      throw std::logic_error("solve_theorem7: exhaustive search found nothing under the hypothesis");
    }
    outcome.certificate = std::move(*cert);
    outcome.used_fallback = true;
    outcome.trace.push_back(TraceEntry{"fallback", 0, d.vertex_count(), 0, {}});
  }
  return outcome;
}

std::optional<MinimalEqualitySet> minimal_violating_set(const Digraph& d, int k,
                                                        std::span<const int> removed_arc_ids,
                                                        std::span<const int> candidate_arc_ids) {
  if (k < 0) throw std::invalid_argument("minimal_violating_set: negative k");
  check_enumeration_size(d.vertex_count(), "minimal_violating_set");
  std::vector<int> removed(removed_arc_ids.begin(), removed_arc_ids.end());
  Digraph d2 = d.remove_arcs(removed);
  std::vector<int> candidates(candidate_arc_ids.begin(), candidate_arc_ids.end());
  std::sort(candidates.begin(), candidates.end());
  for (int id : candidates) d.arc(id);  // validate

  struct Hit {
    VertexSet x;
    int arc;
    SubPartition witness;
  };
  std::vector<Hit> hits;
  auto already_hit = [&hits](VertexSet x) {
    for (const Hit& h : hits) {
      if (h.x == x) return true;
    }
    return false;
  };

  for_each_subpartition(d.vertex_count(), 1, [&](const SubPartition& p) {
    if (indegree_sum(d2, p) != static_cast<long long>(k) * (p.part_count() - 1)) return true;
    for (const VertexSet& x : p.parts()) {
      if (already_hit(x)) continue;
      for (int id : candidates) {
        const Arc& a = d.arc(id);
        if (x.contains(a.head) && !x.contains(a.tail)) {
          hits.push_back(Hit{x, id, p});
          break;
        }
      }
    }
    return true;
  });

  if (hits.empty()) return std::nullopt;

  const Hit* best = nullptr;
  for (const Hit& h : hits) {
    bool minimal = true;
    for (const Hit& other : hits) {
      if (!(other.x == h.x) && other.x.is_subset_of(h.x)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    if (!best || h.x < best->x) best = &h;
  }
  return MinimalEqualitySet{best->x, best->arc, best->witness};
}

PackingCertificate lift_contraction(const Digraph& d, VertexSet w,
                                    const Digraph::Contraction& ctr,
                                    const PackingCertificate& inner,
                                    std::span<const SubArborescence> w_arbs) {
  if (static_cast<int>(w_arbs.size()) != static_cast<int>(inner.trees.size()) + 1) {
    throw std::invalid_argument("lift_contraction: need one spanning arborescence of the "
                                "contracted set per tree plus one for the extra branching");
  }
  for (const SubArborescence& arb : w_arbs) {
    if (!w.contains(arb.root)) {
      throw std::invalid_argument("lift_contraction: arborescence root outside the set");
    }
    if (static_cast<int>(arb.arc_ids.size()) != w.size() - 1) {
      throw std::invalid_argument("lift_contraction: arborescence does not span the set");
    }
    for (int id : arb.arc_ids) {
      const Arc& a = d.arc(id);
      if (!w.contains(a.tail) || !w.contains(a.head)) {
        throw std::invalid_argument("lift_contraction: arborescence arc leaves the set");
      }
    }
  }

  std::unordered_map<int, int> new_to_old;
  for (const auto& [old_id, new_id] : ctr.arc_map) new_to_old.emplace(new_id, old_id);
  std::vector<int> old_vertex(static_cast<std::size_t>(ctr.graph.vertex_count()), -1);
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (!w.contains(v)) old_vertex[static_cast<std::size_t>(ctr.vertex_map[static_cast<std::size_t>(v)])] = v;
  }

  auto lift_arcs = [&](const std::vector<int>& ids) {
    std::vector<int> out;
    for (int id : ids) {
      auto it = new_to_old.find(id);
      if (it == new_to_old.end()) {
        throw std::invalid_argument("lift_contraction: inner certificate uses an unknown arc");
      }
      out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  int merged = ctr.merged_vertex;
  int hosts = static_cast<int>(inner.trees.size()) + 1;
  // entry_head[h] is the original head of the host's arc into the merged
  // vertex, or -1 when the merged vertex is a root inside that host
  std::vector<int> entry_head(static_cast<std::size_t>(hosts), -1);
  auto host_arcs = [&](int h) -> const std::vector<int>& {
    return h < static_cast<int>(inner.trees.size())
               ? inner.trees[static_cast<std::size_t>(h)].arc_ids
               : inner.extra.arc_ids;
  };
  for (int h = 0; h < hosts; ++h) {
    for (int id : host_arcs(h)) {
      auto it = new_to_old.find(id);
      if (it == new_to_old.end()) {
        throw std::invalid_argument("lift_contraction: inner certificate uses an unknown arc");
      }
      if (ctr.graph.arc(id).head == merged) {
        if (entry_head[static_cast<std::size_t>(h)] != -1) {
          throw std::invalid_argument("lift_contraction: host enters the merged vertex twice");
        }
        entry_head[static_cast<std::size_t>(h)] = d.arc(it->second).head;
      }
    }
  }

  std::vector<bool> used(w_arbs.size(), false);
  std::vector<const SubArborescence*> assigned(static_cast<std::size_t>(hosts), nullptr);
  for (int h = 0; h < hosts; ++h) {
    int y = entry_head[static_cast<std::size_t>(h)];
    if (y == -1) continue;
    bool found = false;
    for (std::size_t i = 0; i < w_arbs.size(); ++i) {
      if (!used[i] && w_arbs[i].root == y) {
        used[i] = true;
        assigned[static_cast<std::size_t>(h)] = &w_arbs[i];
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument(
          "lift_contraction: no remaining arborescence rooted at the entry point " +
          std::to_string(y));
    }
  }
  for (int h = 0; h < hosts; ++h) {
    if (assigned[static_cast<std::size_t>(h)]) continue;
    for (std::size_t i = 0; i < w_arbs.size(); ++i) {
      if (!used[i]) {
        used[i] = true;
        assigned[static_cast<std::size_t>(h)] = &w_arbs[i];
        break;
      }
    }
  }

  PackingCertificate out;
  out.k = inner.k;
  out.d = inner.d;
  out.mode = inner.mode;
  for (std::size_t t = 0; t < inner.trees.size(); ++t) {
    const ArborescenceCert& tree = inner.trees[t];
    const SubArborescence& sub = *assigned[t];
    std::vector<int> arcs = lift_arcs(tree.arc_ids);
    arcs.insert(arcs.end(), sub.arc_ids.begin(), sub.arc_ids.end());
    std::sort(arcs.begin(), arcs.end());
    int root = tree.root == merged ? sub.root : old_vertex[static_cast<std::size_t>(tree.root)];
    out.trees.push_back(ArborescenceCert{root, std::move(arcs)});
  }

  const SubArborescence& extra_sub = *assigned[static_cast<std::size_t>(hosts - 1)];
  std::vector<int> extra = lift_arcs(inner.extra.arc_ids);
  extra.insert(extra.end(), extra_sub.arc_ids.begin(), extra_sub.arc_ids.end());
  std::sort(extra.begin(), extra.end());
  VertexSet roots;
  inner.extra.roots.for_each([&](int r) {
    roots = roots.with(r == merged ? extra_sub.root : old_vertex[static_cast<std::size_t>(r)]);
  });
  out.extra = Branching{std::move(extra), roots};
  return out;
}

}  // namespace arborpack
