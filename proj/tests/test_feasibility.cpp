#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "arborpack/feasibility.hpp"
#include "arborpack/graph.hpp"
#include "arborpack/ratios.hpp"
#include "test_support.hpp"

using arborpack::BranchingSpec;
using arborpack::Digraph;
using arborpack::VertexSet;
using arborpack::check_k_plus_extra;
using arborpack::check_pack_branching;
using arborpack::check_spanning_arborescences;
using arborpack::hypothesis_holds;

namespace {

arborpack::SubPartition both_singletons() {
  return arborpack::SubPartition({VertexSet::of({0}), VertexSet::of({1})});
}

}  // namespace

TEST_CASE("branching-packing feasibility reports the first violated inequality") {
  SUBCASE("one spanning arborescence in a 2-cycle is feasible") {
    Digraph d(2, {{0, 1}, {1, 0}});
    std::vector<BranchingSpec> specs{{1, VertexSet{}}};
    CHECK_FALSE(check_pack_branching(d, specs).has_value());
  }

  SUBCASE("an arcless digraph cannot host a spanning arborescence") {
    Digraph d = Digraph::empty(2);
    std::vector<BranchingSpec> specs{{1, VertexSet{}}};
    auto violation = check_pack_branching(d, specs);
    REQUIRE(violation.has_value());
    CHECK(violation->inequality == 1);
    CHECK(violation->branching_indices == std::vector<int>{1});
    CHECK(violation->parts == both_singletons());
    CHECK(violation->lhs == 0);
    CHECK(violation->rhs == 1);
  }

  SUBCASE("asking every vertex to be a root is always feasible") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      int n = 2 + static_cast<int>(rng() % 4);
      Digraph d = testsupport::random_digraph(rng, n, static_cast<int>(rng() % 7));
      std::vector<BranchingSpec> specs{{n, VertexSet::all(n)}};
      CHECK_FALSE(check_pack_branching(d, specs).has_value());
    }
  }

  SUBCASE("spec validation") {
    Digraph d = Digraph::empty(2);
    std::vector<BranchingSpec> too_many_forced{{1, VertexSet::all(2)}};
    CHECK_THROWS_AS((void)check_pack_branching(d, too_many_forced), std::invalid_argument);
    std::vector<BranchingSpec> empty_specs;
    CHECK_THROWS_AS((void)check_pack_branching(d, empty_specs), std::invalid_argument);
  }
}

TEST_CASE("tree-plus-branching feasibility distinguishes the two bound families") {
  SUBCASE("2-cycle supports one tree plus a one-root branching") {
    Digraph d(2, {{0, 1}, {1, 0}});
    CHECK_FALSE(check_k_plus_extra(d, 1, 1, VertexSet{}).has_value());
  }

  SUBCASE("a single arc fails the root-budget bound") {
    Digraph d(2, {{0, 1}});
    auto violation = check_k_plus_extra(d, 1, 1, VertexSet{});
    REQUIRE(violation.has_value());
    CHECK(violation->inequality == 3);
    CHECK(violation->parts == both_singletons());
    CHECK(violation->lhs == 1);
    CHECK(violation->rhs == 2);
  }

  SUBCASE("zero trees with an all-root branching is always feasible") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      int n = 2 + static_cast<int>(rng() % 4);
      Digraph d = testsupport::random_digraph(rng, n, static_cast<int>(rng() % 7));
      CHECK_FALSE(check_k_plus_extra(d, 0, n, VertexSet{}).has_value());
    }
  }

  SUBCASE("more forced roots than the budget is rejected") {
    Digraph d(2, {{0, 1}});
    CHECK_THROWS_AS((void)check_k_plus_extra(d, 1, 1, VertexSet::all(2)),
                    std::invalid_argument);
  }

  SUBCASE("the packing hypothesis implies feasibility at the derived root budget") {
    std::mt19937_64 rng(7);
    int checked = 0;
    while (checked < 40) {
      int n = 2 + static_cast<int>(rng() % 5);
      Digraph d = testsupport::random_digraph(rng, n, 1 + static_cast<int>(rng() % 9));
      for (auto [k, dp] : {std::pair{0, 2}, std::pair{1, 1}, std::pair{1, 2}}) {
        if (!hypothesis_holds(d, k, dp)) continue;
        int c = (n - 2) / dp + 1;  // ceil((n-1)/dp)
        CHECK_FALSE(check_k_plus_extra(d, k, c, VertexSet{}).has_value());
        ++checked;
      }
    }
  }

  SUBCASE("adding an arc never breaks feasibility") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
      int n = 2 + static_cast<int>(rng() % 4);
      Digraph d = testsupport::random_digraph(rng, n, static_cast<int>(rng() % 8));
      int k = static_cast<int>(rng() % 2);
      int c = 1 + static_cast<int>(rng() % n);
      if (check_k_plus_extra(d, k, c, VertexSet{}).has_value()) continue;
      std::uniform_int_distribution<int> pick(0, n - 1);
      int u = pick(rng), v = pick(rng);
      if (u == v) v = (v + 1) % n;
      Digraph grown = d.add_arcs({{u, v}});
      CHECK_FALSE(check_k_plus_extra(grown, k, c, VertexSet{}).has_value());
    }
  }
}

TEST_CASE("spanning-arborescence feasibility is the fractional bound") {
  Digraph two_cycle(2, {{0, 1}, {1, 0}});
  CHECK_FALSE(check_spanning_arborescences(two_cycle, 2).has_value());

  Digraph three_cycle(3, {{0, 1}, {1, 2}, {2, 0}});
  auto violation = check_spanning_arborescences(three_cycle, 2);
  REQUIRE(violation.has_value());
  CHECK(violation->inequality == 2);
  // the violation carries the minimizing subpartition
  CHECK(violation->parts ==
        arborpack::SubPartition({VertexSet::of({0}), VertexSet::of({1}), VertexSet::of({2})}));
  CHECK(violation->lhs == 3);
  CHECK(violation->rhs == 4);

  CHECK_FALSE(check_spanning_arborescences(three_cycle, 0).has_value());
  CHECK_THROWS_AS((void)check_spanning_arborescences(Digraph::empty(1), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)check_spanning_arborescences(two_cycle, -1), std::invalid_argument);
}
