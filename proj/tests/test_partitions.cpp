#include <doctest.h>

#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "arborpack/graph.hpp"
#include "arborpack/ratios.hpp"
#include "arborpack/subpartition.hpp"
#include "test_support.hpp"

using arborpack::Digraph;
using arborpack::Graph;
using arborpack::Rational;
using arborpack::SubPartition;
using arborpack::VertexSet;
using arborpack::enumerate_partitions;
using arborpack::enumerate_subpartitions;
using arborpack::for_each_subpartition;
using arborpack::gamma_f;
using arborpack::hypothesis_holds;
using arborpack::make_rational;
using arborpack::nu_f_digraph;
using arborpack::nu_f_graph;
using arborpack::theorem_threshold;

namespace {

SubPartition parts(std::initializer_list<std::initializer_list<int>> groups) {
  std::vector<VertexSet> sets;
  for (auto g : groups) sets.push_back(VertexSet::of(std::vector<int>(g)));
  return SubPartition(std::move(sets));
}

Rational frac_to_rational(const testsupport::Frac& f) { return make_rational(f.num, f.den); }

}  // namespace

TEST_CASE("subpartitions are kept canonical and reject overlaps") {
  SubPartition p({VertexSet::of({2, 3}), VertexSet::of({0})});
  REQUIRE(p.part_count() == 2);
  CHECK(p.parts()[0] == VertexSet::of({0}));  // ordered by least element
  CHECK(p.parts()[1] == VertexSet::of({2, 3}));
  CHECK(p.support() == VertexSet::of({0, 2, 3}));
  CHECK_FALSE(p.covers(4));
  CHECK(parts({{0}, {1}, {2, 3}}).covers(4));
  CHECK_THROWS_AS(SubPartition({VertexSet::of({0, 1}), VertexSet::of({1})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(SubPartition({VertexSet{}}), std::invalid_argument);
}

TEST_CASE("subpartition enumeration is complete, duplicate-free and canonically ordered") {
  CHECK(enumerate_subpartitions(2, 2) == std::vector<SubPartition>{parts({{0}, {1}})});
  CHECK(enumerate_subpartitions(1, 2).empty());

  auto three = enumerate_subpartitions(3, 2);
  std::vector<SubPartition> expected{
      parts({{1}, {2}}),    parts({{0}, {2}}),    parts({{0, 1}, {2}}),
      parts({{0}, {1}}),    parts({{0, 2}, {1}}), parts({{0}, {1, 2}}),
      parts({{0}, {1}, {2}}),
  };
  CHECK(three == expected);

  // every family appears exactly once, for several sizes
  for (int n = 1; n <= 5; ++n) {
    auto all = enumerate_subpartitions(n, 1);
    std::set<std::vector<VertexSet>> distinct;
    for (const auto& sp : all) {
      auto view = sp.parts();
      distinct.insert(std::vector<VertexSet>(view.begin(), view.end()));
      for (std::size_t i = 0; i < view.size(); ++i)
        for (std::size_t j = i + 1; j < view.size(); ++j)
          CHECK_FALSE(view[i].intersects(view[j]));
    }
    CHECK(distinct.size() == all.size());

    // cross-check the count against an independent labeling walk
    std::size_t labelings = 0;
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> go = [&](int v, int used) {
      if (v == n) {
        labelings += used >= 1 ? 1 : 0;
        return;
      }
      for (int l = 0; l <= used + 1; ++l) {
        label[static_cast<std::size_t>(v)] = l;
        go(v + 1, std::max(used, l));
      }
    };
    go(0, 0);
    CHECK(all.size() == labelings);
  }

  // early stop is honoured
  int seen = 0;
  bool completed = for_each_subpartition(4, 1, [&](const SubPartition&) {
    return ++seen < 3;
  });
  CHECK_FALSE(completed);
  CHECK(seen == 3);
}

TEST_CASE("partition enumeration only yields covering families") {
  auto all = enumerate_partitions(3, 2);
  CHECK(all.size() == 4);
  for (const auto& p : all) CHECK(p.covers(3));
}

TEST_CASE("fractional packing number of a digraph is an exact minimum with witness") {
  auto two = nu_f_digraph(Digraph(2, {{0, 1}, {1, 0}}));
  CHECK(two.value == make_rational(2, 1));
  CHECK(two.witness == parts({{0}, {1}}));

  auto three = nu_f_digraph(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(three.value == make_rational(3, 2));
  CHECK(three.witness == parts({{0}, {1}, {2}}));

  CHECK_THROWS_AS((void)nu_f_digraph(Digraph::empty(1)), std::invalid_argument);

  SUBCASE("witness recomputes to the reported value") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
      Digraph d = testsupport::random_digraph(rng, 2 + static_cast<int>(rng() % 4),
                                              static_cast<int>(rng() % 9));
      auto nu = nu_f_digraph(d);
      long long total = 0;
      for (VertexSet x : nu.witness.parts()) total += d.in_degree_set(x);
      CHECK(nu.value == make_rational(total, nu.witness.part_count() - 1));
    }
  }

  SUBCASE("agrees with the independent oracle") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
      Digraph d = testsupport::random_digraph(rng, 2 + static_cast<int>(rng() % 4),
                                              static_cast<int>(rng() % 10));
      auto oracle = testsupport::oracle_nu_f(d);
      REQUIRE(oracle.has_value());
      CHECK(nu_f_digraph(d).value == frac_to_rational(*oracle));
    }
  }
}

TEST_CASE("fractional packing number of an undirected graph minimizes over full partitions") {
  CHECK(nu_f_graph(Graph(2, {{0, 1}})).value == make_rational(1, 1));

  auto triangle = nu_f_graph(Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(triangle.value == make_rational(3, 2));
  CHECK(triangle.witness == parts({{0}, {1}, {2}}));

  CHECK(nu_f_graph(Graph(2, {{0, 1}, {0, 1}})).value == make_rational(2, 1));
  CHECK_THROWS_AS((void)nu_f_graph(Graph(1, {})), std::invalid_argument);

  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> edges;
    int m = static_cast<int>(rng() % 8);
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (static_cast<int>(edges.size()) < m) {
      int u = pick(rng), v = pick(rng);
      if (u != v) edges.emplace_back(u, v);
    }
    Graph g(n, edges);
    auto oracle = testsupport::oracle_nu_f_graph(g);
    REQUIRE(oracle.has_value());
    CHECK(nu_f_graph(g).value == frac_to_rational(*oracle));
  }
}

TEST_CASE("fractional arboricity is an exact maximum with witness") {
  auto triangle = gamma_f(Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(triangle.value == make_rational(3, 2));
  CHECK(triangle.witness == VertexSet::all(3));

  auto parallel = gamma_f(Graph(2, {{0, 1}, {0, 1}, {0, 1}}));
  CHECK(parallel.value == make_rational(3, 1));

  CHECK_THROWS_AS((void)gamma_f(Graph(1, {})), std::invalid_argument);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> edges;
    int m = 1 + static_cast<int>(rng() % 8);
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (static_cast<int>(edges.size()) < m) {
      int u = pick(rng), v = pick(rng);
      if (u != v) edges.emplace_back(u, v);
    }
    Graph g(n, edges);
    auto expected = testsupport::oracle_gamma_f(g);
    REQUIRE(expected.has_value());
    auto got = gamma_f(g);
    CHECK(got.value == frac_to_rational(*expected));
    // witness attains the maximum
    CHECK(make_rational(g.edges_within(got.witness), got.witness.size() - 1) == got.value);
  }
}

TEST_CASE("packing threshold combines the tree count and the component parameter") {
  CHECK(theorem_threshold(1, 1) == make_rational(1, 1));
  CHECK(theorem_threshold(1, 2) == make_rational(3, 2));
  CHECK(theorem_threshold(2, 3) == make_rational(8, 3));
  CHECK_THROWS_AS((void)theorem_threshold(-1, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)theorem_threshold(0, 0), std::invalid_argument);

  Digraph cycle(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(hypothesis_holds(cycle, 1, 1));        // 3/2 > 1
  CHECK_FALSE(hypothesis_holds(cycle, 1, 2));  // 3/2 = 3/2, not strict
  CHECK(hypothesis_holds(cycle, 0, 2));        // 3/2 > 1/2
}
