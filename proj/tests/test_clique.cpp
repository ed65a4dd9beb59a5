#include <catch2/catch_amalgamated.hpp>

#include "mti/clique.hpp"
#include "mti/generate.hpp"
#include "mti/reduction.hpp"

using namespace mti;

namespace {

CsatInstance sample4() {
  CsatInstance c;
  c.var_count = 4;
  c.clauses = {{pos(1), pos(3)}, {neg(3), neg(4)}, {pos(2), neg(3)}, {neg(1), pos(4)}};
  return c;
}

IntersectionGraph random_graph(int n, Rng& rng, int max_weight) {
  std::vector<GraphVertex> vs;
  for (int v = 1; v <= n; ++v)
    vs.push_back(GraphVertex{vertex_tag(v), 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_weight)))});
  IntersectionGraph g = make_graph(std::move(vs));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(100) < 55) g.add_edge(u, v);
  return g;
}

int solution_weight(const IntersectionGraph& g, const CliqueSolution& sol) {
  int w = 0;
  std::vector<int> ids;
  for (const Tag& t : sol.vertices) {
    const int v = g.find_vertex(t);
    REQUIRE(v >= 0);
    ids.push_back(v);
    w += g.vertices[static_cast<std::size_t>(v)].weight;
  }
  REQUIRE(is_clique(g, ids));
  return w;
}

}  // namespace

TEST_CASE("enumeration solver on tiny graphs") {
  const IntersectionGraph empty = make_graph({});
  const CliqueSolution e = max_clique_enum(empty);
  CHECK(e.weight == 0);
  CHECK(e.vertices.empty());

  IntersectionGraph tri = make_graph(
      {GraphVertex{vertex_tag(1), 12}, GraphVertex{vertex_tag(2), 12}, GraphVertex{vertex_tag(3), 1}});
  tri.add_edge(0, 1);
  tri.add_edge(0, 2);
  tri.add_edge(1, 2);
  const CliqueSolution t = max_clique_enum(tri);
  CHECK(t.weight == 25);
  CHECK(t.vertices.size() == 3);
}

TEST_CASE("enumeration refuses oversized graphs") {
  std::vector<GraphVertex> vs;
  for (int v = 1; v <= 21; ++v) vs.push_back(GraphVertex{vertex_tag(v), 1});
  CHECK_THROWS_AS(max_clique_enum(make_graph(std::move(vs))), std::invalid_argument);
}

TEST_CASE("enumeration picks the lexicographically smallest witness") {
  // two maximum cliques {v1, v4} and {v2, v3}; v1 first wins
  IntersectionGraph g = make_graph({GraphVertex{vertex_tag(1), 1}, GraphVertex{vertex_tag(2), 1},
                                    GraphVertex{vertex_tag(3), 1}, GraphVertex{vertex_tag(4), 1}});
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  const CliqueSolution sol = max_clique_enum(g);
  CHECK(sol.weight == 2);
  CHECK(sol.vertices == std::vector<Tag>{vertex_tag(1), vertex_tag(4)});
}

TEST_CASE("solvers agree on the collapsed sample graph") {
  const IntersectionGraph g = collapse_twins(construct_tracks(sample4()));
  CHECK(max_clique_enum(g).weight == 50);
  CHECK(max_clique_bb(g).weight == 50);
}

TEST_CASE("branch and bound on a complete graph") {
  std::vector<GraphVertex> vs;
  for (int v = 1; v <= 10; ++v) vs.push_back(GraphVertex{vertex_tag(v), 1});
  IntersectionGraph g = make_graph(std::move(vs));
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v) g.add_edge(u, v);
  const CliqueSolution sol = max_clique_bb(g);
  CHECK(sol.weight == 10);
  CHECK(sol.optimal);
}

TEST_CASE("engines agree on random weighted graphs") {
  Rng rng(2024);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + static_cast<int>(rng.below(14));
    const IntersectionGraph g = random_graph(n, rng, 12);
    const CliqueSolution en = max_clique_enum(g);
    const CliqueSolution bb = max_clique_bb(g);
    CHECK(en.weight == bb.weight);
    CHECK(solution_weight(g, en) == en.weight);
    CHECK(solution_weight(g, bb) == bb.weight);
  }
}

TEST_CASE("branch and bound matches the clique identity on random instances") {
  for (std::uint32_t seed = 1; seed <= 10; ++seed) {
    const CsatInstance c = gen_csat(6, 8 + static_cast<int>(seed % 4), seed);
    const IntersectionGraph g = collapse_twins(construct_tracks(c));
    CHECK(max_clique_bb(g).weight == 12 * 6 + brute_force_opt(c).best);
  }
}

TEST_CASE("budgeted runs underestimate and say so") {
  Rng rng(99);
  const IntersectionGraph g = random_graph(14, rng, 12);
  const int truth = max_clique_enum(g).weight;
  const CliqueSolution cut = max_clique_bb(g, 2);
  CHECK_FALSE(cut.optimal);
  CHECK(cut.weight <= truth);
  std::vector<int> ids;
  for (const Tag& t : cut.vertices) ids.push_back(g.find_vertex(t));
  CHECK(is_clique(g, ids));

  const CliqueSolution free_run = max_clique_bb(g, 0);
  CHECK(free_run.optimal);
  CHECK(free_run.weight == truth);
  // a budget large enough to finish leaves the result optimal
  const CliqueSolution big = max_clique_bb(g, free_run.nodes_explored + 10);
  CHECK(big.optimal);
  CHECK(big.weight == truth);
}

TEST_CASE("solvers are deterministic") {
  Rng rng(5);
  const IntersectionGraph g = random_graph(12, rng, 5);
  const CliqueSolution a = max_clique_bb(g);
  const CliqueSolution b = max_clique_bb(g);
  CHECK(a.weight == b.weight);
  CHECK(a.vertices == b.vertices);
  const CliqueSolution c = max_clique_enum(g);
  const CliqueSolution d = max_clique_enum(g);
  CHECK(c.vertices == d.vertices);
}
