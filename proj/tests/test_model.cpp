#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "parthom/model.hpp"

using namespace parthom;
using namespace testing_support;

TEST_CASE("rational basics") {
  Rational q = parse_rational("-6/4");
  CHECK(to_string(q) == "-3/2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK(to_decimal(Rational(1, 3), 4) == "0.3333");
  CHECK(to_decimal(Rational(-7, 2), 2) == "-3.50");
  CHECK(power(Rational(2, 3), 3) == Rational(8, 27));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational("1/"));
}

TEST_CASE("multigraph degrees count loops twice") {
  Multigraph g(2, {{0, 0}, {0, 1}});
  auto d = g.degrees();
  CHECK(d[0] == 3);
  CHECK(d[1] == 1);
  CHECK_THROWS(Multigraph(2, {{0, 2}}));
}

TEST_CASE("stretch") {
  Multigraph e(2, {{0, 1}});
  CHECK(stretch(e, 1) == e);
  CHECK(stretch(e, 2) == Multigraph(3, {{0, 2}, {2, 1}}));
  Multigraph tri = cycle(3);
  Multigraph s = stretch(tri, 2);
  CHECK(s.vertex_count() == 6);
  CHECK(s.edge_count() == 6);
  auto d = s.degrees();
  CHECK(std::all_of(d.begin(), d.end(), [](std::size_t x) { return x == 2; }));
  CHECK(graph_components(s).size() == 1);
  // a stretched loop becomes a cycle through fresh vertices
  Multigraph loop(1, {{0, 0}});
  Multigraph sl = stretch(loop, 3);
  CHECK(sl.vertex_count() == 3);
  CHECK(sl.loop_count() == 0);
  CHECK(sl.degrees() == std::vector<std::size_t>{2, 2, 2});
}

TEST_CASE("stretch counts") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    Multigraph g = random_multigraph(rng, 6, 8);
    std::size_t s = 1 + rng() % 4;
    Multigraph h = stretch(g, s);
    CHECK(h.vertex_count() == g.vertex_count() + (s - 1) * g.edge_count());
    CHECK(h.edge_count() == s * g.edge_count());
  }
}

TEST_CASE("thicken") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 50; ++it) {
    Multigraph g = random_multigraph(rng, 6, 8);
    CHECK(thicken(g, 1) == g);
    std::size_t t = 1 + rng() % 4;
    auto d = g.degrees();
    auto dt = thicken(g, t).degrees();
    for (std::size_t v = 0; v < d.size(); ++v) CHECK(dt[v] == t * d[v]);
  }
  CHECK(thicken(Multigraph(2, {{0, 1}}), 3) == Multigraph(2, {{0, 1}, {1, 0}, {0, 1}}));
  Multigraph two_loops = thicken(Multigraph(1, {{0, 0}}), 2);
  CHECK(two_loops.edge_count() == 2);
  CHECK(two_loops.degrees()[0] == 4);
}

TEST_CASE("graph components") {
  CHECK(graph_components(Multigraph(3)).size() == 3);
  CHECK(graph_components(cycle(3)).size() == 1);
  Multigraph g(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}});
  auto comps = graph_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].graph.vertex_count() == 3);
  CHECK(comps[1].graph.vertex_count() == 2);
  CHECK(comps[1].to_original == std::vector<std::size_t>{3, 4});

  std::mt19937_64 rng(13);
  for (int it = 0; it < 50; ++it) {
    Multigraph h = random_multigraph(rng, 7, 6);
    std::size_t nv = 0, ne = 0;
    std::vector<int> seen(h.vertex_count(), 0);
    for (const auto& c : graph_components(h)) {
      nv += c.graph.vertex_count();
      ne += c.graph.edge_count();
      for (auto v : c.to_original) seen[v]++;
      CHECK(is_connected(c.graph));
    }
    CHECK(nv == h.vertex_count());
    CHECK(ne == h.edge_count());
    CHECK(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));
  }
}

TEST_CASE("bipartition") {
  auto e = bipartition(Multigraph(2, {{0, 1}}));
  REQUIRE(e);
  CHECK(e->u == std::vector<std::size_t>{0});
  CHECK(e->w == std::vector<std::size_t>{1});
  CHECK(!bipartition(cycle(3)));
  auto c4 = bipartition(cycle(4));
  REQUIRE(c4);
  CHECK(c4->u == std::vector<std::size_t>{0, 2});
  CHECK(c4->w == std::vector<std::size_t>{1, 3});
  CHECK(!bipartition(Multigraph(2, {{0, 1}, {1, 1}})));
  CHECK_THROWS(bipartition(Multigraph(2)));
  auto single = bipartition(Multigraph(1));
  REQUIRE(single);
  CHECK(single->u.size() == 1);
  CHECK(single->w.empty());
}

TEST_CASE("matrix helpers") {
  SymMatrix h2 = mat({{1, 1}, {1, -1}});
  Matrix k = kron(h2.matrix(), h2.matrix());
  CHECK(k.rows() == 4);
  CHECK(k(3, 3) == 1);
  CHECK(k(1, 2) == 1);
  CHECK(k(1, 3) == -1);
  CHECK(matrix_rank(k) == 4);
  CHECK(matrix_rank(mat({{1, 2}, {2, 4}}).matrix()) == 1);
  CHECK_THROWS(SymMatrix(Matrix(2, 2, {1, 2, 3, 4})));
}
