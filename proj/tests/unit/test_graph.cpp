#include "doctest.h"
#include "fixtures.hpp"
#include "twistcov/graph.hpp"

using namespace twistcov;

TEST_SUITE("graph") {
  TEST_CASE("undirected construction pairs each edge with its reverse") {
    Graph g = fixtures::k4();
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 12);
    CHECK(g.num_unoriented() == 6);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      CHECK(g.inv(g.inv(e)) == e);
      CHECK(g.src(g.inv(e)) == g.tgt(e));
      CHECK(g.unoriented_index(e) == g.unoriented_index(g.inv(e)));
    }
    CHECK(validate_graph(g).ok());
  }

  TEST_CASE("loops are allowed as edge pairs") {
    Graph g = fixtures::b2();
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 4);
    CHECK(g.inv(0) == 1);
    CHECK(validate_graph(g).ok());
  }

  TEST_CASE("invalid involutions are reported") {
    DirectedGraph d(2);
    d.add_edge(0, 1);
    d.add_edge(1, 0);
    CHECK_FALSE(validate_graph(Graph(d, {0, 1})).ok());  // fixed points
    DirectedGraph d2(2);
    d2.add_edge(0, 1);
    d2.add_edge(0, 1);
    CHECK_FALSE(validate_graph(Graph(d2, {1, 0})).ok());  // inverse does not reverse
  }

  TEST_CASE("connectivity") {
    CHECK(is_connected(fixtures::c3()));
    Graph two = Graph::from_undirected(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(two));
    auto comp = connected_components(two);
    CHECK(comp[0] == comp[1]);
    CHECK(comp[2] == comp[3]);
    CHECK(comp[0] != comp[2]);
    DirectedGraph one_way(2);
    one_way.add_edge(0, 1);
    CHECK_FALSE(is_connected(one_way));
    one_way.add_edge(1, 0);
    CHECK(is_connected(one_way));
  }

  TEST_CASE("paths") {
    Graph g = fixtures::c3();
    Path p{0, {0, 2, 4}};
    CHECK(is_valid_path(g, p));
    CHECK(is_loop(g, p));
    Path r = reverse_path(g, p);
    CHECK(path_source(r) == 0);
    CHECK(r.edges == std::vector<EdgeId>{5, 3, 1});
    Path both = concat(g, p, r);
    CHECK(both.length() == 6);
    CHECK_FALSE(is_valid_path(g, Path{0, {0, 0}}));
    CHECK(path_target(g, constant_path(2)) == 2);
  }

  TEST_CASE("face walks and Euler characteristic") {
    Graph q = fixtures::q4();
    FaceStructure fs = faces(q, fixtures::q4_rotation(q));
    CHECK(fs.walks.size() == 2);
    CHECK(fs.euler_characteristic == 2);
    Graph d = fixtures::dimer_base();
    FaceStructure fd = faces(d, fixtures::dimer_rotation(d));
    CHECK(fd.euler_characteristic == 2);
    std::size_t total = 0;
    for (const auto& w : fd.walks) total += w.size();
    CHECK(total == static_cast<std::size_t>(d.num_edges()));
  }

  TEST_CASE("rotation systems must list each outgoing edge once") {
    Graph g = fixtures::c3();
    RotationSystem bad{{{0}, {2, 1}, {4, 3}}};
    CHECK_THROWS_AS(check_rotation(g, bad), Error);
  }

  TEST_CASE("weights") {
    Graph g = fixtures::c3();
    auto w = weights_from_unoriented(g, std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
    CHECK(validate_weights(g, w).ok());
    w.values[0] = Rational(7);
    CHECK_FALSE(validate_weights(g, w).ok());
    CHECK_THROWS_AS(weights_from_unoriented(g, std::vector<Rational>{Rational(1)}), Error);
    auto x = symbolic_weights(g);
    CHECK(x[0] == x[1]);
    CHECK(x[0] != x[2]);
  }
}
