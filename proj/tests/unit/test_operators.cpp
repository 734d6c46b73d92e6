#include "doctest.h"
#include "fixtures.hpp"
#include "random_instances.hpp"
#include "twistcov/operators.hpp"
#include "twistcov/oracles.hpp"

using namespace twistcov;

namespace {

template <class S>
Matrix<S> drop_first(const Matrix<S>& m) {
  return m.bottomRightCorner(m.rows() - 1, m.cols() - 1);
}

}  // namespace

TEST_SUITE("operators") {
  TEST_CASE("twisted adjacency places x_e phi_e in block (s(e), t(e))") {
    Graph g = fixtures::k2();
    Matrix<Rational> phi(2, 2);
    phi << Rational(1), Rational(2), Rational(3), Rational(4);
    Connection<Rational> c{2, {phi, inverse(phi)}};
    auto w = constant_weights(g, Rational(5));
    Matrix<Rational> a = twisted_adjacency(g, w, c);
    CHECK(matrix_eq<Rational>(a.block(0, 2, 2, 2), phi * Rational(5)));
    CHECK(matrix_eq<Rational>(a.block(2, 0, 2, 2), inverse(phi) * Rational(5)));
    CHECK(matrix_eq<Rational>(a.block(0, 0, 2, 2), zeros<Rational>(2, 2)));
    CHECK_THROWS_AS(twisted_adjacency(g, constant_weights(fixtures::c3(), Rational(1)), c), Error);
  }

  TEST_CASE("Laplacian rows sum to zero and the extension reproduces it") {
    std::mt19937 rng(71);
    for (int t = 0; t < 15; ++t) {
      Graph g = randgen::connected_graph(rng, {});
      std::vector<Rational> per;
      for (int i = 0; i < g.num_unoriented(); ++i) per.push_back(randgen::small_rational(rng));
      auto w = weights_from_unoriented(g, per);
      Matrix<Rational> lap = laplacian(g, w);
      for (int i = 0; i < lap.rows(); ++i) {
        Rational s(0);
        for (int j = 0; j < lap.cols(); ++j) s += lap(i, j);
        CHECK(s == Rational(0));
      }
      auto ext = laplacian_extension(g, w);
      Matrix<Rational> a = twisted_adjacency(ext.digraph, ext.weights, pullback_connection(ext.origin, trivial_connection<Rational>(g)));
      CHECK(matrix_eq<Rational>(a, lap * Rational(-1)));
    }
  }

  TEST_CASE("weighted matrix-tree theorem") {
    std::mt19937 rng(73);
    for (int t = 0; t < 20; ++t) {
      Graph g = randgen::connected_graph(rng, {5, 8});
      if (g.num_vertices() < 2) continue;
      std::vector<Rational> per;
      for (int i = 0; i < g.num_unoriented(); ++i) per.push_back(Rational(randgen::uniform(rng, 1, 5)));
      auto w = weights_from_unoriented(g, per);
      CHECK(det(drop_first(laplacian(g, w))) == enum_spanning_trees(g, per).partition);
      CHECK(det(Matrix<Rational>(laplacian(g, w) + identity<Rational>(g.num_vertices()))) ==
            enum_rooted_forests(g, per).rsf);
    }
  }

  TEST_CASE("trivial twist agrees with the plain Laplacian") {
    Graph g = fixtures::k4();
    Pi1Presentation p = make_presentation(g, 0);
    auto w = symbolic_weights(g);
    auto c = connection_from_rep(p, trivial_representation<Rational>(p.rank()));
    CHECK(matrix_eq<RatPoly>(twisted_laplacian(g, w, c), laplacian(g, w)));
  }

  TEST_CASE("Laplacian needs symmetric weights") {
    Graph g = fixtures::k2();
    EdgeWeights<Rational> w{{Rational(1), Rational(2)}, WeightSymmetry::None};
    CHECK_THROWS_AS(laplacian(g, w), Error);
  }

  TEST_CASE("Kasteleyn orientations") {
    for (bool square : {true, false}) {
      Graph g = square ? fixtures::q4() : fixtures::dimer_base();
      RotationSystem rot = square ? fixtures::q4_rotation(g) : fixtures::dimer_rotation(g);
      Orientation o = kasteleyn_orientation(g, rot);
      KasteleynReport rep = check_clockwise_odd(g, rot, o);
      CHECK(rep.pass);
      CHECK(rep.euler_characteristic == 2);
      for (const auto& f : rep.faces)
        if (f.bounded) CHECK(f.odd());
    }
  }

  TEST_CASE("Kasteleyn determinant counts matchings of the square") {
    Graph g = fixtures::q4();
    Orientation o = kasteleyn_orientation(g, fixtures::q4_rotation(g));
    auto k = kasteleyn_weights(g, o, constant_weights(g, Rational(1)));
    CHECK(validate_weights(g, k).ok());
    Matrix<Rational> a = adjacency(g, k);
    long long m = enum_perfect_matchings(g, std::vector<Rational>(4, Rational(1))).count;
    CHECK(pfaffian(a).abs() == Rational(static_cast<long>(m)));
  }

  TEST_CASE("non-planar rotations are rejected") {
    Graph g = fixtures::b2();
    RotationSystem rot{{{0, 2, 1, 3}}};
    CHECK(faces(g, rot).euler_characteristic != 2);
    CHECK_THROWS_AS(kasteleyn_orientation(g, rot), Error);
  }

  TEST_CASE("default outer face is the longest walk") {
    FaceStructure fs{{{0, 1}, {2, 3, 4}, {5, 6, 7}}, 2};
    CHECK(default_outer_face(fs) == 1);
  }

  TEST_CASE("line digraph") {
    std::mt19937 rng(79);
    for (int t = 0; t < 15; ++t) {
      Graph g = randgen::connected_graph(rng, {});
      LineDigraph ld = line_digraph(g);
      long long expected = 0;
      for (EdgeId e = 0; e < g.num_edges(); ++e) expected += static_cast<long long>(g.out_edges(g.tgt(e)).size()) - 1;
      CHECK(ld.digraph.num_vertices() == g.num_edges());
      CHECK(static_cast<long long>(ld.arcs.size()) == expected);
      for (std::size_t k = 0; k < ld.arcs.size(); ++k) {
        auto [e, f] = ld.arcs[k];
        CHECK(g.tgt(e) == g.src(f));
        CHECK(f != g.inv(e));
        CHECK(ld.origin[k] == e);
      }
    }
  }
}
