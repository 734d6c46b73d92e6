#include "doctest.h"
#include "fixtures.hpp"
#include "random_instances.hpp"
#include "twistcov/oracles.hpp"
#include "twistcov/theorems.hpp"

using namespace twistcov;

namespace {

RatPoly unit_value(const RatPoly& p) {
  std::vector<Rational> ones(p.registry() ? p.registry()->size() : 0, Rational(1));
  return RatPoly(p.evaluate(ones));
}

}  // namespace

TEST_SUITE("theorems") {
  TEST_CASE("conjugacy on the double cover of the triangle, trivial and random rho") {
    CoveringMap p = fixtures::c6_over_c3();
    CosetData cd = coset_data(p);
    auto x = symbolic_weights(p.base_graph());
    auto cert = verify_main(p, cd, trivial_representation<Rational>(cd.cover_presentation.rank()), x);
    CHECK(cert.psi_invertible);
    CHECK(cert.commutes);

    std::mt19937 rng(7);
    auto rho = randgen::rational_representation(rng, cd.cover_presentation.rank(), 2);
    auto cert2 = verify_main(p, cd, rho, x);
    CHECK(cert2.valid());
    CHECK(cert2.a_base.rows() == 3 * 2 * 2);
  }

  TEST_CASE("conjugacy on random non-normal covers") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
      auto inst = randgen::cover_instance(rng, {4, 6, true, true}, 3);
      auto rho = randgen::rational_representation(rng, inst.cosets.cover_presentation.rank(), randgen::uniform(rng, 1, 2));
      auto cert = verify_main(inst.cover, inst.cosets, rho, symbolic_weights(inst.cover.base_graph()));
      CHECK(cert.valid());
    }
  }

  TEST_CASE("a wrong psi is rejected") {
    CoveringMap p = fixtures::c6_over_c3();
    CosetData cd = coset_data(p);
    std::mt19937 rng(3);
    auto rho = randgen::rational_representation(rng, cd.cover_presentation.rank(), 2);
    InducedRep<Rational> ind = induce(p, cd, rho);
    Matrix<Rational> psi = build_psi(p, cd, ind);
    psi(0, 0) += Rational(1);
    auto x = constant_weights(p.base_graph(), Rational(1));
    Matrix<Rational> a_cover =
        twisted_adjacency(p.cover, lift_weights(p, x), connection_from_rep(cd.cover_presentation, rho));
    Matrix<Rational> a_base = twisted_adjacency(p.base_graph(), x, connection_from_rep(p.base, ind.rep));
    CHECK_FALSE(matrix_eq<Rational>(multiply(psi, a_cover), multiply(a_base, psi)));
  }

  TEST_CASE("cor1 on the hexagon over the triangle") {
    CoveringMap p = fixtures::c6_over_c3();
    Cor1Result r = cor1_certificate(p, coset_data(p), symbolic_weights(p.base_graph()));
    CHECK(r.pass());
    CHECK(r.quotient_degree == 3);
  }

  TEST_CASE("cor2 exact and numeric paths") {
    CoveringMap p = fixtures::c6_over_c3();
    Cor2Result r = cor2_certificate(p, symbolic_weights(p.base_graph()));
    CHECK(r.exact);
    CHECK(r.pass);
    CHECK(r.num_irreducibles == 2);

    CoveringMap p3 = fixtures::cyclic_cover(fixtures::c3(), 3, {1});
    Cor2Result r3 = cor2_certificate(p3, symbolic_weights(p3.base_graph()));
    CHECK_FALSE(r3.exact);
    CHECK(r3.pass);

    CoveringMap t = fixtures::z4_tower();
    Cor2Result rt = cor2_certificate(t, symbolic_weights(t.base_graph()));
    CHECK(rt.exact);
    CHECK(rt.pass);
  }

  TEST_CASE("cor2 rejects an irreducible list of the wrong size") {
    CoveringMap p = fixtures::c6_over_c3();
    std::vector<Representation<Complex>> irr{trivial_representation<Complex>(1)};
    CHECK_THROWS_AS(cor2_certificate(p, symbolic_weights(p.base_graph()), irr), Error);
  }

  TEST_CASE("spanning trees and rooted forests on the hexagon over the triangle") {
    CoveringMap p = fixtures::c6_over_c3();
    auto x = symbolic_weights(p.base_graph());
    TreeResult r = tree_certificates(p, x);
    CHECK(r.pass());
    CHECK(unit_value(*r.st.quotient) == RatPoly(2));
    CHECK(unit_value(*r.rsf.quotient) == RatPoly(20));
    auto oracle = enum_spanning_trees(p.base_graph(), unoriented_weights(p.base_graph(), x));
    CHECK(oracle.partition == r.zst_base.with_registry(oracle.partition.registry()));
  }

  TEST_CASE("dimer fixture") {
    CoveringMap p = fixtures::dimer_cover();
    auto x = symbolic_weights(p.base_graph());
    DimerResult r = dimer_certificate(p, fixtures::dimer_rotation(p.base_graph()), x);
    CHECK(r.det_factorization);
    CHECK(r.kasteleyn_base);
    CHECK(r.kasteleyn_cover);
    CHECK(r.division.verified());
    CHECK(r.pass());
  }

  TEST_CASE("dimer rejects an even degree") {
    CoveringMap p = fixtures::cyclic_cover(fixtures::dimer_base(), 2, {1});
    CHECK_THROWS_AS(dimer_certificate(p, fixtures::dimer_rotation(p.base_graph()), symbolic_weights(p.base_graph())),
                    Error);
  }

  TEST_CASE("torus product formula on B2") {
    Graph g = fixtures::b2();
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
      KosResult r = kos_certificate(g, fixtures::b2_torus_voltage(), constant_weights(g, Complex(0.5, 0.0)), m, n);
      CHECK(r.pass);
    }
    TorusVoltage bad{{{1, 0}, {1, 0}, {0, 1}, {0, -1}}};
    CHECK_THROWS_AS(kos_certificate(g, bad, constant_weights(g, Complex(1.0, 0.0)), 2, 2), Error);
  }
}
