#include "doctest.h"
#include "fixtures.hpp"
#include "random_instances.hpp"
#include "twistcov/representation.hpp"

using namespace twistcov;

namespace {

template <class S>
S trace(const Matrix<S>& m) {
  S t(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

FreeWord random_word(std::mt19937& rng, int rank, int len) {
  FreeWord w;
  for (int k = 0; k < len; ++k) w.letters.push_back({randgen::uniform(rng, 0, rank - 1), rng() % 2 ? 1 : -1});
  return reduce_word(w);
}

}  // namespace

TEST_SUITE("representation") {
  TEST_CASE("words map homomorphically") {
    std::mt19937 rng(43);
    auto rho = randgen::rational_representation(rng, 3, 2);
    CHECK(validate_representation(rho).ok());
    for (int t = 0; t < 10; ++t) {
      FreeWord a = random_word(rng, 3, 4), b = random_word(rng, 3, 4);
      CHECK(matrix_eq<Rational>(rep_of_word(rho, multiply_words(a, b)),
                                multiply(rep_of_word(rho, a), rep_of_word(rho, b))));
    }
    CHECK_THROWS_AS(make_representation<Rational>(2, {zeros<Rational>(2, 2)}), Error);
    CHECK_THROWS_AS(make_representation<Rational>(2, {identity<Rational>(3)}), Error);
  }

  TEST_CASE("connection monodromy along a loop equals the word image") {
    std::mt19937 rng(47);
    for (int t = 0; t < 15; ++t) {
      Graph g = randgen::connected_graph(rng, {});
      Pi1Presentation p = make_presentation(g, 0);
      if (p.rank() == 0) continue;
      auto rho = randgen::rational_representation(rng, p.rank(), 2);
      Connection<Rational> c = connection_from_rep(p, rho);
      CHECK(validate_connection(g, c).ok());
      FreeWord w = random_word(rng, p.rank(), 5);
      CHECK(matrix_eq<Rational>(monodromy(g, c, word_to_loop(p, w)), rep_of_word(rho, w)));
    }
  }

  TEST_CASE("gauge transformations conjugate the monodromy") {
    std::mt19937 rng(53);
    Graph g = fixtures::k4();
    Pi1Presentation p = make_presentation(g, 0);
    auto rho = randgen::rational_representation(rng, p.rank(), 2);
    Connection<Rational> c = connection_from_rep(p, rho);
    std::vector<Matrix<Rational>> h;
    for (int v = 0; v < g.num_vertices(); ++v) h.push_back(randgen::invertible_matrix(rng, 2));
    Connection<Rational> c2 = apply_gauge(g, c, h);
    CHECK(validate_connection(g, c2).ok());
    Path loop = word_to_loop(p, FreeWord{{{0, 1}, {2, -1}, {1, 1}}});
    CHECK(matrix_eq<Rational>(monodromy(g, c2, loop),
                              multiply(multiply(h[0], monodromy(g, c, loop)), inverse(h[0]))));
  }

  TEST_CASE("inducing the trivial character gives the permutation action") {
    std::mt19937 rng(59);
    for (int t = 0; t < 20; ++t) {
      auto inst = randgen::cover_instance(rng, {}, 4);
      const CoveringMap& p = inst.cover;
      const CosetData& cd = inst.cosets;
      auto ind = induce(p, cd, trivial_representation<Rational>(cd.cover_presentation.rank()));
      CHECK(validate_representation(ind.rep).ok());
      CHECK(ind.rep.degree == p.degree);
      for (int g = 0; g < p.base.rank(); ++g) {
        int fixed = 0;
        for (Vertex s : cd.fiber) fixed += left_action(p, generator_word(g), s) == s;
        CHECK(trace(ind.rep.gens[g]) == Rational(fixed));
      }
    }
  }

  TEST_CASE("induced representation degree and validity for random rho") {
    std::mt19937 rng(61);
    for (int t = 0; t < 10; ++t) {
      auto inst = randgen::cover_instance(rng, {4, 6}, 3);
      auto rho = randgen::rational_representation(rng, inst.cosets.cover_presentation.rank(), 2);
      auto ind = induce(inst.cover, inst.cosets, rho);
      CHECK(ind.rep.degree == 2 * inst.cover.degree);
      CHECK(validate_representation(ind.rep).ok());
    }
  }

  TEST_CASE("zero-sum complement splits off the trivial summand") {
    std::mt19937 rng(67);
    for (int t = 0; t < 15; ++t) {
      auto inst = randgen::cover_instance(rng, {}, 4);
      auto ind = induce(inst.cover, inst.cosets, trivial_representation<Rational>(inst.cosets.cover_presentation.rank()));
      auto comp = zero_sum_complement(ind);
      CHECK(comp.degree == inst.cover.degree - 1);
      CHECK(validate_representation(comp).ok());
      for (int g = 0; g < comp.rank(); ++g) CHECK(trace(comp.gens[g]) + Rational(1) == trace(ind.rep.gens[g]));
    }
  }

  TEST_CASE("characters of an abelian group are orthogonal") {
    GaloisGroup g = galois_group(fixtures::z4_tower());
    auto chars = characters_of(g);
    REQUIRE(static_cast<int>(chars.size()) == g.order());
    for (std::size_t a = 0; a < chars.size(); ++a) {
      CHECK(chars[a].is_gaussian());
      for (std::size_t b = 0; b < chars.size(); ++b) {
        Complex s = 0;
        for (int x = 0; x < g.order(); ++x)
          s += character_value(chars[a].angle[x]) * std::conj(character_value(chars[b].angle[x]));
        CHECK(approx_equal(s, Complex(a == b ? g.order() : 0, 0)));
      }
      for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
          CHECK(approx_equal(character_value(chars[a].angle[g.multiply(x, y)]),
                             character_value(chars[a].angle[x]) * character_value(chars[a].angle[y])));
    }
  }

  TEST_CASE("exact character values") {
    CHECK(*character_value_exact(Rational(1, 4)) == Gaussian::i());
    CHECK(*character_value_exact(Rational(1, 2)) == Gaussian(-1));
    CHECK_FALSE(character_value_exact(Rational(1, 3)));
    CHECK(approx_equal(character_value(Rational(1, 3)), std::polar(1.0, 2.0 * M_PI / 3.0)));
  }

  TEST_CASE("regular representation") {
    CoveringMap p = fixtures::z4_tower();
    GaloisGroup g = galois_group(p);
    auto reg = regular_representation<Rational>(p, g);
    CHECK(validate_representation(reg).ok());
    for (int gen = 0; gen < p.base.rank(); ++gen)
      CHECK(trace(reg.gens[gen]) == Rational(g.generator_images[gen] == g.identity ? 4 : 0));
  }

  TEST_CASE("direct sums") {
    auto a = trivial_representation<Rational>(2, 1);
    auto b = trivial_representation<Rational>(2, 3);
    CHECK(direct_sum(a, b).degree == 4);
    CHECK_THROWS_AS(direct_sum(a, trivial_representation<Rational>(3, 1)), Error);
  }
}
