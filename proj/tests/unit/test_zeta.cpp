#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "random_instances.hpp"
#include "twistcov/zeta.hpp"

using namespace twistcov;

namespace {

// All edge sequences of length ℓ, closed and non-backtracking cyclically, modulo
// rotation, keeping the primitive ones.
int brute_force_prime_count(const Graph& g, int len) {
  std::set<std::vector<EdgeId>> classes;
  std::vector<EdgeId> seq(len, 0);
  const int ne = g.num_edges();
  long long total = 1;
  for (int i = 0; i < len; ++i) total *= ne;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < len; ++i) {
      seq[i] = static_cast<EdgeId>(c % ne);
      c /= ne;
    }
    bool ok = true;
    for (int i = 0; i < len && ok; ++i) {
      const EdgeId a = seq[i], b = seq[(i + 1) % len];
      ok = g.tgt(a) == g.src(b) && b != g.inv(a);
    }
    if (!ok) continue;
    std::vector<EdgeId> best = seq;
    bool primitive = true;
    for (int r = 1; r < len; ++r) {
      std::vector<EdgeId> rot(seq.begin() + r, seq.end());
      rot.insert(rot.end(), seq.begin(), seq.begin() + r);
      if (rot == seq) primitive = false;
      best = std::min(best, rot);
    }
    if (primitive) classes.insert(best);
  }
  return static_cast<int>(classes.size());
}

int count_of_length(const std::vector<PrimeCycle>& cs, int len) {
  return static_cast<int>(std::count_if(cs.begin(), cs.end(), [&](const PrimeCycle& c) { return c.length() == len; }));
}

RatPoly u_poly(const RegistryPtr& reg, std::initializer_list<std::pair<int, int>> coeff_power) {
  RatPoly p = RatPoly(Rational(0)).with_registry(reg);
  for (auto [c, k] : coeff_power) {
    RatPoly t = RatPoly(Rational(c)).with_registry(reg);
    for (int i = 0; i < k; ++i) t = t * RatPoly::variable(reg, 0);
    p = p + t;
  }
  return p;
}

}  // namespace

TEST_SUITE("zeta") {
  TEST_CASE("prime cycle counts on small graphs") {
    CHECK(prime_cycles(fixtures::c3(), 3).size() == 2);
    CHECK(prime_cycles(fixtures::k2(), 8).empty());
    CHECK(prime_cycles(fixtures::b2(), 1).size() == 4);
    for (const Graph& g : {fixtures::c3(), fixtures::b2(), fixtures::k4()}) {
      auto cs = prime_cycles(g, 5);
      for (int len = 1; len <= 5; ++len) CHECK(count_of_length(cs, len) == brute_force_prime_count(g, len));
    }
  }

  TEST_CASE("prime cycles are closed under reversal") {
    Graph g = fixtures::k4();
    auto cs = prime_cycles(g, 6);
    std::set<std::vector<EdgeId>> all;
    for (const auto& c : cs) all.insert(c.edges);
    for (const auto& c : cs) {
      std::vector<EdgeId> rev;
      for (auto it = c.edges.rbegin(); it != c.edges.rend(); ++it) rev.push_back(g.inv(*it));
      std::vector<EdgeId> best = rev;
      for (std::size_t r = 1; r < rev.size(); ++r) {
        std::vector<EdgeId> rot(rev.begin() + r, rev.end());
        rot.insert(rot.end(), rev.begin(), rev.begin() + r);
        best = std::min(best, rot);
      }
      CHECK(all.count(best) == 1);
    }
  }

  TEST_CASE("L-series inverse of the triangle is (1-u^3)^2") {
    Graph g = fixtures::c3();
    RegistryPtr reg = make_registry({"u"});
    auto x = constant_weights(g, RatPoly::variable(reg, 0));
    Pi1Presentation pres = make_presentation(g, 0);
    RatPoly z = l_series_inverse(g, x, pres, trivial_representation<Rational>(pres.rank()));
    CHECK(z == u_poly(reg, {{1, 0}, {-2, 3}, {1, 6}}));
  }

  TEST_CASE("L-series inverse of K2 is 1") {
    Graph g = fixtures::k2();
    Pi1Presentation pres = make_presentation(g, 0);
    CHECK(l_series_inverse(g, constant_weights(g, Rational(3)), pres, trivial_representation<Rational>(0)) == 1);
  }

  TEST_CASE("base L-series inverse divides the cover one") {
    CoveringMap p = fixtures::c6_over_c3();
    auto x = symbolic_weights(p.base_graph());
    Pi1Presentation cp = make_presentation(p.cover, p.lifted_base);
    RatPoly top = l_series_inverse(p.cover, lift_weights(p, x), cp, trivial_representation<Rational>(cp.rank()));
    RatPoly bottom = l_series_inverse(p.base_graph(), x, p.base, trivial_representation<Rational>(p.base.rank()));
    auto q = top.exact_div(bottom);
    REQUIRE(q);
    CHECK(q->is_integral());
  }

  TEST_CASE("line digraph of a cover covers the line digraph") {
    CHECK(line_digraph_is_cover(fixtures::c6_over_c3()));
    CHECK(line_digraph_is_cover(fixtures::z4_tower()));
    CHECK(line_digraph_is_cover(fixtures::dimer_cover()));
  }

  TEST_CASE("Amitsur truncation") {
    SUBCASE("triangle, trivial rho") {
      Graph g = fixtures::c3();
      Pi1Presentation pres = make_presentation(g, 0);
      auto r = amitsur_check(g, constant_weights(g, Rational(1)), pres, trivial_representation<Rational>(1), 8);
      CHECK(r.pass);
      CHECK(r.cycle_side[3] == 2);
      CHECK(r.cycle_side[6] == 1);
      CHECK(r.cycle_side[4] == 0);
    }
    SUBCASE("B2, rho(a) = -1") {
      Graph g = fixtures::b2();
      Pi1Presentation pres = make_presentation(g, 0);
      auto rho = make_representation<Rational>(1, {Matrix<Rational>::Constant(1, 1, Rational(-1)),
                                                   Matrix<Rational>::Constant(1, 1, Rational(1))});
      auto r = amitsur_check(g, weights_from_unoriented(g, std::vector<Rational>{Rational(1, 2), Rational(2, 3)}), pres,
                             rho, 8);
      CHECK(r.pass);
    }
    SUBCASE("tree has no prime cycles") {
      Graph g = Graph::from_undirected(3, {{0, 1}, {1, 2}});
      Pi1Presentation pres = make_presentation(g, 0);
      auto r = amitsur_check(g, constant_weights(g, Rational(1)), pres, trivial_representation<Rational>(0), 6);
      CHECK(r.pass);
      CHECK(r.num_prime_cycles == 0);
    }
    SUBCASE("budget") {
      Graph g = fixtures::c3();
      Pi1Presentation pres = make_presentation(g, 0);
      CHECK_THROWS_AS(amitsur_check(g, constant_weights(g, Rational(1)), pres, trivial_representation<Rational>(1), 13),
                      Error);
    }
  }

  TEST_CASE("Artin axioms on the Z/4 tower over B2") {
    CoveringMap p = fixtures::z4_tower();
    GaloisGroup g = galois_group(p);
    int half = -1;
    for (int a = 0; a < g.order(); ++a)
      if (a != g.identity && g.element_order(a) == 2) half = a;
    REQUIRE(half >= 0);
    auto x = symbolic_weights(p.base_graph());
    for (std::vector<int> h : {std::vector<int>{g.identity, half}, std::vector<int>{g.identity},
                               std::vector<int>{0, 1, 2, 3}}) {
      Tower t = make_tower(p, h);
      CHECK(t.lower.degree * static_cast<int>(t.subgroup.size()) == 4);
      ArtinReport r = artin_axioms(t, x);
      for (int axiom = 1; axiom <= 4; ++axiom) CHECK(r.axiom_passes(axiom));
    }
    int generator = -1;
    for (int a = 0; a < g.order(); ++a)
      if (g.element_order(a) == 4) generator = a;
    CHECK_THROWS_AS(make_tower(p, {g.identity, generator}), Error);
  }
}
