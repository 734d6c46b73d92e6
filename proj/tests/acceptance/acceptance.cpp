// Acceptance suite: one pass/fail line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "random_instances.hpp"
#include "twistcov/oracles.hpp"
#include "twistcov/theorems.hpp"
#include "twistcov/zeta.hpp"

using namespace twistcov;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

RatPoly at_unit_weights(const RatPoly& p) {
  std::vector<Rational> ones(p.registry() ? p.registry()->size() : 0, Rational(1));
  return RatPoly(p.evaluate(ones));
}

// 1. Random conjugacy certificates.
void criterion1(Outcome& o) {
  std::mt19937 rng(20240601);
  const auto t0 = Clock::now();
  int valid = 0, largest = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = randgen::cover_instance(rng, {6, 10, true, true}, 4);
    largest = std::max(largest, inst.cover.cover.num_vertices());
    const int m = randgen::uniform(rng, 1, 2);
    auto rho = randgen::rational_representation(rng, inst.cosets.cover_presentation.rank(), m);
    auto cert = verify_main(inst.cover, inst.cosets, rho, symbolic_weights(inst.cover.base_graph()));
    valid += cert.valid();
    o.require(cert.valid(), "instance " + std::to_string(trial));
  }
  const double s = seconds_since(t0);
  o.require(s < 60.0, "time budget");
  o.note << valid << "/100 certificates valid in " << s << " s, covers up to " << largest << " vertices";
}

// 2. Charpoly divisibility with trivial rho.
void criterion2(Outcome& o) {
  std::mt19937 rng(20240602);
  int ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = randgen::cover_instance(rng, {6, 10, true, true}, 4, 10);
    Cor1Result r = cor1_certificate(inst.cover, inst.cosets, symbolic_weights(inst.cover.base_graph()));
    ok += r.pass();
    o.require(r.pass(), "instance " + std::to_string(trial));
  }
  o.note << ok << "/100 monic integral quotients (cover operators up to 10x10)";
}

// 3. Laplacian charpoly coefficients against the rooted-forest oracle, exhaustively.
void criterion3(Outcome& o) {
  int graphs = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    const int np = static_cast<int>(pairs.size());
    for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
      if (std::popcount(mask) > 8) continue;
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (int k = 0; k < np; ++k)
        if (mask >> k & 1u) edges.push_back(pairs[k]);
      Graph g = Graph::from_undirected(n, edges);
      if (!is_connected(g)) continue;
      ++graphs;
      RegistryPtr reg = edge_registry(g);
      auto x = symbolic_weights(g, reg);
      RatPoly p = charpoly(laplacian(g, x), reg);
      RatPoly sum(Rational(0));
      for (EdgeId e : g.unoriented_edges()) sum = sum + x[e];
      auto forests = enum_rooted_forests(g, unoriented_weights(g, x));
      const std::string tag = "n=" + std::to_string(n) + " mask=" + std::to_string(mask);
      o.require(lambda_coefficient(p, n) == RatPoly(1).with_registry(p.registry()), tag + " c_n");
      o.require(lambda_coefficient(p, n - 1) == (sum.scaled(Rational(-2))).with_registry(p.registry()), tag + " c_{n-1}");
      o.require(lambda_coefficient(p, 0).is_zero(), tag + " c_0");
      for (int i = 1; i <= n; ++i) {
        RatPoly f = forests.by_components[i].with_registry(p.registry());
        o.require(lambda_coefficient(p, i) == ((n - i) % 2 == 0 ? f : -f), tag + " c_" + std::to_string(i));
      }
    }
  }
  o.note << graphs << " connected simple graphs checked";
}

// 4. Spanning trees and rooted forests on covers.
void criterion4(Outcome& o) {
  CoveringMap p = fixtures::c6_over_c3();
  TreeResult hex = tree_certificates(p, symbolic_weights(p.base_graph()));
  o.require(hex.pass(), "hexagon certificates");
  if (hex.st.quotient && hex.rsf.quotient) {
    o.note << "hexagon: Z_ST quotient " << hex.st.quotient->to_string() << " -> "
           << at_unit_weights(*hex.st.quotient).to_string() << ", Z_RSF quotient at unit weights "
           << at_unit_weights(*hex.rsf.quotient).to_string() << "; ";
    o.require(at_unit_weights(*hex.st.quotient) == RatPoly(2), "Z_ST quotient 2");
    o.require(at_unit_weights(*hex.rsf.quotient) == RatPoly(20), "Z_RSF quotient 20");
  }
  std::mt19937 rng(20240604);
  int ok = 0;
  for (int trial = 0; trial < 25; ++trial) {
    auto inst = randgen::cover_instance(rng, {4, 6, true, true}, 3, 12);
    auto x = symbolic_weights(inst.cover.base_graph());
    TreeResult r = tree_certificates(inst.cover, x);
    auto lifted = lift_weights(inst.cover, x);
    auto trees = enum_spanning_trees(inst.cover.cover, unoriented_weights(inst.cover.cover, lifted));
    const bool oracle = trees.partition.with_registry(r.zst_cover.registry()) == r.zst_cover;
    ok += r.pass() && oracle;
    o.require(r.pass(), "random cover " + std::to_string(trial));
    o.require(oracle, "tree oracle on random cover " + std::to_string(trial));
  }
  o.note << ok << "/25 random covers";
}

// 5. Dimers on the rotation fixture and the square.
void criterion5(Outcome& o) {
  CoveringMap p = fixtures::dimer_cover();
  DimerResult d = dimer_certificate(p, fixtures::dimer_rotation(p.base_graph()), symbolic_weights(p.base_graph()));
  o.require(d.det_factorization, "det factorization");
  o.require(d.division.verified() && d.division.integral, "Z_base | Z_cover");
  o.require(d.kasteleyn_base && d.kasteleyn_cover, "Z^2 = det on the fixture");
  o.note << "Z_base " << d.z_base.to_string() << ", Z_cover " << d.z_cover.to_string() << "; ";
  Graph q4 = fixtures::q4();
  auto ones = constant_weights(q4, Rational(1));
  Orientation orient = kasteleyn_orientation(q4, fixtures::q4_rotation(q4));
  Rational dk = det(adjacency(q4, kasteleyn_weights(q4, orient, ones)));
  auto z = enum_perfect_matchings(q4, unoriented_weights(q4, ones));
  o.require(z.partition * z.partition == dk && dk == 4, "Q4: Z^2 = det = 4");
  o.note << "Q4: Z = " << z.partition.to_string() << ", det = " << dk.to_string();
}

// 6. Torus product formula.
void criterion6(Outcome& o) {
  const auto t0 = Clock::now();
  Graph g = fixtures::b2();
  const Tolerance tol{1e-9, 1e-12};
  double worst = 0;
  for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
    for (const auto& w : {std::vector<Complex>{1.0, 1.0}, std::vector<Complex>{0.5, 0.75}, std::vector<Complex>{2.0 / 3.0, 5.0 / 7.0}}) {
      KosResult r = kos_certificate(g, fixtures::b2_torus_voltage(), weights_from_unoriented(g, w), m, n, tol);
      o.require(r.pass, "m=" + std::to_string(m) + " n=" + std::to_string(n));
      worst = std::max(worst, r.abs_deviation);
    }
  }
  const double s = seconds_since(t0);
  o.require(s < 5.0, "time budget");
  o.note << "max |lhs - rhs| = " << worst << " in " << s << " s";
}

// 7. Line digraph determinant and the Amitsur truncation.
void criterion7(Outcome& o) {
  Graph c3 = fixtures::c3();
  RegistryPtr reg = make_registry({"u"});
  RatPoly u = RatPoly::variable(reg, 0);
  Pi1Presentation pres = make_presentation(c3, 0);
  RatPoly z = l_series_inverse(c3, constant_weights(c3, u), pres, trivial_representation<Rational>(pres.rank()));
  RatPoly one = RatPoly(Rational(1)).with_registry(reg);
  RatPoly expected = (one - u * u * u) * (one - u * u * u);
  o.require(z == expected, "C3 determinant");
  o.note << "C3: " << z.to_string() << "; ";

  std::mt19937 rng(20240607);
  Graph random4 = randgen::connected_graph(rng, {4, 6, true, true});
  while (random4.num_vertices() != 4 || make_presentation(random4, 0).rank() < 2) random4 = randgen::connected_graph(rng, {4, 6, true, true});
  std::vector<Graph> graphs{c3, fixtures::b2(), random4};
  const char* names[] = {"C3", "B2", "random"};
  for (int k = 0; k < 3; ++k) {
    const Graph& g = graphs[k];
    Pi1Presentation gp = make_presentation(g, 0);
    std::vector<Rational> w;
    for (int e = 0; e < g.num_unoriented(); ++e) w.push_back(randgen::small_rational(rng) + Rational(5));
    auto rho = randgen::rational_representation(rng, gp.rank(), 1 + k % 2);
    auto rep = amitsur_check(g, weights_from_unoriented(g, w), gp, rho, 8);
    o.require(rep.pass, std::string("Amitsur on ") + names[k]);
    o.note << names[k] << ": " << rep.num_prime_cycles << " prime cycles; ";
  }
}

// 8. Artin formalism on a Z/4 tower.
void criterion8(Outcome& o) {
  CoveringMap p = fixtures::z4_tower();
  GaloisGroup g = galois_group(p);
  std::vector<int> h{g.identity};
  for (int a = 0; a < g.order(); ++a)
    if (g.element_order(a) == 2) h.push_back(a);
  Tower t = make_tower(p, h);
  ArtinReport r = artin_axioms(t, symbolic_weights(p.base_graph()));
  for (int axiom = 1; axiom <= 4; ++axiom) {
    o.require(r.axiom_passes(axiom), "axiom " + std::to_string(axiom));
    o.note << "axiom " << axiom << (r.axiom_passes(axiom) ? " ok" : " FAILED") << (axiom < 4 ? ", " : "");
  }
}

// 9. Determinant and Pfaffian cross-checks.
void criterion9(Outcome& o) {
  std::mt19937 rng(20240609);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix<Rational> a(5, 5);
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = randgen::small_rational(rng);
    o.require(det_bareiss(a) == det_leibniz(a), "5x5 determinant " + std::to_string(trial));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 * randgen::uniform(rng, 1, 4);
    Matrix<Rational> s = zeros<Rational>(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        s(i, j) = randgen::small_rational(rng);
        s(j, i) = -s(i, j);
      }
    const Rational pf = pfaffian(s);
    o.require(pf * pf == det_bareiss(s), "Pfaffian " + std::to_string(trial));
  }
  o.note << "50 Leibniz comparisons, 50 Pfaffians up to 8x8";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"random conjugacy certificates", criterion1},
      {"charpoly divisibility, trivial rho", criterion2},
      {"Laplacian coefficients vs forests", criterion3},
      {"tree partition functions on covers", criterion4},
      {"dimer factorization", criterion5},
      {"torus product formula", criterion6},
      {"line digraph and Amitsur", criterion7},
      {"Artin axioms on a Z/4 tower", criterion8},
      {"Bareiss/Leibniz and Pfaffians", criterion9},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      fn(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    std::printf("criterion %d: %s  %s  [%.2f s] %s\n", index++, o.pass ? "PASS" : "FAIL", name, seconds_since(t0),
                o.note.str().c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
