#include "twistcov/theorems.hpp"

#include <numbers>
#include <random>

#include "twistcov/oracles.hpp"

namespace twistcov {

namespace {

RegistryPtr registry_of(const EdgeWeights<RatPoly>& x) {
  RegistryPtr reg;
  for (const auto& w : x.values) reg = merge_registries(reg, w.registry());
  return reg;
}

Representation<Rational> complement_representation(const CoveringMap& p, const CosetData& cd) {
  InducedRep<Rational> ind = induce(p, cd, trivial_representation<Rational>(cd.cover_presentation.rank()));
  return zero_sum_complement(ind);
}

std::vector<Complex> sample_edge_values(const EdgeWeights<RatPoly>& x, std::mt19937& rng) {
  RegistryPtr reg = registry_of(x);
  const std::size_t nv = reg ? reg->size() : 0;
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> values;
  for (std::size_t i = 0; i < nv; ++i) values.emplace_back(num(rng), den(rng));
  std::vector<Complex> out;
  for (const auto& w : x.values) out.push_back(Complex(w.evaluate(values).to_double(), 0.0));
  return out;
}

Complex char_det(const Matrix<Complex>& a, Complex lambda) {
  Matrix<Complex> m = -a;
  for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, i) += lambda;
  return det_lu(m);
}

// Compares det(λ − A_cover) with Π det(λ − A^ρ)^{deg ρ} at sampled weights and at
// N+1 values of λ, N the cover operator size.
Cor2Result numeric_factorization(const CoveringMap& p, const EdgeWeights<RatPoly>& x,
                                 const std::vector<Representation<Complex>>& reps, Tolerance tol, unsigned seed) {
  Cor2Result res;
  res.exact = false;
  res.num_irreducibles = static_cast<int>(reps.size());
  res.pass = true;
  std::mt19937 rng(seed);
  for (int sample = 0; sample < 3; ++sample) {
    std::vector<Complex> xv = sample_edge_values(x, rng);
    EdgeWeights<Complex> xb{xv, WeightSymmetry::Symmetric};
    Matrix<Complex> a_cover = adjacency(p.cover, lift_weights(p, xb));
    std::vector<Matrix<Complex>> a_reps;
    for (const auto& r : reps) a_reps.push_back(twisted_adjacency(p.base_graph(), xb, connection_from_rep(p.base, r)));
    const int npts = static_cast<int>(a_cover.rows()) + 1;
    for (int k = 0; k < npts; ++k) {
      const Complex lambda = 0.3 + std::polar(1.7, 2.0 * std::numbers::pi * (k + 0.25) / npts);
      const Complex lhs = char_det(a_cover, lambda);
      Complex rhs(1.0, 0.0);
      for (std::size_t i = 0; i < reps.size(); ++i) rhs *= std::pow(char_det(a_reps[i], lambda), reps[i].degree);
      const double scale = std::max(std::abs(lhs), std::abs(rhs));
      const double dev = std::abs(lhs - rhs);
      if (scale > 0) res.max_relative_deviation = std::max(res.max_relative_deviation, dev / scale);
      if (dev > tol.atol + tol.rtol * scale) res.pass = false;
    }
  }
  return res;
}

GaussPoly to_gauss(const RatPoly& p) { return GaussPoly(p); }

}  // namespace

Cor1Result cor1_certificate(const CoveringMap& p, const CosetData& cd, const EdgeWeights<RatPoly>& x) {
  require_connected_cover(p);
  RegistryPtr reg = registry_of(x);
  Matrix<RatPoly> a_cover = adjacency(p.cover, lift_weights(p, x));
  Matrix<RatPoly> a_base = adjacency(p.base_graph(), x);
  RatPoly pc = charpoly(a_cover, reg);
  RatPoly pb = charpoly(a_base, reg);
  Cor1Result res{divide_certificate(pc, pb), RatPoly{}, false, false, 0};
  Representation<Rational> comp = complement_representation(p, cd);
  Matrix<RatPoly> a_comp = twisted_adjacency(p.base_graph(), x, connection_from_rep(p.base, comp));
  res.complement_charpoly = charpoly(a_comp, reg);
  if (res.division.quotient) {
    const RatPoly& q = *res.division.quotient;
    const std::size_t lam = lambda_index(pc);
    res.quotient_degree = q.degree_in(lam);
    res.quotient_monic = res.quotient_degree == static_cast<int>(a_cover.rows() - a_base.rows()) &&
                         q.coefficient_of(lam, res.quotient_degree) == RatPoly(1);
    res.quotient_matches_complement = q == res.complement_charpoly;
  }
  return res;
}

Cor2Result cor2_certificate(const CoveringMap& p, const EdgeWeights<RatPoly>& x, Tolerance tol, unsigned seed) {
  GaloisGroup g = galois_group(p);
  std::vector<Character> chars = abelian_characters(p, g);
  const bool exact = std::all_of(chars.begin(), chars.end(), [](const Character& c) { return c.is_gaussian(); });
  if (!exact) {
    std::vector<Representation<Complex>> reps;
    for (const auto& chi : chars) reps.push_back(character_representation(p, g, chi));
    return numeric_factorization(p, x, reps, tol, seed);
  }
  RegistryPtr reg = registry_of(x);
  EdgeWeights<GaussPoly> xg{{}, x.symmetry};
  for (const auto& w : x.values) xg.values.push_back(to_gauss(w));
  Cor2Result res;
  res.exact = true;
  res.num_irreducibles = static_cast<int>(chars.size());
  res.cover_charpoly = charpoly(adjacency(p.cover, lift_weights(p, xg)), reg);
  GaussPoly product = GaussPoly::term(res.cover_charpoly->registry(), Monomial::one(), Gaussian(1));
  for (const auto& chi : chars) {
    Representation<Gaussian> r = character_representation_exact(p, g, chi);
    product *= charpoly(twisted_adjacency(p.base_graph(), xg, connection_from_rep(p.base, r)), reg);
  }
  res.product = product;
  res.pass = *res.cover_charpoly == product;
  return res;
}

Cor2Result cor2_certificate(const CoveringMap& p, const EdgeWeights<RatPoly>& x,
                            const std::vector<Representation<Complex>>& irreducibles, Tolerance tol, unsigned seed) {
  GaloisGroup g = galois_group(p);
  long total = 0;
  for (const auto& r : irreducibles) total += static_cast<long>(r.degree) * r.degree;
  if (total != g.order())
    throw Error(Errc::IrreducibleCountMismatch, "sum of squared degrees " + std::to_string(total) +
                                                    " differs from the group order " + std::to_string(g.order()));
  return numeric_factorization(p, x, irreducibles, tol, seed);
}

RatPoly lambda_coefficient(const RatPoly& p, int i) { return p.coefficient_of(lambda_index(p), i); }

RatPoly zst_from_charpoly(const RatPoly& p, int n, bool* integral) {
  RatPoly c1 = lambda_coefficient(p, 1);
  Rational factor = Rational((n - 1) % 2 == 0 ? 1 : -1, n);
  RatPoly z = c1.scaled(factor);
  if (integral) *integral = z.is_integral();
  return z;
}

RatPoly zrsf_from_charpoly(const RatPoly& p, int n) {
  RatPoly v = p.substitute(lambda_index(p), Rational(-1));
  return n % 2 == 0 ? v : -v;
}

TreeResult tree_certificates(const CoveringMap& p, const EdgeWeights<RatPoly>& x) {
  require_connected_cover(p);
  RegistryPtr reg = registry_of(x);
  TreeResult res;
  const int nc = p.cover.num_vertices();
  const int nb = p.base_graph().num_vertices();
  res.charpoly_cover = charpoly(laplacian(p.cover, lift_weights(p, x)), reg);
  res.charpoly_base = charpoly(laplacian(p.base_graph(), x), reg);
  bool ic = false, ib = false;
  res.zst_cover = zst_from_charpoly(res.charpoly_cover, nc, &ic);
  res.zst_base = zst_from_charpoly(res.charpoly_base, nb, &ib);
  res.zst_integral = ic && ib;
  res.zrsf_cover = zrsf_from_charpoly(res.charpoly_cover, nc);
  res.zrsf_base = zrsf_from_charpoly(res.charpoly_base, nb);
  res.st = divide_certificate(res.zst_cover, res.zst_base);
  res.rsf = divide_certificate(res.zrsf_cover, res.zrsf_base);
  return res;
}

DimerResult dimer_certificate(const CoveringMap& p, const RotationSystem& base_rotation,
                              const EdgeWeights<RatPoly>& x, std::optional<int> outer_face) {
  if (p.degree % 2 == 0) throw Error(Errc::EvenDegree, "dimer factorization needs an odd degree cover");
  require_connected_cover(p);
  if (!is_normal(p).normal) throw Error(Errc::NotNormal, "dimer factorization needs a cyclic (normal) cover");
  FaceStructure fs = faces(p.base_graph(), base_rotation);
  if (fs.euler_characteristic != 2) throw Error(Errc::NotPlanarQuotient, "base rotation system is not planar");
  DimerResult res;
  res.orientation = kasteleyn_orientation(p.base_graph(), base_rotation, outer_face);
  EdgeWeights<RatPoly> xk = kasteleyn_weights(p.base_graph(), res.orientation, x);
  RegistryPtr reg = registry_of(x);
  Matrix<RatPoly> a_base = adjacency(p.base_graph(), xk);
  Matrix<RatPoly> a_cover = adjacency(p.cover, lift_weights(p, xk));
  CosetData cd = coset_data(p);
  Matrix<RatPoly> a_comp =
      twisted_adjacency(p.base_graph(), xk, connection_from_rep(p.base, complement_representation(p, cd)));
  res.det_base = det(a_base).with_registry(reg);
  res.det_cover = det(a_cover).with_registry(reg);
  res.det_complement = det(a_comp).with_registry(reg);
  res.det_factorization = res.det_cover == res.det_base * res.det_complement;
  EdgeWeights<RatPoly> x_cover = lift_weights(p, x);
  res.z_base = enum_perfect_matchings(p.base_graph(), unoriented_weights(p.base_graph(), x)).partition.with_registry(reg);
  res.z_cover = enum_perfect_matchings(p.cover, unoriented_weights(p.cover, x_cover)).partition.with_registry(reg);
  res.division = divide_certificate(res.z_cover, res.z_base);
  res.kasteleyn_base = res.z_base * res.z_base == res.det_base;
  res.kasteleyn_cover = res.z_cover * res.z_cover == res.det_cover;
  return res;
}

CoveringMap torus_cover(const Pi1Presentation& base, const TorusVoltage& volt, int m, int n) {
  const Graph& g = base.graph;
  if (static_cast<int>(volt.voltage.size()) != g.num_edges())
    throw Error(Errc::SemanticError, "torus voltage needs one entry per directed edge");
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = volt.voltage[e];
    auto [ai, bi] = volt.voltage[g.inv(e)];
    if (ai != -a || bi != -b) throw Error(Errc::VoltageNotAntisymmetric, "voltage of e" + std::to_string(e));
  }
  if (m < 1 || n < 1) throw Error(Errc::SemanticError, "torus cover dimensions must be positive");
  auto mod = [](int a, int k) { return ((a % k) + k) % k; };
  auto vid = [&](Vertex v, int i, int j) { return (v * n + i) * m + j; };
  auto eid = [&](EdgeId e, int i, int j) { return (e * n + i) * m + j; };
  DirectedGraph dg(g.num_vertices() * n * m);
  std::vector<EdgeId> inverse(static_cast<std::size_t>(g.num_edges()) * n * m);
  std::vector<Vertex> vmap(dg.num_vertices());
  std::vector<EdgeId> emap(inverse.size());
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) vmap[vid(v, i, j)] = v;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = volt.voltage[e];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) {
        const int ti = mod(i + a, n), tj = mod(j + b, m);
        dg.add_edge(vid(g.src(e), i, j), vid(g.tgt(e), ti, tj));
        emap[eid(e, i, j)] = e;
        inverse[eid(e, i, j)] = eid(g.inv(e), ti, tj);
      }
  }
  return make_covering(Graph(std::move(dg), std::move(inverse)), base, std::move(vmap), std::move(emap),
                       vid(base.base(), 0, 0));
}

KosResult kos_certificate(const Graph& g, const TorusVoltage& volt, const EdgeWeights<Complex>& x, int m, int n,
                          Tolerance tol) {
  Pi1Presentation pres = make_presentation(g, 0);
  CoveringMap cover = torus_cover(pres, volt, m, n);
  KosResult res;
  res.lhs = det(adjacency(cover.cover, lift_weights(cover, x)));
  res.rhs = Complex(1.0, 0.0);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < m; ++l) {
      Connection<Complex> c{1, {}};
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [a, b] = volt.voltage[e];
        const double turn = static_cast<double>(k * a) / n + static_cast<double>(l * b) / m;
        c.phi.push_back(Matrix<Complex>::Constant(1, 1, std::polar(1.0, 2.0 * std::numbers::pi * turn)));
      }
      res.rhs *= det(twisted_adjacency(g, x, c));
    }
  res.abs_deviation = std::abs(res.lhs - res.rhs);
  res.rel_deviation = std::abs(res.rhs) > 0 ? res.abs_deviation / std::abs(res.rhs)
                                            : (res.abs_deviation == 0 ? 0.0 : std::numeric_limits<double>::infinity());
  res.pass = approx_equal(res.lhs, res.rhs, tol);
  return res;
}

}  // namespace twistcov
