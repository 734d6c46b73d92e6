#pragma once

// Certificates for the conjugacy of twisted operators on a covering and the
// factorizations that follow from it: characteristic polynomial divisibility,
// spanning tree / rooted forest partition functions, dimers and the torus
// product formula.

#include <optional>
#include <string>
#include <vector>

#include "twistcov/covering.hpp"
#include "twistcov/matrix.hpp"
#include "twistcov/operators.hpp"
#include "twistcov/representation.hpp"

namespace twistcov {

/// x̃_ẽ = x_{p(ẽ)}.
template <class S>
EdgeWeights<S> lift_weights(const CoveringMap& p, const EdgeWeights<S>& x) {
  EdgeWeights<S> out;
  out.symmetry = x.symmetry;
  out.values.reserve(p.edge_map.size());
  for (EdgeId e : p.edge_map) out.values.push_back(x[e]);
  return out;
}

template <class W>
struct ConjugacyCertificate {
  Matrix<W> psi;
  Matrix<W> a_cover;
  Matrix<W> a_base;
  bool psi_invertible = false;
  bool commutes = false;
  double max_deviation = 0.0;  // floating domain only

  bool valid() const { return psi_invertible && commutes; }
};

/// ψ: column block of ṽ is ρ#(g_ṽ) restricted to the block of the identity coset,
/// placed in the row block of p(ṽ).
template <class S>
Matrix<S> build_psi(const CoveringMap& p, const CosetData& cd, const InducedRep<S>& ind) {
  require_connected_cover(p);
  const int m = ind.block;
  const int md = ind.rep.degree;
  const int r0 = ind.identity_coset;
  Matrix<S> psi = zeros<S>(p.base_graph().num_vertices() * md, p.cover.num_vertices() * m);
  for (Vertex v = 0; v < p.cover.num_vertices(); ++v) {
    Matrix<S> g = rep_of_word(ind.rep, cd.coset_word[v]);
    psi.block(p.vertex_map[v] * md, v * m, md, m) = g.block(0, r0 * m, md, m);
  }
  return psi;
}

namespace detail {

template <class S>
bool is_invertible(const Matrix<S>& m) {
  if (m.rows() != m.cols()) return false;
  if constexpr (ScalarTraits<S>::exact) {
    return !ScalarTraits<S>::is_zero(det(m));
  } else {
    return m.rows() == 0 || m.fullPivLu().isInvertible();
  }
}

}  // namespace detail

/// Checks ψ·A_cover = A_base·ψ with A_cover twisted by ρ (on the cover presentation)
/// and A_base twisted by ρ# (on the base presentation), for base weights x lifted to
/// the cover. W is the weight domain, S the representation domain.
template <class W, class S>
ConjugacyCertificate<W> verify_main(const CoveringMap& p, const CosetData& cd, const Representation<S>& rho,
                                    const EdgeWeights<W>& x, Tolerance tol = {}) {
  require_connected_cover(p);
  InducedRep<S> ind = induce(p, cd, rho);
  Matrix<S> psi = build_psi(p, cd, ind);
  ConjugacyCertificate<W> cert;
  cert.a_cover = twisted_adjacency(p.cover, lift_weights(p, x), connection_from_rep(cd.cover_presentation, rho));
  cert.a_base = twisted_adjacency(p.base_graph(), x, connection_from_rep(p.base, ind.rep));
  cert.psi = convert<W>(psi);
  cert.psi_invertible = detail::is_invertible(psi);
  Matrix<W> lhs = multiply(cert.psi, cert.a_cover);
  Matrix<W> rhs = multiply(cert.a_base, cert.psi);
  cert.commutes = matrix_eq<W>(lhs, rhs, tol);
  if constexpr (std::is_same_v<W, Complex>) cert.max_deviation = max_deviation(lhs, rhs);
  return cert;
}

template <class C>
struct DivisibilityCertificate {
  Poly<C> dividend;
  Poly<C> divisor;
  std::optional<Poly<C>> quotient;
  bool integral = false;

  bool divides() const { return quotient.has_value(); }
  /// divisor·quotient = dividend, re-checked.
  bool verified() const { return quotient && (*quotient) * divisor == dividend; }
};

template <class C>
DivisibilityCertificate<C> divide_certificate(const Poly<C>& dividend, const Poly<C>& divisor) {
  DivisibilityCertificate<C> cert{dividend, divisor, dividend.exact_div(divisor), false};
  if (cert.quotient) cert.integral = cert.quotient->is_integral();
  return cert;
}

struct Cor1Result {
  DivisibilityCertificate<Rational> division;
  RatPoly complement_charpoly;  // charpoly of A^{ρ'} built directly
  bool quotient_matches_complement = false;
  bool quotient_monic = false;
  int quotient_degree = 0;  // degree in λ

  bool pass() const {
    return division.verified() && division.integral && quotient_monic && quotient_matches_complement;
  }
};

/// Trivial ρ on the cover: charpoly(A_cover) / charpoly(A_base) in ℤ[x,λ], compared
/// against the charpoly of the zero-sum complement of the permutation representation.
Cor1Result cor1_certificate(const CoveringMap& p, const CosetData& cd, const EdgeWeights<RatPoly>& x);

struct Cor2Result {
  bool exact = false;
  bool pass = false;
  int num_irreducibles = 0;
  double max_relative_deviation = 0.0;  // numeric path
  std::optional<GaussPoly> cover_charpoly;
  std::optional<GaussPoly> product;
};

/// charpoly(A_cover) = Π_χ charpoly(A^{χ∘pr})^{deg χ} over the abelian characters.
/// Exact in ℚ(i) when every character value is a fourth root of unity, otherwise
/// compared numerically at sample weights and λ points.
Cor2Result cor2_certificate(const CoveringMap& p, const EdgeWeights<RatPoly>& x, Tolerance tol = {},
                            unsigned seed = 1);

/// Same statement with user supplied irreducible representations of π₁(Γ) through
/// the Galois group (given with their multiplicity = degree).
Cor2Result cor2_certificate(const CoveringMap& p, const EdgeWeights<RatPoly>& x,
                            const std::vector<Representation<Complex>>& irreducibles, Tolerance tol = {},
                            unsigned seed = 1);

struct TreeResult {
  RatPoly charpoly_cover;
  RatPoly charpoly_base;
  RatPoly zst_cover, zst_base;
  RatPoly zrsf_cover, zrsf_base;
  DivisibilityCertificate<Rational> st;
  DivisibilityCertificate<Rational> rsf;
  bool zst_integral = false;

  bool pass() const {
    return st.verified() && st.integral && rsf.verified() && rsf.integral && zst_integral;
  }
};

/// Z_ST = (−1)^{n−1} c₁ / n and Z_RSF = (−1)^n P(−1) of the Laplacian characteristic polynomial P.
RatPoly zst_from_charpoly(const RatPoly& p, int n, bool* integral = nullptr);
RatPoly zrsf_from_charpoly(const RatPoly& p, int n);
/// Coefficient of λ^i.
RatPoly lambda_coefficient(const RatPoly& p, int i);

TreeResult tree_certificates(const CoveringMap& p, const EdgeWeights<RatPoly>& x);

struct DimerResult {
  Orientation orientation;
  RatPoly det_cover, det_base, det_complement;
  bool det_factorization = false;
  RatPoly z_cover, z_base;  // matching oracles
  DivisibilityCertificate<Rational> division;
  bool kasteleyn_base = false;   // Z_base² = det(A_base)
  bool kasteleyn_cover = false;  // Z_cover² = det(A_cover)

  bool pass() const {
    return det_factorization && division.verified() && division.integral && kasteleyn_base && kasteleyn_cover;
  }
};

/// Cyclic ℤ/d cover (d odd) of a planar base with a Kasteleyn orientation.
DimerResult dimer_certificate(const CoveringMap& p, const RotationSystem& base_rotation,
                              const EdgeWeights<RatPoly>& x, std::optional<int> outer_face = std::nullopt);

struct TorusVoltage {
  std::vector<std::pair<int, int>> voltage;  // per directed edge
};

struct KosResult {
  Complex lhs;
  Complex rhs;
  double abs_deviation = 0.0;
  double rel_deviation = 0.0;  // |lhs − rhs| / |rhs|, infinite when rhs = 0
  bool pass = false;
};

/// m×n abelian cover: (v,i,j) with i mod n, j mod m; voltage (a,b) ↦ z^a w^b.
CoveringMap torus_cover(const Pi1Presentation& base, const TorusVoltage& volt, int m, int n);

KosResult kos_certificate(const Graph& g, const TorusVoltage& volt, const EdgeWeights<Complex>& x, int m, int n,
                          Tolerance tol = {});

}  // namespace twistcov
