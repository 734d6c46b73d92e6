#pragma once

// Artin L-functions of graphs through the non-backtracking line digraph, prime
// cycles, the Amitsur truncation check and the Artin formalism on a tower
// Γ̃ → H\Γ̃ → Γ of a normal cover with abelian Galois group.

#include <string>
#include <vector>

#include "twistcov/covering.hpp"
#include "twistcov/operators.hpp"
#include "twistcov/representation.hpp"

namespace twistcov {

/// A class of closed non-backtracking walks under rotation, not a proper power;
/// `edges` is the lexicographically least rotation.
struct PrimeCycle {
  std::vector<EdgeId> edges;
  int length() const { return static_cast<int>(edges.size()); }
};

/// Prime cycles of length ≤ max_length, both directions kept.
std::vector<PrimeCycle> prime_cycles(const Graph& g, int max_length);

template <class S>
S cycle_weight(const PrimeCycle& c, const EdgeWeights<S>& x) {
  S w(1);
  for (EdgeId e : c.edges) w = w * x[e];
  return w;
}

/// A^{ρ∘α} on the line digraph: the connection of G pulled back along arc ↦ first edge.
template <class S, class T>
Matrix<S> line_operator(const Graph& g, const EdgeWeights<S>& x, const Pi1Presentation& pres,
                        const Representation<T>& rho) {
  LineDigraph ld = line_digraph(g);
  Connection<T> c = pullback_connection(ld.origin, connection_from_rep(pres, rho));
  return twisted_adjacency(ld.digraph, line_weights(ld, x), c);
}

/// det(I − A^{ρ∘α}) on the line digraph, i.e. the inverse of L(G, x, ρ).
template <class S, class T>
S l_series_inverse(const Graph& g, const EdgeWeights<S>& x, const Pi1Presentation& pres,
                   const Representation<T>& rho) {
  Matrix<S> a = line_operator(g, x, pres, rho);
  Matrix<S> m = identity<S>(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) m(i, j) -= a(i, j);
  return det(m);
}

/// Whether line(Γ̃) → line(Γ), (ẽ,f̃) ↦ (p(ẽ),p(f̃)), is a covering of digraphs.
bool line_digraph_is_cover(const CoveringMap& p);

template <class S>
struct AmitsurReport {
  std::vector<S> trace_side;   // coefficient of u^k in Σ tr(M^k) u^k / k, index k
  std::vector<S> cycle_side;   // Σ_γ Σ_j x(γ)^j tr(ρ_γ^j) / j
  std::vector<S> log_det_side; // −log det(I − uM) expanded from the determinant
  int num_prime_cycles = 0;
  bool pass = false;
};

/// Coefficientwise comparison through u^max_length (≤ 12) for exact scalar weights.
template <class S>
AmitsurReport<S> amitsur_check(const Graph& g, const EdgeWeights<S>& x, const Pi1Presentation& pres,
                               const Representation<S>& rho, int max_length);

extern template AmitsurReport<Rational> amitsur_check(const Graph&, const EdgeWeights<Rational>&,
                                                      const Pi1Presentation&, const Representation<Rational>&, int);
extern template AmitsurReport<Gaussian> amitsur_check(const Graph&, const EdgeWeights<Gaussian>&,
                                                      const Pi1Presentation&, const Representation<Gaussian>&, int);

/// The intermediate cover Γ̄ = H\Γ̃ with both maps.
struct Tower {
  CoveringMap top;          // Γ̃ → Γ
  GaloisGroup galois;       // G
  std::vector<int> subgroup;  // H ⊆ G as element indices
  CoveringMap lower;        // Γ̄ → Γ
  CoveringMap upper;        // Γ̃ → Γ̄
};

/// Throws NotNormal, NotAbelian, HNotSubgroup, QuotientConstructionFailed.
Tower make_tower(const CoveringMap& p, std::vector<int> subgroup);

struct AxiomCheck {
  int axiom = 0;
  bool pass = false;
  std::string detail;
};

struct ArtinReport {
  std::vector<AxiomCheck> checks;
  bool pass() const;
  bool axiom_passes(int axiom) const;
};

/// Axioms 1–4 at the level of characteristic polynomials, exactly in ℚ(i)[x, λ].
/// Requires every character of G to take values in {±1, ±i}.
ArtinReport artin_axioms(const Tower& t, const EdgeWeights<RatPoly>& x);

}  // namespace twistcov
