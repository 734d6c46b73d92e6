#pragma once

// Representations of the free groups π₁(Γ,T), connections realizing them,
// monodromy, direct sums, induced representations and the characters of
// abelian Galois groups.

#include <optional>
#include <vector>

#include "twistcov/covering.hpp"
#include "twistcov/homotopy.hpp"
#include "twistcov/matrix.hpp"

namespace twistcov {

template <class S>
struct Representation {
  int degree = 1;
  std::vector<Matrix<S>> gens;      // one per generator
  std::vector<Matrix<S>> inverses;  // gens[i] * inverses[i] = I

  int rank() const { return static_cast<int>(gens.size()); }
};

/// Builds a representation from generator images; inverses are computed exactly
/// (or numerically for the floating domain). Throws Singular.
template <class S>
Representation<S> make_representation(int degree, std::vector<Matrix<S>> gens) {
  Representation<S> r;
  r.degree = degree;
  for (auto& g : gens) {
    if (g.rows() != degree || g.cols() != degree)
      throw Error(Errc::DimensionMismatch, "generator image has the wrong size");
    r.inverses.push_back(inverse(g));
  }
  r.gens = std::move(gens);
  return r;
}

template <class S>
Representation<S> trivial_representation(int rank, int degree = 1) {
  Representation<S> r;
  r.degree = degree;
  r.gens.assign(rank, identity<S>(degree));
  r.inverses.assign(rank, identity<S>(degree));
  return r;
}

template <class S>
ValidationReport validate_representation(const Representation<S>& r, Tolerance tol = {}) {
  ValidationReport rep;
  if (r.gens.size() != r.inverses.size()) {
    rep.add("generator and inverse lists differ in length");
    return rep;
  }
  for (int i = 0; i < r.rank(); ++i)
    if (!matrix_eq<S>(multiply(r.gens[i], r.inverses[i]), identity<S>(r.degree), tol))
      rep.add("stored inverse of generator " + std::to_string(i) + " is wrong");
  return rep;
}

template <class S>
Matrix<S> rep_of_word(const Representation<S>& r, const FreeWord& w) {
  Matrix<S> m = identity<S>(r.degree);
  for (const Letter& l : w.letters) m = multiply(m, l.exp > 0 ? r.gens.at(l.gen) : r.inverses.at(l.gen));
  return m;
}

template <class T, class S>
Representation<T> convert_representation(const Representation<S>& r) {
  Representation<T> out;
  out.degree = r.degree;
  for (const auto& g : r.gens) out.gens.push_back(convert<T>(g));
  for (const auto& g : r.inverses) out.inverses.push_back(convert<T>(g));
  return out;
}

template <class S>
Representation<Complex> complex_representation(const Representation<S>& r) {
  Representation<Complex> out;
  out.degree = r.degree;
  for (const auto& g : r.gens) out.gens.push_back(to_complex(g));
  for (const auto& g : r.inverses) out.inverses.push_back(to_complex(g));
  return out;
}

template <class S>
Representation<S> direct_sum(const Representation<S>& a, const Representation<S>& b) {
  if (a.degree == 0) return b;
  if (b.degree == 0) return a;
  if (a.rank() != b.rank()) throw Error(Errc::DomainMismatch, "representations of different groups");
  Representation<S> r;
  r.degree = a.degree + b.degree;
  for (int i = 0; i < a.rank(); ++i) {
    r.gens.push_back(block_diagonal(a.gens[i], b.gens[i]));
    r.inverses.push_back(block_diagonal(a.inverses[i], b.inverses[i]));
  }
  return r;
}

/// Matrices φ_e per directed edge with φ_ē = φ_e⁻¹.
template <class S>
struct Connection {
  int degree = 1;
  std::vector<Matrix<S>> phi;
};

template <class S>
Connection<S> trivial_connection(const Graph& g, int degree = 1) {
  return Connection<S>{degree, std::vector<Matrix<S>>(g.num_edges(), identity<S>(degree))};
}

template <class S>
Connection<S> connection_from_rep(const Pi1Presentation& p, const Representation<S>& r) {
  if (r.rank() != p.rank()) throw Error(Errc::DimensionMismatch, "representation rank differs from generator count");
  Connection<S> c;
  c.degree = r.degree;
  c.phi.reserve(p.graph.num_edges());
  for (EdgeId e = 0; e < p.graph.num_edges(); ++e) {
    const int g = p.gen_of_edge[e];
    if (g < 0) {
      c.phi.push_back(identity<S>(r.degree));
    } else {
      c.phi.push_back(p.sign_of_edge[e] > 0 ? r.gens[g] : r.inverses[g]);
    }
  }
  return c;
}

template <class S>
ValidationReport validate_connection(const Graph& g, const Connection<S>& c, Tolerance tol = {}) {
  ValidationReport rep;
  if (static_cast<int>(c.phi.size()) != g.num_edges()) {
    rep.add("connection does not cover every edge");
    return rep;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!matrix_eq<S>(multiply(c.phi[e], c.phi[g.inv(e)]), identity<S>(c.degree), tol))
      rep.add("phi of the inverse of e" + std::to_string(e) + " is not the inverse matrix");
  return rep;
}

/// φ_{e₁}∘⋯∘φ_{eₙ} (the first edge outermost).
template <class S>
Matrix<S> monodromy(const Graph& g, const Connection<S>& c, const Path& loop) {
  if (!is_loop(g, loop)) throw Error(Errc::NotALoop, "monodromy requires a loop");
  Matrix<S> m = identity<S>(c.degree);
  for (EdgeId e : loop.edges) m = multiply(m, c.phi.at(e));
  return m;
}

/// φ'_e = h_{s(e)} φ_e h_{t(e)}⁻¹ for vertexwise automorphisms h.
template <class S>
Connection<S> apply_gauge(const Graph& g, const Connection<S>& c, const std::vector<Matrix<S>>& h) {
  if (static_cast<int>(h.size()) != g.num_vertices())
    throw Error(Errc::DimensionMismatch, "gauge needs one automorphism per vertex");
  std::vector<Matrix<S>> hinv;
  for (const auto& m : h) hinv.push_back(inverse(m));
  Connection<S> out{c.degree, {}};
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    out.phi.push_back(multiply(multiply(h[g.src(e)], c.phi[e]), hinv[g.tgt(e)]));
  return out;
}

/// Inverse of a block permutation matrix with invertible blocks.
template <class S>
Matrix<S> inverse_block_permutation(const Matrix<S>& a, int m) {
  const int d = static_cast<int>(a.rows()) / m;
  Matrix<S> inv = zeros<S>(a.rows(), a.cols());
  for (int rp = 0; rp < d; ++rp)
    for (int r = 0; r < d; ++r) {
      Matrix<S> blk = a.block(rp * m, r * m, m, m);
      bool nonzero = false;
      for (Eigen::Index i = 0; i < blk.size() && !nonzero; ++i) nonzero = !ScalarTraits<S>::is_zero(blk(i));
      if (nonzero) inv.block(r * m, rp * m, m, m) = inverse(blk);
    }
  return inv;
}

/// ρ# together with its block structure: block r of Z is ρ_r^#(W), r indexing cosets.
template <class S>
struct InducedRep {
  Representation<S> rep;
  int block = 1;      // degree of ρ
  int index = 1;      // number of cosets d
  int identity_coset = 0;
};

template <class S>
InducedRep<S> induce(const CoveringMap& p, const CosetData& cd, const Representation<S>& rho) {
  require_connected_cover(p);
  if (rho.rank() != cd.cover_presentation.rank())
    throw Error(Errc::DimensionMismatch, "representation must be over the cover presentation");
  const int m = rho.degree;
  const int d = cd.num_cosets();
  InducedRep<S> out;
  out.block = m;
  out.index = d;
  out.identity_coset = cd.identity_coset;
  out.rep.degree = m * d;
  for (int g = 0; g < p.base.rank(); ++g) {
    Matrix<S> img = zeros<S>(m * d, m * d);
    const FreeWord gw = generator_word(g);
    for (int r = 0; r < d; ++r) {
      const Vertex point = left_action(p, gw, cd.fiber[r]);
      auto it = std::find(cd.fiber.begin(), cd.fiber.end(), point);
      if (it == cd.fiber.end()) throw Error(Errc::InternalCosetError, "generator leaves the base fiber");
      const int rp = static_cast<int>(it - cd.fiber.begin());
      FreeWord h = multiply_words(multiply_words(inverse_word(cd.transversal[rp]), gw), cd.transversal[r]);
      FreeWord lifted;
      try {
        lifted = express_in_subgroup(p, cd, h);
      } catch (const Error& err) {
        if (err.code() == Errc::NotInSubgroup) throw Error(Errc::InternalCosetError, err.what());
        throw;
      }
      img.block(rp * m, r * m, m, m) = rep_of_word(rho, lifted);
    }
    out.rep.inverses.push_back(inverse_block_permutation(img, m));
    out.rep.gens.push_back(std::move(img));
  }
  return out;
}

/// Restriction of a permutation-type induced rep (ρ trivial of degree 1) to the
/// zero-sum complement, in the basis e_r − e_{r₀}.
template <class S>
Representation<S> zero_sum_complement(const InducedRep<S>& ind) {
  if (ind.block != 1) throw Error(Errc::DimensionMismatch, "complement defined for degree-1 inducing data");
  const int d = ind.index;
  const int r0 = ind.identity_coset;
  std::vector<int> keep;
  for (int r = 0; r < d; ++r)
    if (r != r0) keep.push_back(r);
  auto restrict_matrix = [&](const Matrix<S>& P) {
    Matrix<S> out = zeros<S>(d - 1, d - 1);
    for (int k = 0; k < d - 1; ++k) {
      // image of e_{keep[k]} − e_{r0}
      for (int a = 0; a < d - 1; ++a) out(a, k) = P(keep[a], keep[k]) - P(keep[a], r0);
    }
    return out;
  };
  Representation<S> rep;
  rep.degree = d - 1;
  for (std::size_t i = 0; i < ind.rep.gens.size(); ++i) {
    rep.gens.push_back(restrict_matrix(ind.rep.gens[i]));
    rep.inverses.push_back(restrict_matrix(ind.rep.inverses[i]));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Characters of abelian Galois groups

/// A degree-1 character of G, stored exactly as angles in [0,1): χ(a) = exp(2πi·angle[a]).
struct Character {
  std::vector<Rational> angle;

  bool is_gaussian() const;  // all values in {1, i, −1, −i}
};

/// All |G| characters, built by successive cyclic extension.
std::vector<Character> characters_of(const GaloisGroup& g);

/// The characters χ∘pr of π₁(Γ) for a normal cover with abelian Galois group.
std::vector<Character> abelian_characters(const CoveringMap& p, const GaloisGroup& g);
std::vector<Character> abelian_characters(const CoveringMap& p);

Complex character_value(const Rational& angle);
/// Exact value when 4·angle is an integer.
std::optional<Gaussian> character_value_exact(const Rational& angle);

Representation<Complex> character_representation(const CoveringMap& p, const GaloisGroup& g, const Character& chi);
/// Throws DomainMismatch if a value is not a fourth root of unity.
Representation<Gaussian> character_representation_exact(const CoveringMap& p, const GaloisGroup& g,
                                                         const Character& chi);

/// Regular representation composed with pr: permutation matrices of the deck action.
template <class S>
Representation<S> regular_representation(const CoveringMap& p, const GaloisGroup& g) {
  const int n = g.order();
  Representation<S> r;
  r.degree = n;
  for (int gen = 0; gen < p.base.rank(); ++gen) {
    const int a = g.generator_images[gen];
    Matrix<S> m = zeros<S>(n, n);
    Matrix<S> mi = zeros<S>(n, n);
    for (int b = 0; b < n; ++b) {
      m(g.multiply(a, b), b) = S(1);
      mi(b, g.multiply(a, b)) = S(1);
    }
    r.gens.push_back(m);
    r.inverses.push_back(mi);
  }
  return r;
}

}  // namespace twistcov
