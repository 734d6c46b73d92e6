#include "twistcov/representation.hpp"

#include <numbers>

namespace twistcov {

namespace {

Rational frac(const Rational& a) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.raw().get_num_mpz_t(), a.raw().get_den_mpz_t());
  return a - Rational(fl);
}

}  // namespace

bool Character::is_gaussian() const {
  for (const auto& a : angle)
    if (!(a * Rational(4)).is_integer()) return false;
  return true;
}

std::vector<Character> characters_of(const GaloisGroup& g) {
  const int n = g.order();
  std::vector<char> in_h(n, 0);
  std::vector<int> h{g.identity};
  in_h[g.identity] = 1;
  std::vector<Character> chars{Character{std::vector<Rational>(n, Rational(0))}};
  while (static_cast<int>(h.size()) < n) {
    int x = 0;
    while (in_h[x]) ++x;
    int k = 1;
    int xk = x;
    while (!in_h[xk]) {
      xk = g.multiply(xk, x);
      ++k;
    }
    std::vector<int> grown;
    for (int j = 0; j < k; ++j) {
      const int xj = g.power(x, j);
      for (int e : h) grown.push_back(g.multiply(xj, e));
    }
    std::vector<Character> next;
    for (const auto& chi : chars) {
      for (int t = 0; t < k; ++t) {
        Rational theta = (chi.angle[xk] + Rational(t)) / Rational(k);
        Character ext{std::vector<Rational>(n, Rational(0))};
        for (int j = 0; j < k; ++j) {
          const int xj = g.power(x, j);
          for (int e : h) ext.angle[g.multiply(xj, e)] = frac(chi.angle[e] + Rational(j) * theta);
        }
        next.push_back(std::move(ext));
      }
    }
    chars = std::move(next);
    h = std::move(grown);
    for (int e : h) in_h[e] = 1;
  }
  return chars;
}

std::vector<Character> abelian_characters(const CoveringMap&, const GaloisGroup& g) {
  if (!g.is_abelian()) throw Error(Errc::NotAbelian, "Galois group is not abelian");
  return characters_of(g);
}

std::vector<Character> abelian_characters(const CoveringMap& p) {
  return abelian_characters(p, galois_group(p));
}

std::optional<Gaussian> character_value_exact(const Rational& angle) {
  Rational q = frac(angle) * Rational(4);
  if (!q.is_integer()) return std::nullopt;
  switch (q.numerator().get_si()) {
    case 0: return Gaussian(1);
    case 1: return Gaussian::i();
    case 2: return Gaussian(-1);
    default: return -Gaussian::i();
  }
}

Complex character_value(const Rational& angle) {
  if (auto exact = character_value_exact(angle)) return exact->to_complex();
  return std::polar(1.0, 2.0 * std::numbers::pi * frac(angle).to_double());
}

Representation<Complex> character_representation(const CoveringMap& p, const GaloisGroup& g, const Character& chi) {
  Representation<Complex> r;
  r.degree = 1;
  for (int gen = 0; gen < p.base.rank(); ++gen) {
    const Rational& a = chi.angle[g.generator_images[gen]];
    r.gens.push_back(Matrix<Complex>::Constant(1, 1, character_value(a)));
    r.inverses.push_back(Matrix<Complex>::Constant(1, 1, character_value(-a)));
  }
  return r;
}

Representation<Gaussian> character_representation_exact(const CoveringMap& p, const GaloisGroup& g,
                                                         const Character& chi) {
  Representation<Gaussian> r;
  r.degree = 1;
  for (int gen = 0; gen < p.base.rank(); ++gen) {
    const Rational& a = chi.angle[g.generator_images[gen]];
    auto v = character_value_exact(a);
    auto vi = character_value_exact(-a);
    if (!v || !vi) throw Error(Errc::DomainMismatch, "character value is not a fourth root of unity");
    r.gens.push_back(Matrix<Gaussian>::Constant(1, 1, *v));
    r.inverses.push_back(Matrix<Gaussian>::Constant(1, 1, *vi));
  }
  return r;
}

}  // namespace twistcov
