#pragma once

// Sparse multivariate polynomials with exact coefficients (Rational or Gaussian).
//
// Terms are kept sorted in decreasing graded-lex order (total degree first, then
// lexicographic with variable 0 the most significant), so the leading term is
// terms().front(). Zero coefficients are never stored.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twistcov/error.hpp"
#include "twistcov/scalar.hpp"

namespace twistcov {

inline constexpr std::size_t kMaxVars = 40;

class VariableRegistry {
 public:
  explicit VariableRegistry(std::vector<std::string> names);
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

using RegistryPtr = std::shared_ptr<const VariableRegistry>;

RegistryPtr make_registry(std::vector<std::string> names);
/// Registry with `prefix_0 .. prefix_{count-1}`.
RegistryPtr make_indexed_registry(const std::string& prefix, std::size_t count);
/// Returns a registry equal to `base` followed by `name`.
RegistryPtr extend_registry(const RegistryPtr& base, const std::string& name);
/// Compatible registries are equal or one is a prefix of the other; the longer one wins.
/// A null registry (constants) is compatible with everything.
RegistryPtr merge_registries(const RegistryPtr& a, const RegistryPtr& b);

struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  std::uint16_t degree = 0;

  static Monomial one() { return {}; }
  static Monomial var(std::size_t index, unsigned power = 1);

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  /// Requires divides(o) from `o`'s perspective: returns o / *this.
  Monomial quotient_of(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree == b.degree && a.exp == b.exp;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree <=> b.degree;
    int c = std::memcmp(a.exp.data(), b.exp.data(), kMaxVars);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

template <class C>
class Poly {
 public:
  using Coeff = C;
  using Term = std::pair<Monomial, C>;

  Poly() = default;
  Poly(int c) : Poly(C(c)) {}
  Poly(const C& c) {
    if (!ScalarTraits<C>::is_zero(c)) terms_.emplace_back(Monomial::one(), c);
  }
  template <class D>
    requires(!std::is_same_v<D, C> && std::is_constructible_v<C, const D&>)
  explicit Poly(const Poly<D>& other) : registry_(other.registry()) {
    terms_.reserve(other.terms().size());
    for (const auto& [m, c] : other.terms()) terms_.emplace_back(m, C(c));
  }

  static Poly variable(const RegistryPtr& reg, std::size_t index) {
    if (!reg || index >= reg->size())
      throw Error(Errc::RegistryMismatch, "variable index outside registry");
    Poly p;
    p.registry_ = reg;
    p.terms_.emplace_back(Monomial::var(index), C(1));
    return p;
  }
  static Poly term(const RegistryPtr& reg, const Monomial& m, const C& c) {
    Poly p;
    p.registry_ = reg;
    if (!ScalarTraits<C>::is_zero(c)) p.terms_.emplace_back(m, c);
    return p;
  }
  /// Builds from an arbitrary list of terms (any order, duplicates summed).
  static Poly from_terms(const RegistryPtr& reg, std::vector<Term> terms) {
    Poly p;
    p.registry_ = reg;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  const RegistryPtr& registry() const { return registry_; }
  Poly with_registry(const RegistryPtr& reg) const {
    Poly p = *this;
    p.registry_ = merge_registries(registry_, reg);
    return p;
  }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first.degree == 0);
  }
  C constant_term() const {
    if (!terms_.empty() && terms_.back().first.degree == 0) return terms_.back().second;
    return C(0);
  }
  const Term& leading_term() const { return terms_.front(); }
  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree; }
  /// Highest exponent of `var` appearing; -1 for the zero polynomial.
  int degree_in(std::size_t var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max<int>(d, t.first.exp[var]);
    return d;
  }
  /// All coefficients integral (Gaussian integers for Q(i)).
  bool is_integral() const {
    for (const auto& t : terms_)
      if (!t.second.is_integer()) return false;
    return true;
  }

  /// Coefficient of var^power, as a polynomial in the remaining variables.
  Poly coefficient_of(std::size_t var, unsigned power) const {
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
      if (m.exp[var] != power) continue;
      Monomial r = m;
      r.exp[var] = 0;
      r.degree = static_cast<std::uint16_t>(r.degree - power);
      out.emplace_back(r, c);
    }
    return from_terms(registry_, std::move(out));
  }

  /// Substitutes a scalar for one variable.
  Poly substitute(std::size_t var, const C& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      Monomial r = m;
      unsigned k = r.exp[var];
      r.exp[var] = 0;
      r.degree = static_cast<std::uint16_t>(r.degree - k);
      C f = c;
      for (unsigned j = 0; j < k; ++j) f *= value;
      out.emplace_back(r, std::move(f));
    }
    return from_terms(registry_, std::move(out));
  }

  /// Full evaluation; values.size() must cover every variable used.
  C evaluate(std::span<const C> values) const {
    C sum(0);
    for (const auto& [m, c] : terms_) {
      C t = c;
      for (std::size_t v = 0; v < kMaxVars; ++v)
        for (unsigned j = 0; j < m.exp[v]; ++j) {
          if (v >= values.size()) throw Error(Errc::DimensionMismatch, "too few evaluation values");
          t *= values[v];
        }
      sum += t;
    }
    return sum;
  }

  Poly& operator+=(const Poly& o) { return *this = merge(*this, o, false); }
  Poly& operator-=(const Poly& o) { return *this = merge(*this, o, true); }
  Poly& operator*=(const Poly& o) { return *this = multiply(*this, o); }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const C& c) const {
    if (ScalarTraits<C>::is_zero(c)) return term(registry_, Monomial::one(), C(0));
    Poly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  /// Exact quotient a / b if b divides a, otherwise nullopt.
  /// Throws Error(DivisionByZeroPoly) when b is zero.
  std::optional<Poly> exact_div(const Poly& b) const;

  /// Canonical text form, e.g. "3*x_0^2*x_1 - 2*lambda".
  std::string to_string() const;

 private:
  void normalize();
  static Poly merge(const Poly& a, const Poly& b, bool subtract);
  static Poly multiply(const Poly& a, const Poly& b);
  static Poly shifted(const Poly& a, const Term& t);

  RegistryPtr registry_;
  std::vector<Term> terms_;
};

using RatPoly = Poly<Rational>;
using GaussPoly = Poly<Gaussian>;

template <class S>
struct ScalarTraits<Poly<S>> {
  static constexpr bool exact = true;
  static constexpr bool field = false;
  static constexpr std::string_view name = "polynomial";
  static bool is_zero(const Poly<S>& a) { return a.is_zero(); }
  static bool eq(const Poly<S>& a, const Poly<S>& b, Tolerance = {}) { return a == b; }
  static Poly<S> exact_div(const Poly<S>& a, const Poly<S>& b) {
    auto q = a.exact_div(b);
    if (!q) throw Error(Errc::DivisionFailed, "inexact polynomial division in elimination");
    return *q;
  }
};

/// Product and exact division as free functions.
template <class C>
Poly<C> poly_mul(const Poly<C>& a, const Poly<C>& b) {
  return a * b;
}
template <class C>
std::optional<Poly<C>> poly_exact_div(const Poly<C>& a, const Poly<C>& b) {
  return a.exact_div(b);
}

// ---------------------------------------------------------------------------

namespace detail {
std::string monomial_string(const Monomial& m, const RegistryPtr& reg);
std::string coeff_string(const Rational& c);
std::string coeff_string(const Gaussian& c);
inline bool is_negative(const Rational& c) { return c.sign() < 0; }
inline bool is_negative(const Gaussian& c) { return c.im().is_zero() && c.re().sign() < 0; }
}  // namespace detail

template <class C>
void Poly<C>::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first > b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && ScalarTraits<C>::is_zero(out.back().second)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && ScalarTraits<C>::is_zero(out.back().second)) out.pop_back();
  terms_ = std::move(out);
}

template <class C>
Poly<C> Poly<C>::merge(const Poly& a, const Poly& b, bool subtract) {
  Poly r;
  r.registry_ = merge_registries(a.registry_, b.registry_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first > b.terms_[j].first)) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].first > a.terms_[i].first) {
      r.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
      ++j;
    } else {
      C c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
      if (!ScalarTraits<C>::is_zero(c)) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

template <class C>
Poly<C> Poly<C>::shifted(const Poly& a, const Term& t) {
  Poly r;
  r.registry_ = a.registry_;
  r.terms_.reserve(a.terms_.size());
  for (const auto& [m, c] : a.terms_) r.terms_.emplace_back(m * t.first, c * t.second);
  return r;
}

template <class C>
Poly<C> Poly<C>::multiply(const Poly& a, const Poly& b) {
  RegistryPtr reg = merge_registries(a.registry_, b.registry_);
  if (a.is_zero() || b.is_zero()) return term(reg, Monomial::one(), C(0));
  const Poly& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const Poly& large = a.terms_.size() <= b.terms_.size() ? b : a;
  // Multiplying by a single term preserves order; merge the partial products pairwise.
  std::vector<Poly> parts;
  parts.reserve(small.terms_.size());
  for (const auto& t : small.terms_) parts.push_back(shifted(large, t));
  while (parts.size() > 1) {
    std::vector<Poly> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t k = 0; k + 1 < parts.size(); k += 2) next.push_back(merge(parts[k], parts[k + 1], false));
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  Poly r = std::move(parts.front());
  r.registry_ = reg;
  return r;
}

template <class C>
std::optional<Poly<C>> Poly<C>::exact_div(const Poly& b) const {
  if (b.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  RegistryPtr reg = merge_registries(registry_, b.registry_);
  if (is_zero()) return term(reg, Monomial::one(), C(0));
  const auto& [lm_b, lc_b] = b.terms_.front();
  if (b.terms_.size() == 1) {
    std::vector<Term> out;
    out.reserve(terms_.size());
    C inv = C(1) / lc_b;
    for (const auto& [m, c] : terms_) {
      if (!lm_b.divides(m)) return std::nullopt;
      out.emplace_back(lm_b.quotient_of(m), c * inv);
    }
    Poly q;
    q.registry_ = reg;
    q.terms_ = std::move(out);  // order preserved under division by a monomial
    return q;
  }
  std::map<Monomial, C, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace(t.first, t.second);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto lead = rem.begin();
    if (!lm_b.divides(lead->first)) return std::nullopt;
    Monomial qm = lm_b.quotient_of(lead->first);
    C qc = lead->second / lc_b;
    for (const auto& [m, c] : b.terms_) {
      Monomial pm = m * qm;
      C pc = c * qc;
      auto it = rem.find(pm);
      if (it == rem.end()) {
        rem.emplace(pm, -pc);
      } else {
        it->second -= pc;
        if (ScalarTraits<C>::is_zero(it->second)) rem.erase(it);
      }
    }
    quotient.emplace_back(qm, std::move(qc));
  }
  Poly q;
  q.registry_ = reg;
  q.terms_ = std::move(quotient);
  return q;
}

template <class C>
std::string Poly<C>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = detail::is_negative(c);
    C mag = neg ? -c : c;
    std::string coeff = detail::coeff_string(mag);
    std::string mono = detail::monomial_string(m, registry_);
    std::string body;
    if (mono.empty()) {
      body = coeff;
    } else if (coeff == "1") {
      body = mono;
    } else {
      body = coeff + "*" + mono;
    }
    if (first) {
      out += neg ? "-" + body : body;
    } else {
      out += neg ? " - " + body : " + " + body;
    }
    first = false;
  }
  return out;
}

}  // namespace twistcov
