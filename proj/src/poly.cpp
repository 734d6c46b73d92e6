#include "twistcov/poly.hpp"

namespace twistcov {

VariableRegistry::VariableRegistry(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars)
    throw Error(Errc::RegistryMismatch, "too many polynomial variables (" + std::to_string(names_.size()) + ")");
}

std::optional<std::size_t> VariableRegistry::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RegistryPtr make_registry(std::vector<std::string> names) {
  return std::make_shared<const VariableRegistry>(std::move(names));
}

RegistryPtr make_indexed_registry(const std::string& prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + "_" + std::to_string(i));
  return make_registry(std::move(names));
}

RegistryPtr extend_registry(const RegistryPtr& base, const std::string& name) {
  std::vector<std::string> names = base ? base->names() : std::vector<std::string>{};
  names.push_back(name);
  return make_registry(std::move(names));
}

RegistryPtr merge_registries(const RegistryPtr& a, const RegistryPtr& b) {
  if (!a || a == b) return b ? b : a;
  if (!b) return a;
  const auto& na = a->names();
  const auto& nb = b->names();
  const auto& shorter = na.size() <= nb.size() ? na : nb;
  const auto& longer = na.size() <= nb.size() ? nb : na;
  if (!std::equal(shorter.begin(), shorter.end(), longer.begin()))
    throw Error(Errc::RegistryMismatch, "polynomials use incompatible variable registries");
  return na.size() <= nb.size() ? b : a;
}

Monomial Monomial::var(std::size_t index, unsigned power) {
  if (index >= kMaxVars) throw Error(Errc::RegistryMismatch, "variable index too large");
  Monomial m;
  m.exp[index] = static_cast<std::uint8_t>(power);
  m.degree = static_cast<std::uint16_t>(power);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree > other.degree) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exp[i]) + o.exp[i];
    if (e > 255) throw Error(Errc::TooLarge, "monomial exponent overflow");
    r.exp[i] = static_cast<std::uint8_t>(e);
  }
  r.degree = static_cast<std::uint16_t>(degree + o.degree);
  return r;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(o.exp[i] - exp[i]);
  r.degree = static_cast<std::uint16_t>(o.degree - degree);
  return r;
}

namespace detail {

std::string monomial_string(const Monomial& m, const RegistryPtr& reg) {
  std::string out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += (reg && i < reg->size()) ? reg->name(i) : "v" + std::to_string(i);
    if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
  }
  return out;
}

std::string coeff_string(const Rational& c) { return c.to_string(); }

std::string coeff_string(const Gaussian& c) { return c.to_string(); }

}  // namespace detail

template class Poly<Rational>;
template class Poly<Gaussian>;

}  // namespace twistcov
