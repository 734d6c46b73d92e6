#include "twistcov/scalar.hpp"

#include <cctype>
#include <cstdio>

#include "twistcov/error.hpp"

namespace twistcov {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotConnected: return "NotConnected";
    case Errc::NotALoop: return "NotALoop";
    case Errc::InvalidRotation: return "InvalidRotation";
    case Errc::NotPlanar: return "NotPlanar";
    case Errc::StartNotInFiber: return "StartNotInFiber";
    case Errc::VertexNotInBaseFiber: return "VertexNotInBaseFiber";
    case Errc::CoverNotConnected: return "CoverNotConnected";
    case Errc::TransversalCheckFailed: return "TransversalCheckFailed";
    case Errc::NotInSubgroup: return "NotInSubgroup";
    case Errc::RegistryMismatch: return "RegistryMismatch";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotSkewSymmetric: return "NotSkewSymmetric";
    case Errc::OddDimension: return "OddDimension";
    case Errc::TooLargeForExactExpansion: return "TooLargeForExactExpansion";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Singular: return "Singular";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::InternalCosetError: return "InternalCosetError";
    case Errc::MissingWeight: return "MissingWeight";
    case Errc::MissingConnectionEntry: return "MissingConnectionEntry";
    case Errc::WeightsNotSymmetric: return "WeightsNotSymmetric";
    case Errc::DivisionFailed: return "DivisionFailed";
    case Errc::IrreducibleCountMismatch: return "IrreducibleCountMismatch";
    case Errc::EvenDegree: return "EvenDegree";
    case Errc::NotPlanarQuotient: return "NotPlanarQuotient";
    case Errc::VoltageNotAntisymmetric: return "VoltageNotAntisymmetric";
    case Errc::HNotSubgroup: return "HNotSubgroup";
    case Errc::QuotientConstructionFailed: return "QuotientConstructionFailed";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(Errc::SemanticError, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(Errc::ParseError, "empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digits_before = false;
  bool digits_after = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (seen_slash) throw Error(Errc::ParseError, "malformed rational '" + s + "'");
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      (seen_slash ? digits_after : digits_before) = true;
    } else {
      throw Error(Errc::ParseError, "malformed rational '" + s + "'");
    }
  }
  if (!digits_before || (seen_slash && !digits_after))
    throw Error(Errc::ParseError, "malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error(Errc::ParseError, "malformed rational '" + s + "'");
  if (q.get_den() == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(Errc::Singular, "inverse of zero rational");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::Singular, "division by zero rational");
  q_ /= o.q_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian Gaussian::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw Error(Errc::Singular, "inverse of zero gaussian");
  return Gaussian(re_ / n, -im_ / n);
}

Gaussian Gaussian::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(Errc::ParseError, "empty gaussian");
  if (s.back() != 'i') return Gaussian(Rational::parse(s));
  s.pop_back();
  // split at the last sign that is not the leading one
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  Rational re = re_part.empty() ? Rational(0) : Rational::parse(re_part);
  return Gaussian(re, Rational::parse(im_part));
}

std::string Gaussian::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string im_str;
  if (im_ == Rational(1)) {
    im_str = "i";
  } else if (im_ == Rational(-1)) {
    im_str = "-i";
  } else {
    im_str = im_.to_string() + "i";
  }
  if (re_.is_zero()) return im_str;
  if (im_str[0] == '-') return "(" + re_.to_string() + im_str + ")";
  return "(" + re_.to_string() + "+" + im_str + ")";
}

std::string to_string(const Complex& z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.12g%+.12gi)", z.real(), z.imag());
  return buf;
}

}  // namespace twistcov
