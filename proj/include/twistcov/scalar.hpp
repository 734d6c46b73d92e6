#pragma once

// Scalar domains used throughout the library:
//   Rational  -- arbitrary precision rationals (exact field Q)
//   Gaussian  -- Q(i), exact
//   Complex   -- std::complex<double>, compared with a tolerance
// ScalarTraits<S> provides the small contract every generic algorithm relies on.

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace twistcov {

class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rational(const mpz_class& z) : q_(z) {}

  /// Parses "7", "-3/4". Throws Error(ParseError) on malformed input.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  double to_double() const { return q_.get_d(); }
  std::string to_string() const { return q_.get_str(); }
  const mpq_class& raw() const { return q_; }

  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  mpq_class q_;
};

/// Element re + im*i of Q(i).
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(int v) : re_(v) {}
  Gaussian(long v) : re_(v) {}
  Gaussian(const Rational& re) : re_(re) {}
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }
  /// Parses "3", "-1/2", "2i", "-i", "1/2+3/4i", "1-i".
  static Gaussian parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_integer() const { return re_.is_integer() && im_.is_integer(); }
  Gaussian conj() const { return Gaussian(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Gaussian inverse() const;
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  std::string to_string() const;

  Gaussian& operator+=(const Gaussian& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Gaussian& operator-=(const Gaussian& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o) { return *this *= o.inverse(); }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return Gaussian(-a.re_, -a.im_); }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

 private:
  Rational re_;
  Rational im_;
};

using Complex = std::complex<double>;

/// Tolerance for the floating domain: |a-b| <= atol + rtol*max(|a|,|b|).
struct Tolerance {
  double rtol = 1e-9;
  double atol = 1e-12;
};

inline bool approx_equal(const Complex& a, const Complex& b, Tolerance tol = {}) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= tol.atol + tol.rtol * scale;
}

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr bool field = true;
  static constexpr std::string_view name = "rational";
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static bool eq(const Rational& a, const Rational& b, Tolerance = {}) { return a == b; }
  static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
  static Complex to_complex(const Rational& a) { return {a.to_double(), 0.0}; }
};

template <>
struct ScalarTraits<Gaussian> {
  static constexpr bool exact = true;
  static constexpr bool field = true;
  static constexpr std::string_view name = "gaussian";
  static bool is_zero(const Gaussian& a) { return a.is_zero(); }
  static bool eq(const Gaussian& a, const Gaussian& b, Tolerance = {}) { return a == b; }
  static Gaussian exact_div(const Gaussian& a, const Gaussian& b) { return a / b; }
  static Complex to_complex(const Gaussian& a) { return a.to_complex(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr bool field = true;
  static constexpr std::string_view name = "complex";
  static bool is_zero(const Complex& a) { return a == Complex(0.0, 0.0); }
  static bool eq(const Complex& a, const Complex& b, Tolerance tol = {}) { return approx_equal(a, b, tol); }
  static Complex exact_div(const Complex& a, const Complex& b) { return a / b; }
  static Complex to_complex(const Complex& a) { return a; }
};

std::string to_string(const Complex& z);

}  // namespace twistcov
