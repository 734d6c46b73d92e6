#pragma once

// Dense matrices over the scalar domains (Eigen storage) and the exact
// determinant / characteristic polynomial / Pfaffian kernels.

#include <Eigen/Core>
#include <Eigen/LU>

#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "twistcov/error.hpp"
#include "twistcov/poly.hpp"
#include "twistcov/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<twistcov::Rational> : GenericNumTraits<twistcov::Rational> {
  using Real = twistcov::Rational;
  using NonInteger = twistcov::Rational;
  using Nested = twistcov::Rational;
  using Literal = twistcov::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<twistcov::Gaussian> : GenericNumTraits<twistcov::Gaussian> {
  using Real = twistcov::Rational;
  using NonInteger = twistcov::Gaussian;
  using Nested = twistcov::Gaussian;
  using Literal = twistcov::Gaussian;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 128
  };
  static inline int digits10() { return 0; }
};

template <class C>
struct NumTraits<twistcov::Poly<C>> : GenericNumTraits<twistcov::Poly<C>> {
  using Real = twistcov::Poly<C>;
  using NonInteger = twistcov::Poly<C>;
  using Nested = twistcov::Poly<C>;
  using Literal = twistcov::Poly<C>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 256,
    MulCost = 1024
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace twistcov {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
Matrix<S> zeros(Eigen::Index rows, Eigen::Index cols) {
  return Matrix<S>::Constant(rows, cols, S(0));
}

template <class S>
Matrix<S> identity(Eigen::Index n) {
  Matrix<S> m = zeros<S>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

/// Applies `f` entrywise, possibly changing the scalar type.
template <class S, class F>
auto map_matrix(const Matrix<S>& m, F&& f) {
  using T = std::decay_t<decltype(f(m(0, 0)))>;
  Matrix<T> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = f(m(i, j));
  return out;
}

template <class T, class S>
Matrix<T> convert(const Matrix<S>& m) {
  return map_matrix(m, [](const S& s) { return T(s); });
}

template <class S>
Matrix<Complex> to_complex(const Matrix<S>& m) {
  return map_matrix(m, [](const S& s) { return ScalarTraits<S>::to_complex(s); });
}

/// Entrywise domain equality (exact or tolerance based).
template <class S>
bool matrix_eq(const Matrix<S>& a, const Matrix<S>& b, Tolerance tol = {}) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!ScalarTraits<S>::eq(a(i, j), b(i, j), tol)) return false;
  return true;
}

/// Largest entrywise |a-b| (floating domain diagnostics).
inline double max_deviation(const Matrix<Complex>& a, const Matrix<Complex>& b) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

/// Product without relying on Eigen's expression machinery for non-POD scalars.
template <class S>
Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
  Matrix<S> out = zeros<S>(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (ScalarTraits<S>::is_zero(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        if (ScalarTraits<S>::is_zero(b(k, j))) continue;
        out(i, j) += a(i, k) * b(k, j);
      }
    }
  return out;
}

template <>
inline Matrix<Complex> multiply(const Matrix<Complex>& a, const Matrix<Complex>& b) {
  if (a.cols() != b.rows()) throw Error(Errc::DimensionMismatch, "matrix product shape mismatch");
  return a * b;
}

/// Block-diagonal a ⊕ b.
template <class S>
Matrix<S> block_diagonal(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out = zeros<S>(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

// ---------------------------------------------------------------------------
// Determinants

namespace detail {

template <class S>
std::size_t pivot_cost(const S&) {
  return 1;
}
template <class C>
std::size_t pivot_cost(const Poly<C>& p) {
  return p.size();
}

}  // namespace detail

/// Fraction-free Bareiss elimination; every division is exact.
template <class S>
S det_bareiss(Matrix<S> a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw Error(Errc::NotSquare, "determinant of a non-square matrix");
  if (n == 0) return S(1);
  S prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index best = -1;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (Eigen::Index i = k; i < n; ++i) {
      if (ScalarTraits<S>::is_zero(a(i, k))) continue;
      std::size_t c = detail::pivot_cost(a(i, k));
      if (c < best_cost) {
        best = i;
        best_cost = c;
      }
    }
    if (best < 0) return S(0);
    if (best != k) {
      a.row(k).swap(a.row(best));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const bool lead_zero = ScalarTraits<S>::is_zero(a(i, k));
      for (Eigen::Index j = k + 1; j < n; ++j) {
        S v = a(i, j) * a(k, k);
        if (!lead_zero) v -= a(i, k) * a(k, j);
        a(i, j) = ScalarTraits<S>::exact_div(v, prev);
      }
      a(i, k) = S(0);
    }
    prev = a(k, k);
  }
  S d = a(n - 1, n - 1);
  return negate ? S(0) - d : d;
}

/// Partial-pivot LU determinant for the floating domain.
inline Complex det_lu(const Matrix<Complex>& a) {
  if (a.rows() != a.cols()) throw Error(Errc::NotSquare, "determinant of a non-square matrix");
  if (a.rows() == 0) return Complex(1.0, 0.0);
  return a.partialPivLu().determinant();
}

template <class S>
S det(const Matrix<S>& a) {
  if constexpr (ScalarTraits<S>::exact) {
    return det_bareiss(a);
  } else {
    return det_lu(a);
  }
}

/// det(λI − M) in the registry `vars` extended by "lambda". Leading coefficient 1.
template <class C>
Poly<C> charpoly(const Matrix<Poly<C>>& m, const RegistryPtr& vars = nullptr) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw Error(Errc::NotSquare, "characteristic polynomial of a non-square matrix");
  RegistryPtr reg = vars;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) reg = merge_registries(reg, m(i, j).registry());
  RegistryPtr with_lambda = extend_registry(reg, "lambda");
  const std::size_t lam = with_lambda->size() - 1;
  Matrix<Poly<C>> a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = (-m(i, j)).with_registry(with_lambda);
      if (i == j) a(i, j) += Poly<C>::variable(with_lambda, lam);
    }
  if (n == 0) return Poly<C>::term(with_lambda, Monomial::one(), C(1));
  return det_bareiss(std::move(a)).with_registry(with_lambda);
}

template <class C>
  requires(ScalarTraits<C>::exact && !std::is_same_v<C, Poly<Rational>> && !std::is_same_v<C, Poly<Gaussian>>)
Poly<C> charpoly(const Matrix<C>& m, const RegistryPtr& vars = nullptr) {
  return charpoly(convert<Poly<C>>(m), vars);
}

/// Index of "lambda" in a characteristic polynomial's registry.
template <class C>
std::size_t lambda_index(const Poly<C>& p) {
  if (!p.registry()) throw Error(Errc::RegistryMismatch, "polynomial has no lambda variable");
  auto idx = p.registry()->index_of("lambda");
  if (!idx) throw Error(Errc::RegistryMismatch, "polynomial has no lambda variable");
  return *idx;
}

// ---------------------------------------------------------------------------
// Inverses (fields only)

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  static_assert(ScalarTraits<S>::field, "inverse requires a field");
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw Error(Errc::NotSquare, "inverse of a non-square matrix");
  if constexpr (!ScalarTraits<S>::exact) {
    if (n == 0) return m;
    auto lu = m.fullPivLu();
    if (!lu.isInvertible()) throw Error(Errc::Singular, "matrix is singular");
    return lu.inverse();
  } else {
    Matrix<S> a = m;
    Matrix<S> inv = identity<S>(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      Eigen::Index p = k;
      while (p < n && ScalarTraits<S>::is_zero(a(p, k))) ++p;
      if (p == n) throw Error(Errc::Singular, "matrix is singular");
      a.row(k).swap(a.row(p));
      inv.row(k).swap(inv.row(p));
      S piv_inv = S(1) / a(k, k);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(k, j) *= piv_inv;
        inv(k, j) *= piv_inv;
      }
      for (Eigen::Index i = 0; i < n; ++i) {
        if (i == k || ScalarTraits<S>::is_zero(a(i, k))) continue;
        S f = a(i, k);
        for (Eigen::Index j = 0; j < n; ++j) {
          a(i, j) -= f * a(k, j);
          inv(i, j) -= f * inv(k, j);
        }
      }
    }
    return inv;
  }
}

// ---------------------------------------------------------------------------
// Pfaffians

inline constexpr Eigen::Index kMaxExactPfaffian = 16;

template <class S>
void check_skew(const Matrix<S>& m, Tolerance tol = {}) {
  if (m.rows() != m.cols()) throw Error(Errc::NotSquare, "Pfaffian of a non-square matrix");
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i; j < m.cols(); ++j)
      if (!ScalarTraits<S>::eq(m(i, j), S(0) - m(j, i), tol))
        throw Error(Errc::NotSkewSymmetric, "matrix is not skew-symmetric");
  if (m.rows() % 2 != 0) throw Error(Errc::OddDimension, "Pfaffian of an odd-dimensional matrix");
}

namespace detail {

template <class S>
S pfaffian_expand(const Matrix<S>& m, std::uint32_t remaining, std::unordered_map<std::uint32_t, S>& memo) {
  if (remaining == 0) return S(1);
  if (auto it = memo.find(remaining); it != memo.end()) return it->second;
  const int i = std::countr_zero(remaining);
  const std::uint32_t rest = remaining & ~(std::uint32_t(1) << i);
  S total(0);
  bool positive = true;
  for (std::uint32_t r = rest; r != 0; r &= r - 1) {
    const int j = std::countr_zero(r);
    if (!ScalarTraits<S>::is_zero(m(i, j))) {
      S term = m(i, j) * pfaffian_expand(m, rest & ~(std::uint32_t(1) << j), memo);
      if (positive) {
        total += term;
      } else {
        total -= term;
      }
    }
    positive = !positive;
  }
  memo.emplace(remaining, total);
  return total;
}

}  // namespace detail

/// Skew-symmetric Parlett–Reid (LTL^T) reduction with pivoting.
inline Complex pfaffian_ltl(Matrix<Complex> a) {
  const Eigen::Index n = a.rows();
  Complex pf(1.0, 0.0);
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index kp = k + 1;
    double best = std::abs(a(k + 1, k));
    for (Eigen::Index i = k + 2; i < n; ++i)
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        kp = i;
      }
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      pf = -pf;
    }
    if (a(k + 1, k) == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    pf *= a(k, k + 1);
    if (k + 2 < n) {
      const Eigen::Index r = n - k - 2;
      Eigen::VectorXcd tau = a.row(k).tail(r).transpose() / a(k, k + 1);
      Eigen::VectorXcd col = a.col(k + 1).tail(r);
      a.bottomRightCorner(r, r) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

/// Pfaffian of a skew-symmetric even-dimensional matrix. Exact domains use the
/// memoized first-row expansion (n ≤ 16); the floating domain uses pfaffian_ltl.
template <class S>
S pfaffian(const Matrix<S>& m, Tolerance tol = {}) {
  check_skew(m, tol);
  if constexpr (ScalarTraits<S>::exact) {
    if (m.rows() > kMaxExactPfaffian)
      throw Error(Errc::TooLargeForExactExpansion,
                  "exact Pfaffian limited to dimension " + std::to_string(kMaxExactPfaffian));
    std::unordered_map<std::uint32_t, S> memo;
    const std::uint32_t all = m.rows() == 0 ? 0u : ((std::uint32_t(1) << m.rows()) - 1);
    return detail::pfaffian_expand(m, all, memo);
  } else {
    return pfaffian_ltl(m);
  }
}

}  // namespace twistcov
