#include "doctest.h"
#include "twistcov/error.hpp"
#include "twistcov/scalar.hpp"

using namespace twistcov;

TEST_SUITE("scalar") {
  TEST_CASE("rationals are kept in lowest terms") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(3, 4).to_string() == "3/4");
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(2, 3) * Rational(3, 2)).is_integer());
    CHECK(Rational(-7, 3).inverse() == Rational(-3, 7));
  }

  TEST_CASE("rational parsing") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK_THROWS_AS(Rational::parse("3/"), Error);
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
    CHECK_THROWS_AS(Rational(0).inverse(), Error);
  }

  TEST_CASE("gaussian arithmetic matches the complex numbers") {
    const Gaussian a(Rational(1, 2), Rational(3));
    const Gaussian b(Rational(-2), Rational(1, 3));
    const Complex ca(0.5, 3.0), cb(-2.0, 1.0 / 3.0);
    CHECK(approx_equal((a * b).to_complex(), ca * cb));
    CHECK(approx_equal((a / b).to_complex(), ca / cb));
    CHECK(Gaussian::i() * Gaussian::i() == Gaussian(-1));
    CHECK(a * a.inverse() == Gaussian(1));
    CHECK(a.norm() == Rational(37, 4));
  }

  TEST_CASE("gaussian parsing") {
    CHECK(Gaussian::parse("-i") == -Gaussian::i());
    CHECK(Gaussian::parse("2i") == Gaussian(Rational(0), Rational(2)));
    CHECK(Gaussian::parse("1/2+3/4i") == Gaussian(Rational(1, 2), Rational(3, 4)));
    CHECK(Gaussian::parse("1-i") == Gaussian(Rational(1), Rational(-1)));
    CHECK_THROWS_AS(Gaussian::parse("1+"), Error);
  }

  TEST_CASE("tolerance comparison") {
    Tolerance tol{1e-6, 1e-9};
    CHECK(approx_equal(Complex(1.0, 0.0), Complex(1.0 + 1e-8, 0.0), tol));
    CHECK_FALSE(approx_equal(Complex(1.0, 0.0), Complex(1.0 + 1e-4, 0.0), tol));
    CHECK(approx_equal(Complex(0.0, 0.0), Complex(1e-10, 0.0), tol));
  }
}
