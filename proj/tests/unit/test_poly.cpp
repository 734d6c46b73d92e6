#include "doctest.h"
#include "twistcov/poly.hpp"

using namespace twistcov;

namespace {

RatPoly var(const RegistryPtr& r, std::size_t i) { return RatPoly::variable(r, i); }

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("ring identities") {
    auto r = make_registry({"x", "y"});
    RatPoly x = var(r, 0), y = var(r, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y) * (x + y) == x * x + RatPoly(2) * x * y + y * y);
    CHECK((x - x).is_zero());
    CHECK((x * y).total_degree() == 2);
    CHECK((x * x * y).degree_in(0) == 2);
  }

  TEST_CASE("evaluation agrees with arithmetic on values") {
    auto r = make_indexed_registry("x", 3);
    RatPoly p = var(r, 0) * var(r, 1) - RatPoly(Rational(3, 2)) * var(r, 2) + RatPoly(5);
    std::vector<Rational> v{Rational(2), Rational(-1, 3), Rational(4)};
    CHECK(p.evaluate(v) == Rational(2) * Rational(-1, 3) - Rational(6) + Rational(5));
    CHECK(p.substitute(2, Rational(4)).substitute(1, Rational(-1, 3)).substitute(0, Rational(2)).constant_term() ==
          p.evaluate(v));
  }

  TEST_CASE("exact division") {
    auto r = make_registry({"x", "y"});
    RatPoly x = var(r, 0), y = var(r, 1);
    RatPoly a = x * x * y - y * y * y;
    auto q = a.exact_div(x + y);
    REQUIRE(q);
    CHECK(*q * (x + y) == a);
    CHECK_FALSE((x * x + RatPoly(1)).exact_div(x + y));
    CHECK_THROWS_AS(a.exact_div(RatPoly()), Error);
  }

  TEST_CASE("coefficient extraction") {
    auto r = make_registry({"x", "lambda"});
    RatPoly x = var(r, 0), l = var(r, 1);
    RatPoly p = l * l * x + RatPoly(3) * l * x * x - RatPoly(7);
    CHECK(p.coefficient_of(1, 2) == x);
    CHECK(p.coefficient_of(1, 1) == RatPoly(3) * x * x);
    CHECK(p.coefficient_of(1, 0) == RatPoly(-7));
  }

  TEST_CASE("registries merge by prefix") {
    auto a = make_registry({"x"});
    auto b = extend_registry(a, "lambda");
    CHECK(merge_registries(a, b) == b);
    CHECK(merge_registries(nullptr, a) == a);
    CHECK_THROWS_AS(merge_registries(make_registry({"y"}), a), Error);
    CHECK_THROWS_AS(RatPoly::variable(a, 3), Error);
  }

  TEST_CASE("text form") {
    auto r = make_registry({"x", "y"});
    RatPoly p = RatPoly(3) * var(r, 0) * var(r, 0) * var(r, 1) - RatPoly(2) * var(r, 1);
    CHECK(p.to_string() == "3*x^2*y - 2*y");
    CHECK(RatPoly().to_string() == "0");
  }

  TEST_CASE("gaussian coefficients") {
    auto r = make_registry({"x"});
    GaussPoly x = GaussPoly::variable(r, 0);
    GaussPoly i(Gaussian::i());
    CHECK((x + i) * (x - i) == x * x + GaussPoly(1));
    CHECK(((x + i) * (x + i)).is_integral());
  }
}
