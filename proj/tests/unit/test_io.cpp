#include <string>

#include "doctest.h"
#include "twistcov/io.hpp"

using namespace twistcov;

namespace {

const char* kHexagon =
    "# the hexagon over the triangle\n"
    "vertices 3\n"
    "edge 0 1\n"
    "edge 1 2\n"
    "edge 2 0   # closing edge\n"
    "weights rational 1 2 1/2\n"
    "voltage 2\n"
    "perm 0 (0 1)\n";

Errc parse_error_code(const std::string& text) {
  try {
    parse_input(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("input was accepted");
  return Errc::ParseError;
}

std::string parse_error_message(const std::string& text) {
  try {
    parse_input(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("parsing a document") {
    InputDocument d = parse_input(kHexagon);
    CHECK(d.graph.num_vertices() == 3);
    CHECK(d.graph.num_edges() == 6);
    CHECK(d.graph.inv(4) == 5);
    CHECK(d.weight_domain == Domain::Rational);
    REQUIRE(d.exact_weights.size() == 3);
    CHECK(d.exact_weights[2] == Gaussian(Rational(1, 2)));
    REQUIRE(d.voltage);
    CHECK(d.voltage->degree == 2);
    CHECK(d.voltage->perms[0] == Permutation{1, 0});
  }

  TEST_CASE("serialization round trip") {
    const std::string text =
        "vertices 2\n"
        "edge 0 1\n"
        "edge 1 1\n"
        "weights gaussian 1+i -1/2\n"
        "rep gaussian 1\n"
        "gen 0 i\n"
        "gen 1 -1\n"
        "subgroup 0\n";
    InputDocument d = parse_input(text);
    std::string once = serialize(d);
    InputDocument again = parse_input(once);
    CHECK(serialize(again) == once);
    CHECK(again.exact_weights == d.exact_weights);
    REQUIRE(again.rep);
    CHECK(again.rep->exact[0](0, 0) == Gaussian::i());
    CHECK(again.subgroup == d.subgroup);
  }

  TEST_CASE("directed arcs with explicit inverses") {
    InputDocument d = parse_input("vertices 2\narc 0 1 1\narc 1 0 0\n");
    CHECK(d.graph.inv(0) == 1);
    CHECK(validate_graph(d.graph).ok());
  }

  TEST_CASE("cycle notation") {
    CHECK(parse_cycles("(0 2)(1 3)", 4) == Permutation{2, 3, 0, 1});
    CHECK(parse_cycles("()", 3) == Permutation{0, 1, 2});
    CHECK(format_cycles(Permutation{1, 2, 0, 3}) == "(0 1 2)");
    CHECK(format_cycles(Permutation{0, 1}) == "()");
    CHECK_THROWS_AS(parse_cycles("(0 1)(1 2)", 3), Error);
    CHECK_THROWS_AS(parse_cycles("(0 5)", 3), Error);
    CHECK_THROWS_AS(parse_cycles("(0 1", 3), Error);
  }

  TEST_CASE("complex and gaussian text") {
    CHECK(parse_complex("0.5+1i") == Complex(0.5, 1.0));
    CHECK(parse_complex("-2") == Complex(-2.0, 0.0));
    CHECK(parse_complex("-i") == Complex(0.0, -1.0));
    CHECK(approx_equal(parse_complex(format_complex(Complex(1.25, -3.5))), Complex(1.25, -3.5)));
    CHECK(Gaussian::parse(format_gaussian(Gaussian(Rational(1, 3), Rational(-2)))) ==
          Gaussian(Rational(1, 3), Rational(-2)));
  }

  TEST_CASE("malformed input reports the line") {
    CHECK(parse_error_code("vertices 3\nedge 0 1\nedgy 1 2\n") == Errc::ParseError);
    CHECK(parse_error_message("vertices 3\nedge 0 1\nedgy 1 2\n").find("line 3") != std::string::npos);
    CHECK(parse_error_code("vertices 2\nedge 0 7\n") != Errc::ParseError);
    CHECK(parse_error_code("vertices 3\nedge 0 1\nweights rational 1 2\n") != Errc::ParseError);
    CHECK(parse_error_code("vertices 2\nedge 0 1\nvoltage 2\nperm 0 (0 1)(1 0)\n") != Errc::ParseError);
    CHECK(parse_error_code("vertices 2\nedge 0 1\nrep rational 2\ngen 0 1 0\n") != Errc::ParseError);
  }

  TEST_CASE("weights from documents") {
    InputDocument d = parse_input(kHexagon);
    auto w = document_weights(d);
    CHECK(w[4] == RatPoly(Rational(1, 2)));
    auto sym = document_weights(parse_input("vertices 2\nedge 0 1\nweights symbolic\n"));
    CHECK_FALSE(sym[0].is_constant());
    auto unit = document_complex_weights(parse_input("vertices 2\nedge 0 1\nweights symbolic\n"));
    CHECK(unit[0] == Complex(1.0, 0.0));
  }

  TEST_CASE("representations from documents") {
    InputDocument d = parse_input("vertices 1\nedge 0 0\nrep rational 2\ngen 0 1 1; 0 1\n");
    auto r = representation_from_spec<Rational>(*d.rep);
    CHECK(r.degree == 2);
    CHECK(r.inverses[0](0, 1) == Rational(-1));
    CHECK_THROWS_AS(parse_input("vertices 1\nedge 0 0\nrep rational 2\ngen 0 1 1; 1 1\n"), Error);
  }

  TEST_CASE("exit codes") {
    CHECK(exit_code_for(Errc::ParseError) == InputError);
    CHECK(exit_code_for(Errc::CoverNotConnected) == InputError);
    CHECK(exit_code_for(Errc::BudgetExceeded) == BudgetExceededExit);
    CHECK(exit_code_for(Errc::TooLargeForExactExpansion) == BudgetExceededExit);
    CHECK(exit_code_for(Errc::InternalCosetError) == Falsified);
  }

  TEST_CASE("running commands") {
    InputDocument d = parse_input(kHexagon);
    RunOptions opts;
    Report validate = run("validate", d, opts);
    CHECK(validate.exit_code == Pass);
    Report trees = run("trees", d, opts);
    CHECK(trees.exit_code == Pass);
    CHECK_FALSE(trees.checks.empty());
    std::string text = trees.render();
    CHECK(text.find("command=trees") != std::string::npos);
    CHECK(text.find("exit_code=0") != std::string::npos);
    Report cover = run("cover", parse_input("vertices 3\nedge 0 1\nedge 1 2\nedge 2 0\nvoltage 2\nperm 0 ()\n"), opts);
    CHECK(cover.exit_code == InputError);
    CHECK(cover.error);
    CHECK(run("no-such-command", d, opts).exit_code == InputError);
  }

  TEST_CASE("every listed command handles an empty graph without crashing") {
    InputDocument d = parse_input("vertices 1\n");
    for (const std::string& c : command_names()) {
      Report r = run(c, d, RunOptions{});
      CHECK(r.exit_code >= 0);
      CHECK(r.exit_code <= 3);
    }
  }
}
