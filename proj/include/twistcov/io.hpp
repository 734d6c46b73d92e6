#pragma once

// Line-oriented input documents and plain-text reports for the command-line tool.
//
//   vertices 3
//   edge 0 1                 undirected edge, expanded to e: 0→1 and ē = e+1: 1→0
//   arc 0 1 1                directed edge with the index of its inverse
//   weights symbolic         or: weights rational 1 2 1/2 | gaussian 1 i | complex 0.5+1i ...
//   rotation 0 0 5 6         cyclic order of outgoing directed edges at a vertex
//   outer-face 1
//   voltage 2                permutation voltage of degree 2, then one line per generator
//   perm 0 (0 1)
//   torus 0 1 0              ℤ² voltage (a, b) on unoriented edge 0 (its inverse gets (−a, −b))
//   rep rational 2           representation of degree 2, then one line per generator
//   gen 0 1 1; 0 1           matrix rows separated by ';'
//   irrep complex 1          irreducible representations (same syntax as rep)
//   subgroup 0 2             Galois group elements (fiber positions over vertex 0)
//
// '#' starts a comment. Edge weights are listed per unoriented edge in the order of
// the canonical (lower index) directed representative.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistcov/covering.hpp"
#include "twistcov/graph.hpp"
#include "twistcov/representation.hpp"
#include "twistcov/theorems.hpp"

namespace twistcov {

enum class Domain { Symbolic, Rational, Gaussian, Complex };

std::string domain_name(Domain d);

struct RepSpec {
  Domain domain = Domain::Rational;
  int degree = 1;
  std::vector<Matrix<Gaussian>> exact;   // rational / gaussian domains
  std::vector<Matrix<Complex>> numeric;  // complex domain
  int rank() const { return static_cast<int>(domain == Domain::Complex ? numeric.size() : exact.size()); }
};

struct InputDocument {
  Graph graph;
  bool undirected = true;
  Domain weight_domain = Domain::Symbolic;
  std::vector<Gaussian> exact_weights;    // per unoriented edge
  std::vector<Complex> complex_weights;   // per unoriented edge
  std::optional<RotationSystem> rotation;
  std::optional<int> outer_face;
  std::optional<VoltageAssignment> voltage;
  std::optional<TorusVoltage> torus;
  std::optional<RepSpec> rep;
  std::vector<RepSpec> irreducibles;
  std::optional<std::vector<int>> subgroup;
};

/// Throws Error(ParseError) with "line N: reason" or Error(SemanticError).
InputDocument parse_input(const std::string& text);
InputDocument read_input_file(const std::string& path);

/// Normalized text form; parse_input(serialize(d)) reproduces d.
std::string serialize(const InputDocument& doc);

/// Cycle notation "(0 2)(1 3)" or "()" for a permutation of {0..degree-1}.
Permutation parse_cycles(const std::string& text, int degree);
std::string format_cycles(const Permutation& p);

std::string format_gaussian(const Gaussian& g);
Complex parse_complex(const std::string& text);
std::string format_complex(const Complex& z);

EdgeWeights<RatPoly> document_weights(const InputDocument& doc);
EdgeWeights<Complex> document_complex_weights(const InputDocument& doc);

template <class S>
Representation<S> representation_from_spec(const RepSpec& spec);

struct RunOptions {
  Tolerance tol;
  int max_length = 8;
  std::optional<int> degree;
  int m = 2;
  int n = 2;
  unsigned seed = 1;
  bool timing = false;
};

enum ExitCode : int { Pass = 0, Falsified = 1, InputError = 2, BudgetExceededExit = 3 };

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> payload;
  std::vector<std::pair<std::string, bool>> checks;
  std::optional<std::string> error;
  std::optional<double> seconds;
  int exit_code = Pass;

  void add(std::string key, std::string value) { payload.emplace_back(std::move(key), std::move(value)); }
  void check(std::string name, bool ok) { checks.emplace_back(std::move(name), ok); }
  std::string render() const;
};

const std::vector<std::string>& command_names();

/// Runs one command; errors are caught and mapped to exit codes.
Report run(const std::string& command, const InputDocument& doc, const RunOptions& opts);

int exit_code_for(Errc code);

}  // namespace twistcov
