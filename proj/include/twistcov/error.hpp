#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twistcov {

enum class Errc {
  // graph / homotopy / covering
  NotConnected,
  NotALoop,
  InvalidRotation,
  NotPlanar,
  StartNotInFiber,
  VertexNotInBaseFiber,
  CoverNotConnected,
  TransversalCheckFailed,
  NotInSubgroup,
  // algebra
  RegistryMismatch,
  DivisionByZeroPoly,
  NotSquare,
  NotSkewSymmetric,
  OddDimension,
  TooLargeForExactExpansion,
  DimensionMismatch,
  Singular,
  // representations and operators
  DomainMismatch,
  NotNormal,
  NotAbelian,
  InternalCosetError,
  MissingWeight,
  MissingConnectionEntry,
  WeightsNotSymmetric,
  // certificates
  DivisionFailed,
  IrreducibleCountMismatch,
  EvenDegree,
  NotPlanarQuotient,
  VoltageNotAntisymmetric,
  HNotSubgroup,
  QuotientConstructionFailed,
  // oracles / budgets
  BudgetExceeded,
  TooLarge,
  // input
  ParseError,
  SemanticError,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace twistcov
