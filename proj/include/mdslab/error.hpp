#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mdslab {

enum class ErrorKind {
  NotPrime,
  NotIrreducible,
  NoModulusNeeded,
  BadModulus,
  FieldTooLarge,
  DivisionByZero,
  NotSquare,
  AmbientMismatch,
  LengthMismatch,
  ZeroPolynomial,
  BadK,
  BadShape,
  BadS,
  BadDims,
  OddCharacteristic,
  NotMds,
  DependentPair,
  RankDeficient,
  Unsatisfiable,
  TooLarge,
  BudgetExceeded,
  ParseError,
  EncodingOutOfRange,
  Usage,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace mdslab
