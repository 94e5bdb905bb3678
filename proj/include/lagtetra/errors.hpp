#pragma once

#include <stdexcept>
#include <string>

namespace lagtet {

enum class Err {
  DegenerateInput,
  ZeroForm,
  NotLagrangian,
  NotOnQuadric,
  NotRegular,
  NotOnAxis,
  UndefinedProjection,
  NotInOmega,
  AmbiguousBoundary,
  DomainError,
  NumericalDegeneracy,
  NotUnimodular,
  InconsistentSequence,
  ParseError,
};

const char* err_name(Err e);

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& what)
      : std::runtime_error(std::string(err_name(c)) + ": " + what), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& what) { throw Error(c, what); }

}  // namespace lagtet
