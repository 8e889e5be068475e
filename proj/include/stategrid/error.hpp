#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stategrid {

/// Base class for every domain error raised by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DuplicateCell : public Error {
public:
  explicit DuplicateCell(std::uint64_t id)
      : Error("duplicate cell id " + std::to_string(id)), id(id) {}
  std::uint64_t id;
};

/// A cell whose content contradicts its coordinate or tags.
class InvalidCell : public Error {
public:
  using Error::Error;
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, std::string expected)
      : Error("syntax error at position " + std::to_string(position) +
              ": expected " + expected),
        position(position), expected(std::move(expected)) {}
  std::size_t position;
  std::string expected;
};

class UnknownSymbol : public Error {
public:
  explicit UnknownSymbol(std::string name)
      : Error("unknown symbol '" + name + "'"), name(std::move(name)) {}
  std::string name;
};

class ArityMismatch : public Error {
public:
  ArityMismatch(std::string name, std::size_t got, std::size_t want)
      : Error("arity mismatch for '" + name + "': got " + std::to_string(got) +
              ", want " + std::to_string(want)),
        name(std::move(name)), got(got), want(want) {}
  std::string name;
  std::size_t got;
  std::size_t want;
};

/// Static kind error: a name used in a position its kind does not allow.
class IllFormed : public Error {
public:
  using Error::Error;
};

class UnregisteredSymbol : public Error {
public:
  explicit UnregisteredSymbol(std::string name)
      : Error("no depth registered for '" + name + "'"), name(std::move(name)) {}
  std::string name;
};

/// A malformed query: the name is neither bound nor declared.
class UnboundVariable : public Error {
public:
  explicit UnboundVariable(std::string name)
      : Error("unbound variable '" + name + "'"), name(std::move(name)) {}
  std::string name;
};

class TypeMismatch : public Error {
public:
  using Error::Error;
};

class ObjectNotFree : public Error {
public:
  explicit ObjectNotFree(std::string name)
      : Error("object '" + name + "' is not free in the judgment body"),
        name(std::move(name)) {}
  std::string name;
};

class SubsetViolation : public Error {
public:
  using Error::Error;
};

class KindMismatch : public Error {
public:
  explicit KindMismatch(std::string name, const std::string& why = "kinds differ")
      : Error("translation of '" + name + "' rejected: " + why), name(std::move(name)) {}
  std::string name;
};

class UnrelatedUniverses : public Error {
public:
  using Error::Error;
};

class NotAFuturePrediction : public Error {
public:
  NotAFuturePrediction(std::uint32_t at, std::uint32_t t_max)
      : Error("prediction target " + std::to_string(at) +
              " is not after the current time " + std::to_string(t_max)) {}
};

class TimeNotMaterialized : public Error {
public:
  explicit TimeNotMaterialized(std::uint32_t t)
      : Error("time " + std::to_string(t) + " not materialized"), time(t) {}
  std::uint32_t time;
};

class FormatError : public Error {
public:
  FormatError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line(line) {}
  std::size_t line;
};

class VersionMismatch : public Error {
public:
  using Error::Error;
};

} // namespace stategrid
