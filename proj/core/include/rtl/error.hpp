#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rtl {

/// Base of every error raised by the library. Each subclass maps to one
/// failure class of the public contract; the CLI maps them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Variable or assignment outside the expected scope.
class ScopeError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured variable cap.
class EnumerationLimitError : public Error {
 public:
  EnumerationLimitError(std::size_t vars, std::size_t cap)
      : Error("enumeration limit exceeded: " + std::to_string(vars) +
              " variables, cap is " + std::to_string(cap)),
        vars_(vars),
        cap_(cap) {}

  std::size_t vars() const noexcept { return vars_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t vars_;
  std::size_t cap_;
};

/// Bounded search (decomposition, subsets) would exceed its cap.
class SearchLimitError : public Error {
 public:
  using Error::Error;
};

class MembershipError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// The two clauses share no complementary variable.
class NotConnectedError : public ResolutionError {
 public:
  using ResolutionError::ResolutionError;
};

/// The two clauses clash on two or more variables, so every resolvent is a
/// tautology.
class TautologyError : public ResolutionError {
 public:
  using ResolutionError::ResolutionError;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input is outside the syntactic fragment an operation requires (Horn, 3CNF).
class ClassificationError : public Error {
 public:
  using Error::Error;
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Graph input violates a structural requirement (cubic, simple, connected).
class StructureError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace rtl
