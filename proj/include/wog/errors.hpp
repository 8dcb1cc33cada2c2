#ifndef WOG_ERRORS_HPP
#define WOG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wog {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive routine was asked to run on an input larger than its
/// configured enumeration bound.
class BoundExceeded : public Error {
 public:
  BoundExceeded(const std::string& what_bound, std::size_t bound, std::size_t actual)
      : Error(what_bound + " bound exceeded: " + std::to_string(actual) + " > " +
              std::to_string(bound)),
        bound_(bound),
        actual_(actual) {}

  std::size_t bound() const noexcept { return bound_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t bound_;
  std::size_t actual_;
};

/// A structural invariant was violated. `invariant()` names it.
class ValidationError : public Error {
 public:
  ValidationError(std::string invariant, const std::string& detail)
      : Error(invariant + ": " + detail), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string code, const std::string& detail)
      : Error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class NotACover : public PreconditionError {
 public:
  explicit NotACover(const std::string& detail) : PreconditionError("NotACover", detail) {}
};

class MissingOrientation : public PreconditionError {
 public:
  explicit MissingOrientation(const std::string& detail)
      : PreconditionError("MissingOrientation", detail) {}
};

class AmbientMismatch : public PreconditionError {
 public:
  AmbientMismatch(std::size_t a, std::size_t b)
      : PreconditionError("AmbientMismatch",
                          std::to_string(a) + " vs " + std::to_string(b)) {}
};

class ZeroIdeal : public PreconditionError {
 public:
  ZeroIdeal() : PreconditionError("ZeroIdeal", "operation needs a nonzero ideal") {}
};

class UnitIdeal : public PreconditionError {
 public:
  UnitIdeal() : PreconditionError("UnitIdeal", "operation needs a proper ideal") {}
};

class NotSquarefree : public PreconditionError {
 public:
  NotSquarefree() : PreconditionError("NotSquarefree", "ideal has a non-squarefree generator") {}
};

class ExponentOverflow : public PreconditionError {
 public:
  ExponentOverflow() : PreconditionError("ExponentOverflow", "64-bit exponent overflow") {}
};

class NotAPath3 : public PreconditionError {
 public:
  explicit NotAPath3(const std::string& detail) : PreconditionError("NotAPath3", detail) {}
};

class NotA5Cycle : public PreconditionError {
 public:
  explicit NotA5Cycle(const std::string& detail) : PreconditionError("NotA5Cycle", detail) {}
};

class NoPendantPerfectMatching : public PreconditionError {
 public:
  explicit NoPendantPerfectMatching(const std::string& detail)
      : PreconditionError("NoPendantPerfectMatching", detail) {}
};

}  // namespace wog

#endif  // WOG_ERRORS_HPP
