#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rloops {

enum class ErrorKind { input, cap_exceeded, theorem_violation, precondition };

/// Base of every error thrown by the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed user input: parse failures, invalid tables, bad subgroup specs.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

/// A configured size limit was hit (group order, lattice order, search size).
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what_limit, std::size_t cap)
      : Error(ErrorKind::cap_exceeded,
              what_limit + " exceeds the configured cap of " + std::to_string(cap)),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// A result that the theory guarantees did not hold. Carries the name of the
/// broken statement and a concrete witness.
class TheoremViolation : public Error {
 public:
  TheoremViolation(std::string anchor, std::string witness)
      : Error(ErrorKind::theorem_violation, anchor + ": " + witness),
        anchor_(std::move(anchor)),
        witness_(std::move(witness)) {}

  const std::string& anchor() const noexcept { return anchor_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string anchor_;
  std::string witness_;
};

class PreconditionNotMet : public Error {
 public:
  explicit PreconditionNotMet(const std::string& what)
      : Error(ErrorKind::precondition, what) {}
};

}  // namespace rloops
