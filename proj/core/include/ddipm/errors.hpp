// ddipm - interior-point solver for domain-driven convex problems
// Copyright 2026 the ddipm authors
// Licensed under the Apache License, Version 2.0

#ifndef DDIPM_ERRORS_HPP_
#define DDIPM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ddipm {

// Base class for all solver errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A point was evaluated outside the open domain of a barrier.
// block_index is -1 when the offending block is unknown (scalar utilities).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what, int block_index = -1)
      : Error(what), block_index_(block_index) {}
  int block_index() const { return block_index_; }

 private:
  int block_index_;
};

// The conjugate minimization diverged: the queried point is not in the
// interior of the dual domain.
class DualInteriorError : public Error {
 public:
  explicit DualInteriorError(const std::string& what, int block_index = -1)
      : Error(what), block_index_(block_index) {}
  int block_index() const { return block_index_; }

 private:
  int block_index_;
};

// Problem data failed validation (rank, dimensions, interior start).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A problem or report file could not be parsed; carries line/field context.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A linear system could not be factored or a step could not be taken.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ddipm

#endif  // DDIPM_ERRORS_HPP_
