//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MS4WB_ERROR_HPP_
#define MS4WB_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ms4wb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: frames, partitions, point maps, valuations.
class InputError : public Error {
 public:
  using Error::Error;
};

// A structural invariant of a frame (quasi-order, equivalence, RE <= ER) does
// not hold.
class FrameError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string &what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An operation refused to run because its precondition fails (e.g. quotient
// by an incorrect partition).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Exhaustive work would exceed a configured cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// A postcondition verified by the library failed. Signals a bug, not bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace ms4wb

#endif  // MS4WB_ERROR_HPP_
