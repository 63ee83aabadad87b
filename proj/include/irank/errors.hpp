#pragma once

#include <stdexcept>
#include <string>

namespace irank {

/// Operand shapes do not match (membership tests, rank paths, file grids).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented input domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exponential enumeration would exceed its configured cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested quantity has no decision procedure for this shape.
class ScopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed number string or matrix file.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace irank
