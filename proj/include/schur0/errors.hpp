#pragma once

#include <stdexcept>
#include <string>

namespace schur0 {

/// A size guard (r <= 64, table dimension caps, factorial guards) was exceeded.
class GuardExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different Ξ(n,r) or otherwise do not fit together.
class ShapeMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NotAnIdeal : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NotIdempotent : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace schur0
