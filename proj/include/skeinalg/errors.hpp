#pragma once

#include <stdexcept>
#include <string>

namespace skeinalg {

// Each error family maps onto one CLI exit code (see tools/skeinalg.cpp).

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tangle width bookkeeping failure, or an open tangle where a closed one is required.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algebra, homomorphism, bimodule or ideal failed an axiom check.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A word or command referenced a state/costate/observable label that does not exist.
class LabelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke a precondition (dimension mismatch, incompatible middle algebra, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace skeinalg
