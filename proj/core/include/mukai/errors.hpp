#pragma once

#include <stdexcept>
#include <string>

#include "mukai/integer.hpp"

namespace mukai {

// Input violates an operation's precondition (wrong square, wrong dimension,
// unknown block name, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value that must be integral came out fractional. Never rounded.
class IntegralityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An internal consistency check failed. Indicates a bug, not bad input.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotInGammaV : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A bounded witness search came back empty. Existence is not disproved; the
// radius was too small.
class WitnessNotFound : public std::runtime_error {
 public:
  WitnessNotFound(std::string const& what, int radius)
      : std::runtime_error(what + " (search radius " + std::to_string(radius) + ")"),
        radius_(radius) {}
  int radius() const { return radius_; }

 private:
  int radius_;
};

}  // namespace mukai
