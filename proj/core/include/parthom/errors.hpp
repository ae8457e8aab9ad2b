#pragma once

#include <stdexcept>
#include <string>

namespace parthom {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the brute-force evaluators instead of truncating silently.
class OracleGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An evaluation plan was paired with a matrix it was not built from,
// or a Hard verdict was handed to the evaluator.
class WitnessMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace parthom
