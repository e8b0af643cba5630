#pragma once

#include <stdexcept>
#include <string>

namespace toric_bm {

/// Malformed or invalid fan input (bad document, non-primitive ray, failed
/// fan checks).
class FanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical self-consistency check failed (d^2 != 0, nonzero homology
/// outside the geometric range, oracle disagreement). Indicates a bug rather
/// than bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace toric_bm
