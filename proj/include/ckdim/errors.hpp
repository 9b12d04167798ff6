#pragma once

#include <stdexcept>
#include <string>

namespace ckdim {

// A computation was requested beyond the brute-force envelope.
class FeasibilityError : public std::runtime_error {
 public:
  FeasibilityError(const std::string& what, long max_supported)
      : std::runtime_error(what), max_supported_(max_supported) {}
  long max_supported() const { return max_supported_; }

 private:
  long max_supported_;
};

// The requested mode needs constants that were not supplied.
class ModeUnavailableError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dominance between growth terms could not be decided exactly.
class AmbiguousDominanceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ckdim
