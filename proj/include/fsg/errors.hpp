#pragma once

#include <stdexcept>
#include <string>

namespace fsg {

// Bad argument value: a documented precondition was violated.
class parameter_error : public std::invalid_argument {
 public:
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// Structurally fine request that exceeds a configured limit (size, budget).
class capability_error : public std::runtime_error {
 public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

// A walk, move, or cycle vector failed structural validation.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A state that is unreachable when the documented hypotheses hold.
class invariant_violation : public std::logic_error {
 public:
  explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

// A search that a proven statement guarantees must succeed came up empty.
class theorem_violation : public std::logic_error {
 public:
  explicit theorem_violation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fsg
