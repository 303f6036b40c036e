#pragma once

#include <stdexcept>
#include <string>

namespace ugbs {

/// Invalid parameter values or malformed configuration. CLI exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input outside the validity range of an empirical model. CLI exit code 2.
class ModelRangeError : public std::domain_error {
 public:
  explicit ModelRangeError(const std::string& what) : std::domain_error(what) {}
};

/// A link-budget equation has no solution for the given inputs. CLI exit code 3.
class NoSolutionError : public std::runtime_error {
 public:
  explicit NoSolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// Bistatic exciter placed beyond the activation distance. CLI exit code 3.
class InfeasibleExcitationError : public NoSolutionError {
 public:
  explicit InfeasibleExcitationError(const std::string& what)
      : NoSolutionError(what) {}
};

}  // namespace ugbs
