#ifndef RDW_ERROR_HPP
#define RDW_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdw {

/// Base of every error raised by the library. `kind()` is a stable,
/// machine-parsable tag that the CLI prints and maps to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

/// Invalid arguments or a violated precondition (exit code 2).
class UsageError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "usage"; }
};

/// Malformed input data such as a defining-graph file (exit code 2).
class ConfigError : public UsageError {
 public:
  using UsageError::UsageError;
  const char* kind() const noexcept override { return "config"; }
};

/// A computation would exceed an element cap or a precomputed ball (exit 3).
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::optional<std::size_t> radius = std::nullopt)
      : Error(what), radius_(radius) {}
  const char* kind() const noexcept override { return "capacity"; }
  std::optional<std::size_t> radius() const noexcept { return radius_; }

 private:
  std::optional<std::size_t> radius_;
};

/// A verified property failed, e.g. a mismatch reported by a checker (exit 4).
class CheckFailure : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "check"; }
};

/// A vertex triple whose interval intersection is not a single vertex.
class MedianViolation : public CheckFailure {
 public:
  MedianViolation(const std::string& what, std::vector<std::string> intersection)
      : CheckFailure(what), intersection_(std::move(intersection)) {}
  const char* kind() const noexcept override { return "median-violation"; }
  const std::vector<std::string>& intersection() const noexcept { return intersection_; }

 private:
  std::vector<std::string> intersection_;
};

}  // namespace rdw

#endif  // RDW_ERROR_HPP
