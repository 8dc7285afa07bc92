#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace loewner {

/// Failure classes. The CLI maps these onto process exit codes.
enum class ErrorKind {
  Input,           // malformed or inconsistent input data
  Domain,          // argument outside the mathematical domain of an operation
  Geometry,        // curve is not simple, leaves the half-plane, ...
  Refinement,      // the discretization is too coarse for the requested step
  NonConvergence,  // an iterative method ran out of budget
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::Input, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class GeometryError : public Error {
 public:
  GeometryError(const std::string& what, std::size_t index)
      : Error(ErrorKind::Geometry, what + " (at sample " + std::to_string(index) + ")"), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class RefinementError : public Error {
 public:
  explicit RefinementError(const std::string& what) : Error(ErrorKind::Refinement, what) {}
};

/// Raised by Loewner-flow evaluation when a point is absorbed by the hull.
class SwallowedError : public Error {
 public:
  SwallowedError(const std::string& what, double survival_time)
      : Error(ErrorKind::Domain, what), survival_time_(survival_time) {}
  double survival_time() const noexcept { return survival_time_; }

 private:
  double survival_time_;
};

class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, std::vector<double> history = {})
      : Error(ErrorKind::NonConvergence, what), history_(std::move(history)) {}
  const std::vector<double>& history() const noexcept { return history_; }

 private:
  std::vector<double> history_;
};

}  // namespace loewner
