#pragma once

#include <stdexcept>
#include <string>

namespace sbsramsey {

/// Base of every error raised by the library. Messages are single-line.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a documented precondition (negative time, kappa <= 0, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Microscopic and effective couplings disagree.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// The requested step cannot resolve the fastest rate in the system.
class StabilityError : public Error {
 public:
  StabilityError(const std::string& what, double required_dt)
      : Error(what), required_dt_(required_dt) {}
  double required_dt() const noexcept { return required_dt_; }

 private:
  double required_dt_;
};

/// Bad configuration text, unknown key, unit mismatch, or engine/config mismatch.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// max + min of a fringe trace is zero.
class UndefinedVisibility : public Error {
 public:
  using Error::Error;
};

}  // namespace sbsramsey
