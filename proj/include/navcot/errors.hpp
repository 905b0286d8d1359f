#pragma once

#include <stdexcept>
#include <string>

namespace navcot {

// Base class for every error raised by the harness. Each failure mode gets
// its own type so callers can catch precisely and tests can assert on it.
class NavcotError : public std::runtime_error {
 public:
  explicit NavcotError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

class GraphInvariantError : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

class UnknownViewpoint : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

class DegeneratePositions : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

class InvalidConfig : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

class EmptyCaption : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

class MissingCaption : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

// Raised when a reasoner completion cannot be parsed into a CoT record.
// Carries the raw completion so callers can log what the model actually said.
class MalformedOutput : public NavcotError {
 public:
  MalformedOutput(const std::string& msg, std::string raw)
      : NavcotError(msg), raw_(std::move(raw)) {}
  const std::string& raw() const { return raw_; }

 private:
  std::string raw_;
};

class MalformedLandmarks : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

class EmptyLandmarks : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

class InvalidGtAction : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

class ProviderGap : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

class LabelGap : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

class PoolTooSmall : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

class BackendUnavailable : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

class AuthError : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

class EnvironmentGap : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

class MissingEpisode : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

class IoError : public NavcotError {
 public:
  using NavcotError::NavcotError;
};

}  // namespace navcot
