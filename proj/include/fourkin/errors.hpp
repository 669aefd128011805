#pragma once

#include <stdexcept>
#include <string>

namespace fourkin {

// Raised when |det Q| falls at or below the invertibility threshold.
class SingularFrame : public std::runtime_error {
public:
  explicit SingularFrame(const std::string& what) : std::runtime_error(what) {}
};

// Raised by rate operators that are defined for spacelike vectors only.
class NotSpacelike : public std::runtime_error {
public:
  explicit NotSpacelike(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the flow integrator when the per-step truncation estimate
// exceeds its acceptance bound.
class StepTooLarge : public std::runtime_error {
public:
  explicit StepTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed or inconsistent scenario configuration.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// |det Q| at or below this counts as singular.
inline constexpr double kSingularDetThreshold = 1e-12;

}  // namespace fourkin
