#pragma once

#include <stdexcept>
#include <string>

namespace podsurge {

/// Dimension/shape mismatch detected at an operation boundary.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& msg)
      : std::invalid_argument("shape error: " + msg) {}
};

/// Input outside the mathematical domain of an operation (non-finite
/// entries, empty spectra, zero reference norms, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& msg)
      : std::domain_error("domain error: " + msg) {}
};

/// Iterative method failed to converge within its sweep cap.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& msg)
      : std::runtime_error("convergence error: " + msg) {}
};

/// Training diverged (non-finite loss) or was misconfigured.
class TrainingError : public std::runtime_error {
 public:
  explicit TrainingError(const std::string& msg)
      : std::runtime_error("training error: " + msg) {}
};

/// Invalid or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg)
      : std::runtime_error("config error: " + msg) {}
};

/// Filesystem / parse failure while reading or writing artifacts.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg)
      : std::runtime_error("io error: " + msg) {}
};

/// A required artifact file is absent from the run directory.
class MissingArtifactError : public std::runtime_error {
 public:
  explicit MissingArtifactError(const std::string& msg)
      : std::runtime_error("missing artifact: " + msg) {}
};

}  // namespace podsurge
