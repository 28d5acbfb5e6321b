#pragma once

#include <stdexcept>
#include <string>

namespace dcpso {

// Invalid or inconsistent experiment configuration (bad key, bad value,
// violated constraint). Maps to exit code 2 at the CLI boundary.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem failures while reading configs or writing metrics.
// Maps to exit code 3 at the CLI boundary.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A run violated one of its internal audits (e.g. change detection
// missed a real environment change for more than one iteration).
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dcpso
