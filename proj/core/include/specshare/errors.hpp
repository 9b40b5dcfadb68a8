#pragma once

#include <stdexcept>
#include <string>

namespace specshare {

// Bad user-supplied input (scenario file, CLI arguments). CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant: a simulator bug, never a user error. The engine
// aborts the run and the CLI exits with code 3.
class InvariantFault : public std::logic_error {
 public:
  explicit InvariantFault(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ConfigError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InvariantFault(what);
}

}  // namespace specshare
