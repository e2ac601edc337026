#pragma once

#include <stdexcept>
#include <string>

namespace secrecy {

// Invalid model/power/flag inputs. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A retransmission threshold that provably cannot be crossed within t_max
// blocks, so every epoch would be truncated. Mapped to exit code 1.
class UnreachableThresholdError : public std::runtime_error {
 public:
  explicit UnreachableThresholdError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace secrecy
