#pragma once

#include <stdexcept>
#include <string>

namespace bsw {

/// Invalid network description or malformed input.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request that exceeds a state-space or enumeration ceiling.
class CeilingError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace bsw
