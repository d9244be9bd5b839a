#include "bsw/limits.hpp"

#include <cstdlib>
#include <string>

#include "bsw/errors.hpp"

namespace bsw {

BuildLimits BuildLimits::from_environment() {
  BuildLimits limits;
  if (const char* env = std::getenv("BSW_MAX_STATES"); env && *env) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (pos != std::string(env).size() || v == 0) throw std::exception();
      limits.max_states = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw ConfigError(std::string("BSW_MAX_STATES: not a positive integer: ") +
                        env);
    }
  }
  return limits;
}

}  // namespace bsw
