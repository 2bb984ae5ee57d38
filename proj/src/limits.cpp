#include "monoclean/limits.hpp"

#include <cstdlib>
#include <string>

namespace monoclean::limits {

std::size_t max_poset_points() {
  constexpr std::size_t kDefault = 5000;
  const char* env = std::getenv("MONOCLEAN_MAX_POSET");
  if (env == nullptr || *env == '\0') return kDefault;
  try {
    return static_cast<std::size_t>(std::stoull(env));
  } catch (const std::exception&) {
    return kDefault;
  }
}

}  // namespace monoclean::limits
