#include "epos/fault.hpp"

#ifdef EPOS_FAULT_INJECTION

#include <cstdlib>
#include <sstream>
#include <string>

namespace epos::detail {

// EPOS_FAULT holds a comma-separated list of active fault names.
bool fault_active(std::string_view name) {
  const char* env = std::getenv("EPOS_FAULT");
  if (env == nullptr) return false;
  std::istringstream in{std::string(env)};
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token == name) return true;
  }
  return false;
}

}  // namespace epos::detail

#endif
