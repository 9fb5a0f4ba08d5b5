#pragma once

#include <string_view>

namespace epos::detail {

// Deliberate defects used by the exit-code tests. Only the epos_faulty
// library compiles them in; the regular build always returns false.
#ifdef EPOS_FAULT_INJECTION
bool fault_active(std::string_view name);
#else
constexpr bool fault_active(std::string_view) { return false; }
#endif

}  // namespace epos::detail
