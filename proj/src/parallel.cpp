#include "epos/parallel.hpp"

#include <cstdlib>
#include <string>

namespace epos {

namespace {
std::atomic<unsigned> configured_workers{0};
}

unsigned worker_count() {
  if (const unsigned w = configured_workers.load(); w > 0) return w;
  if (const char* env = std::getenv("EPOS_WORKERS"); env != nullptr) {
    try {
      const int w = std::stoi(env);
      if (w > 0) return static_cast<unsigned>(w);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void set_worker_count(unsigned workers) { configured_workers.store(workers); }

}  // namespace epos
