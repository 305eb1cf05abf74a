#include "liechar/common.hpp"

#include <cstdlib>
#include <thread>

namespace liechar {

unsigned worker_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("LIECHAR_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned long>(cap) < hw) return static_cast<unsigned>(cap);
  }
  return hw;
}

}  // namespace liechar
