#include <atomic>
#include <cstdlib>
#include <string>

#include "turan4/kernels.hpp"

namespace turan4::kernels {
namespace {

const Backend* initial_backend() {
  if (const char* forced = std::getenv("TURAN4_KERNEL")) {
    const std::string name(forced);
    if (name == "scalar") return &scalar_backend();
    if (name == "avx2" && avx2_backend()) return avx2_backend();
  }
  if (const Backend* fast = avx2_backend()) return fast;
  return &scalar_backend();
}

std::atomic<const Backend*>& slot() {
  static std::atomic<const Backend*> current{initial_backend()};
  return current;
}

}  // namespace

const Backend& active() { return *slot().load(std::memory_order_relaxed); }

bool select(std::string_view name) {
  if (name == "scalar") {
    slot().store(&scalar_backend());
    return true;
  }
  if (name == "avx2") {
    if (const Backend* b = avx2_backend()) {
      slot().store(b);
      return true;
    }
  }
  return false;
}

}  // namespace turan4::kernels
