#include "amg/parallel.hpp"

namespace amg::parallel {

namespace {
std::atomic<unsigned> configured{0};
}

void set_thread_count(unsigned count) { configured = count; }

unsigned thread_count() {
  const unsigned c = configured.load();
  if (c != 0) return c;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace detail {
bool& in_worker() {
  thread_local bool flag = false;
  return flag;
}
}  // namespace detail

}  // namespace amg::parallel
