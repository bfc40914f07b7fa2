#include "normcomm/parallel.hpp"

#include <atomic>
#include <cstdint>

#ifdef NORMCOMM_HAVE_OPENMP
#include <omp.h>
#endif

namespace normcomm::parallel {

namespace {
std::atomic<int> g_threads{0};
}

void set_thread_count(int threads) { g_threads = threads < 0 ? 0 : threads; }

int thread_count() {
#ifdef NORMCOMM_HAVE_OPENMP
  return g_threads > 0 ? g_threads.load() : omp_get_max_threads();
#else
  return 1;
#endif
}

bool openmp_available() {
#ifdef NORMCOMM_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body,
                    Mode mode) {
#ifdef NORMCOMM_HAVE_OPENMP
  if (mode == Mode::OpenMP && n > 1) {
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
    return;
  }
#endif
  (void)mode;
  for (std::size_t i = 0; i < n; ++i) body(i);
}

bool any_index(std::size_t n, const std::function<bool(std::size_t)>& pred,
               Mode mode) {
#ifdef NORMCOMM_HAVE_OPENMP
  if (mode == Mode::OpenMP && n > 1) {
    std::atomic<bool> hit{false};
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count())
    for (std::int64_t i = 0; i < count; ++i) {
      if (hit.load(std::memory_order_relaxed)) continue;
      if (pred(static_cast<std::size_t>(i))) hit = true;
    }
    return hit;
  }
#endif
  (void)mode;
  for (std::size_t i = 0; i < n; ++i)
    if (pred(i)) return true;
  return false;
}

}  // namespace normcomm::parallel
