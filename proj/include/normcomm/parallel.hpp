#pragma once

#include <cstddef>
#include <functional>

namespace normcomm::parallel {

/// How an index loop is executed. Serial is the reference path that the
/// OpenMP path is tested against.
enum class Mode { Serial, OpenMP };

/// Threads used by Mode::OpenMP; 0 means the OpenMP runtime default.
void set_thread_count(int threads);
int thread_count();
bool openmp_available();

/// Calls body(i) for every i in [0, n). Bodies must not throw and must only
/// write to per-index state.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body,
                    Mode mode = Mode::OpenMP);

/// True iff pred(i) holds for some i in [0, n). The OpenMP path may evaluate
/// more indices than the serial one after a hit; the answer is the same.
bool any_index(std::size_t n, const std::function<bool(std::size_t)>& pred,
               Mode mode = Mode::OpenMP);

}  // namespace normcomm::parallel
