#pragma once

#include <cstdint>
#include <exception>
#include <limits>

#include "braidcode/execution.hpp"

namespace braidcode::detail {

/// Calls body(i) for i in [0, n), serially or as an OpenMP dynamic loop.
/// An exception escaping body is carried out of the parallel region; if
/// several iterations throw, the one with the lowest index is rethrown so
/// the serial and parallel paths fail identically.
template <typename Body>
void for_each_index(Execution exec, std::int64_t n, int chunk, Body&& body) {
  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::int64_t failed_at = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, chunk)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(braidcode_for_each_failure)
      if (i < failed_at) {
        failed_at = i;
        failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace braidcode::detail
