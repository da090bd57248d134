#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace mellin {

/// Selects the OpenMP kernel or its serial reference implementation. Both
/// paths produce bit-identical results: parallel kernels write into
/// index-addressed slots and every reduction happens afterwards in index order.
enum class Execution { serial, parallel };

/// Runs body(i) for i in [0, count). Exceptions thrown by the body are
/// captured per index and the first one (in index order) is rethrown.
template <typename Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (long i = 0; i < n; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace mellin
