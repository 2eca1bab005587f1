#include "swlab/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace swlab {

int worker_count() {
  if (const char* env = std::getenv("SWLAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, Exec exec) {
  if (exec == Exec::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  // Exceptions may not cross the parallel region; keep the lowest-index one.
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 8) num_threads(worker_count())
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::optional<IndexedFailure> first_failure(
    std::size_t n, const std::function<std::optional<std::string>(std::size_t)>& check, Exec exec) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) {
      if (auto msg = check(i)) return IndexedFailure{i, *msg};
    }
    return std::nullopt;
  }
  std::vector<std::optional<std::string>> results(n);
  for_each_index(n, [&](std::size_t i) { results[i] = check(i); }, exec);
  for (std::size_t i = 0; i < n; ++i) {
    if (results[i]) return IndexedFailure{i, *results[i]};
  }
  return std::nullopt;
}

}  // namespace swlab
