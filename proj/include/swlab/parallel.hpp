#pragma once

// Data-parallel kernels. Each kernel has a serial reference path kept for
// testing; the OpenMP path must produce identical results.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

namespace swlab {

enum class Exec { Serial, Parallel };

// Worker count: SWLAB_THREADS if set and positive, else the OpenMP default.
int worker_count();

// Calls body(i) for every i in [0, n).
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, Exec exec);

struct IndexedFailure {
  std::size_t index = 0;
  std::string message;
};

// Runs check(i) for every i in [0, n); check returns a message on failure.
// Returns the failure with the smallest index, so the result does not depend
// on scheduling.
std::optional<IndexedFailure> first_failure(
    std::size_t n, const std::function<std::optional<std::string>(std::size_t)>& check, Exec exec);

}  // namespace swlab
