#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <vector>

namespace fnls {

// Worker count for scans: hardware concurrency, capped by FNLS_THREADS when
// that is set to a positive integer.
std::size_t scan_threads();

// Runs task(i) for i in [0, n) on up to scan_threads() threads. Results come
// back in index order; if any task throws, the exception of the lowest failing
// index is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task);

template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& task) {
  std::vector<std::optional<T>> slots(n);
  parallel_for(n, [&](std::size_t i) { slots[i].emplace(task(i)); });
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace fnls
