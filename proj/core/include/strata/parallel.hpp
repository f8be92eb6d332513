#ifndef STRATA_PARALLEL_HPP
#define STRATA_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace strata {

/// Number of worker threads to use; 0 means one per hardware thread.
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, total) into contiguous chunks, runs work(begin, end) -> T on
/// each, and folds the partial results left to right so the merge order is
/// deterministic regardless of scheduling.
template <class T, class Work, class Merge>
T parallel_reduce(std::uint64_t total, unsigned workers, T init, Work work, Merge merge) {
  workers = resolve_workers(workers);
  std::uint64_t chunks = std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1));
  if (chunks <= 1) return merge(std::move(init), work(std::uint64_t{0}, total));

  std::vector<T> partial(chunks, init);
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    std::uint64_t begin = total * c / chunks;
    std::uint64_t end = total * (c + 1) / chunks;
    threads.emplace_back([&, c, begin, end] {
      try {
        partial[c] = work(begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  T acc = std::move(init);
  for (auto& p : partial) acc = merge(std::move(acc), std::move(p));
  return acc;
}

}  // namespace strata

#endif  // STRATA_PARALLEL_HPP
