// A tiny fork/join helper with schedule-independent reductions.
//
// Work items are handed out dynamically, so which worker sees which item
// varies between runs. Reductions are therefore only deterministic when the
// merge is associative and commutative; every caller in this project merges
// maxima with a lexicographic tie-break, which satisfies both.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace amg::parallel {

// 0 restores the default (hardware concurrency).
void set_thread_count(unsigned count);
unsigned thread_count();

namespace detail {
// True while the current thread is a worker; nested calls then run serially.
bool& in_worker();
}  // namespace detail

// Runs body(i, acc) for every i in [0, count) and merges the per-worker
// accumulators with merge(into, from).
template <class T, class Body, class Merge>
T reduce(std::size_t count, const T& identity, Body body, Merge merge) {
  const unsigned workers =
      detail::in_worker() ? 1u : static_cast<unsigned>(std::min<std::size_t>(thread_count(), count));
  if (workers <= 1) {
    T acc = identity;
    for (std::size_t i = 0; i < count; ++i) body(i, acc);
    return acc;
  }

  std::vector<T> partial(workers, identity);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        detail::in_worker() = true;
        try {
          for (std::size_t i = next++; i < count; i = next++) body(i, partial[w]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);

  T acc = identity;
  for (const T& p : partial) merge(acc, p);
  return acc;
}

// Runs body(i) for every i in [0, count). Bodies must write to disjoint state.
template <class Body>
void for_each_index(std::size_t count, Body body) {
  struct Unit {};
  reduce(count, Unit{}, [&](std::size_t i, Unit&) { body(i); }, [](Unit&, const Unit&) {});
}

// Running maximum with a lexicographically-smallest-key tie-break.
template <class Key>
struct ArgMax {
  long long value = 0;
  bool has = false;
  Key key{};

  void offer(long long v, const Key& k) {
    if (!has || v > value || (v == value && k < key)) {
      value = v;
      key = k;
      has = true;
    }
  }
  void merge(const ArgMax& other) {
    if (other.has) offer(other.value, other.key);
  }
};

}  // namespace amg::parallel
