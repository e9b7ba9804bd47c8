#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "invseq/core.hpp"

// Exhaustive generation of I_n. Sequences are streamed in lexicographic
// order; nothing is materialized beyond the current prefix, so memory stays
// O(n) even at n = 10 (3.6M sequences). Prefix partitioning lets independent
// workers consume disjoint sub-ranges.

namespace invseq {

inline constexpr int kDefaultEnumerationGuard = 12;

inline void check_enumeration_guard(int n, int guard) {
  if (n < 0) throw std::invalid_argument("enumeration: n must be >= 0");
  if (n > guard) {
    throw std::invalid_argument("enumeration: n = " + std::to_string(n) +
                                " exceeds guard " + std::to_string(guard) +
                                " (override the guard to proceed)");
  }
}

namespace detail {

template <class F>
void extend_rec(InversionSequence& e, int n, F& f) {
  if (e.size() == n) {
    f(static_cast<const InversionSequence&>(e));
    return;
  }
  int sites = e.size() + 1;  // e_{k+1} ranges over 0..k
  for (int h = 0; h < sites; ++h) {
    e.push_back(h);
    extend_rec(e, n, f);
    e.pop_back();
  }
}

}  // namespace detail

/// Visits every extension of `prefix` to length n, in lexicographic order.
/// The callback receives a reference valid only during the call.
template <class F>
void for_each_extension(const InversionSequence& prefix, int n, F&& f) {
  if (prefix.size() > n) return;
  InversionSequence e = prefix;
  detail::extend_rec(e, n, f);
}

/// Visits every element of I_n exactly once, in lexicographic order.
template <class F>
void for_each_inversion_sequence(int n, F&& f,
                                 int guard = kDefaultEnumerationGuard) {
  check_enumeration_guard(n, guard);
  for_each_extension(InversionSequence(), n, f);
}

/// The elements of I_depth, as prefixes partitioning I_n for any n >= depth.
std::vector<InversionSequence> enumeration_prefixes(int depth);

std::int64_t factorial(int n);

/// Runs task(i) for i in [0, task_count) on `jobs` threads. Tasks are
/// claimed from an atomic counter; any scheduling yields the same merged
/// result as long as tasks only touch their own accumulators.
template <class Task>
void run_tasks(int jobs, std::size_t task_count, Task&& task) {
  if (jobs <= 1 || task_count <= 1) {
    for (std::size_t i = 0; i < task_count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= task_count) break;
      task(i);
    }
  };
  std::vector<std::thread> pool;
  int spawn = std::min<int>(jobs, static_cast<int>(task_count));
  pool.reserve(static_cast<std::size_t>(spawn));
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

int default_jobs();

/// Parallel scan over I_n: each worker folds its share of prefix-partitioned
/// sequences into its own Acc, and the per-prefix accumulators are merged
/// left to right, so the result is independent of thread scheduling.
///
/// visit(e, acc) must be pure in everything except acc; merge(into, from)
/// combines accumulators.
template <class Acc, class Visit, class Merge>
Acc parallel_scan_sequences(int n, int jobs, Acc init, Visit visit,
                            Merge merge,
                            int guard = kDefaultEnumerationGuard) {
  check_enumeration_guard(n, guard);
  constexpr int kPrefixDepth = 5;
  if (jobs <= 1 || n <= kPrefixDepth) {
    Acc acc = std::move(init);
    for_each_inversion_sequence(
        n, [&](const InversionSequence& e) { visit(e, acc); }, guard);
    return acc;
  }
  std::vector<InversionSequence> prefixes = enumeration_prefixes(kPrefixDepth);
  std::vector<Acc> partial(prefixes.size(), init);
  run_tasks(jobs, prefixes.size(), [&](std::size_t i) {
    for_each_extension(prefixes[i], n, [&](const InversionSequence& e) {
      visit(e, partial[i]);
    });
  });
  Acc acc = std::move(init);
  for (auto& part : partial) merge(acc, part);
  return acc;
}

}  // namespace invseq
