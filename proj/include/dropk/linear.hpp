#pragma once

// Single-pass solver. The traversed prefix is kept as a weakly descending
// stack (the reversed accumulator of the zipper); each step either pushes
// the next element, pops a hill foot, or finishes. At most n pushes, k pops
// and one finish, so a run costs at most n + k + 1 steps.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

#include "dropk/core.hpp"

namespace dropk {

enum class ZipperAction { push, pop, finish };

/// Snapshot of the zipper at the start of one step.
template <Token T>
struct ZipperState {
  std::size_t remaining_k = 0;
  std::span<const T> acc;   // traversed prefix in logical (descending) order
  std::span<const T> rest;  // untraversed suffix
  std::size_t steps_taken = 0;
};

template <Token T>
struct ZipperEvent {
  ZipperState<T> state;
  ZipperAction action;
};

template <Token T>
bool is_weakly_descending(std::span<const T> xs) {
  return std::adjacent_find(xs.begin(), xs.end(),
                            [](const T& a, const T& b) { return a < b; }) == xs.end();
}

struct NoObserver {
  template <class E>
  void operator()(const E&) const noexcept {}
};

/// gsolve k acc rest = solve k (reverse acc ++ rest).
///
/// `acc` is the reversed accumulator, head first: read head to last it must
/// be weakly nondecreasing whenever k > 0 (with k = 0 any accumulator is
/// returned as is). `on_step` receives one ZipperEvent per step.
template <Token T, class Observer = NoObserver>
Seq<T> gsolve(std::size_t k, const Seq<T>& acc, const Seq<T>& rest, Observer&& on_step = {}) {
  if (k > acc.size() + rest.size()) {
    throw PreconditionError("cannot drop more elements than present");
  }
  // Logical order of the prefix; its back is the accumulator head.
  Seq<T> stack(acc.rbegin(), acc.rend());
  if (k > 0 && !is_weakly_descending<T>(stack)) {
    throw PreconditionError("accumulator must be nondecreasing from head to last");
  }
  stack.reserve(stack.size() + rest.size());

  std::size_t pos = 0;
  std::size_t steps = 0;
  auto emit = [&](ZipperAction action) {
    ++steps;
    on_step(ZipperEvent<T>{{k, std::span<const T>(stack),
                            std::span<const T>(rest).subspan(pos), steps - 1},
                           action});
  };

  for (;;) {
    if (k == 0) {
      emit(ZipperAction::finish);
      stack.insert(stack.end(), rest.begin() + static_cast<std::ptrdiff_t>(pos), rest.end());
      return stack;
    }
    if (pos == rest.size()) {
      emit(ZipperAction::finish);
      // drop k from the head of the reversed accumulator
      stack.resize(stack.size() - k);
      return stack;
    }
    const T& y = rest[pos];
    if (stack.empty() || !(stack.back() < y)) {
      emit(ZipperAction::push);
      stack.push_back(y);
      ++pos;
    } else {
      emit(ZipperAction::pop);
      stack.pop_back();
      --k;
    }
    // local form of the accumulator invariant; holds inductively
    assert(k == 0 || stack.size() < 2 || !(stack[stack.size() - 2] < stack.back()));
  }
}

template <Token T>
Seq<T> solve_linear(std::size_t k, const Seq<T>& xs) {
  return gsolve(k, Seq<T>{}, xs);
}

/// Number of gsolve steps taken by solve_linear(k, xs).
template <Token T>
std::size_t count_steps(std::size_t k, const Seq<T>& xs) {
  std::size_t n = 0;
  gsolve(k, Seq<T>{}, xs, [&n](const ZipperEvent<T>&) { ++n; });
  return n;
}

}  // namespace dropk
