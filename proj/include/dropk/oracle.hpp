#pragma once

// Exhaustive search: take the maximum over every way of dropping k
// elements one at a time. Slow on purpose; everything else is checked
// against it.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "dropk/core.hpp"

namespace dropk {

/// drops lifted over a list of candidates and concatenated.
template <Token T>
std::vector<Seq<T>> step(const std::vector<Seq<T>>& candidates) {
  std::vector<Seq<T>> out;
  std::size_t total = 0;
  for (const auto& c : candidates) total += c.size();
  out.reserve(total);
  for (const auto& c : candidates) {
    auto ds = drops(c);
    std::move(ds.begin(), ds.end(), std::back_inserter(out));
  }
  return out;
}

/// f applied k times to x.
template <class F, class X>
X apply_k(std::size_t k, F&& f, X x) {
  for (; k > 0; --k) x = f(std::move(x));
  return x;
}

enum class Dedup { no, yes };

/// All candidates reachable by k single-element drops from xs.
/// With Dedup::yes each level is sorted and uniqued, which leaves the set
/// of candidates (and hence their maximum) unchanged.
template <Token T>
std::vector<Seq<T>> candidates(std::size_t k, const Seq<T>& xs, Dedup dedup = Dedup::no) {
  std::vector<Seq<T>> level{xs};
  for (std::size_t i = 0; i < k; ++i) {
    level = step(level);
    if (dedup == Dedup::yes) {
      std::sort(level.begin(), level.end());
      level.erase(std::unique(level.begin(), level.end()), level.end());
    }
  }
  return level;
}

template <Token T>
Seq<T> solve_naive(std::size_t k, const Seq<T>& xs, Dedup dedup = Dedup::no) {
  if (k > xs.size()) throw PreconditionError("cannot drop more elements than present");
  return max_lex(candidates(k, xs, dedup));
}

}  // namespace dropk
