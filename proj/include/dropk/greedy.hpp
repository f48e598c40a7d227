#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dropk/core.hpp"
#include "dropk/oracle.hpp"

namespace dropk {

/// Position of the hill foot: the last element of the longest weakly
/// descending prefix.
struct FootIndex {
  std::size_t index = 0;

  friend bool operator==(const FootIndex&, const FootIndex&) = default;
};

/// Smallest i with xs[i] < xs[i+1], or the last position when xs never
/// ascends. `scanned`, when given, accumulates the number of comparisons.
template <Token T>
FootIndex hill_foot(const Seq<T>& xs, std::size_t* scanned = nullptr) {
  if (xs.empty()) throw PreconditionError("hill foot undefined on empty sequence");
  std::size_t i = 0;
  while (i + 1 < xs.size() && !(xs[i] < xs[i + 1])) ++i;
  if (scanned) *scanned += i + 1;
  return {i};
}

/// The best single deletion: xs without its hill foot.
template <Token T>
Seq<T> gstep(const Seq<T>& xs) {
  return remove_at(xs, hill_foot(xs).index);
}

namespace detail {

template <Token T>
void gstep_recursive_into(const Seq<T>& xs, std::size_t from, Seq<T>& out) {
  if (from + 1 == xs.size()) return;  // gstep [x] = []
  const T& x = xs[from];
  const T& y = xs[from + 1];
  if (x < y) {
    out.insert(out.end(), xs.begin() + static_cast<std::ptrdiff_t>(from) + 1, xs.end());
  } else {
    out.push_back(x);
    gstep_recursive_into(xs, from + 1, out);
  }
}

}  // namespace detail

/// Clause-for-clause transliteration of the derived recursive program.
/// Reference only: recursion depth is the foot index.
template <Token T>
Seq<T> gstep_recursive(const Seq<T>& xs) {
  if (xs.empty()) throw PreconditionError("gstep undefined on empty sequence");
  Seq<T> out;
  out.reserve(xs.size() - 1);
  detail::gstep_recursive_into(xs, 0, out);
  return out;
}

/// gstep applied k times. O(kn).
template <Token T>
Seq<T> solve_greedy(std::size_t k, Seq<T> xs, std::size_t* scanned = nullptr) {
  if (k > xs.size()) throw PreconditionError("cannot drop more elements than present");
  for (; k > 0; --k) {
    xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(hill_foot(xs, scanned).index));
  }
  return xs;
}

/// A witness that the Better-Global principle fails for (xs, ys): xs is
/// no better than ys, yet `from_xs` (one drop of xs) beats every single
/// drop of ys.
template <Token T>
struct BetterGlobalViolation {
  Seq<T> from_xs;
  Seq<T> best_from_ys;
};

/// Looks for a violation of: xs ⊴ ys implies every drop of xs is matched
/// by some drop of ys. Returns nullopt when the implication holds for the
/// pair (including when xs ⊴ ys is false).
template <Token T>
std::optional<BetterGlobalViolation<T>> find_better_global_violation(const Seq<T>& xs,
                                                                     const Seq<T>& ys) {
  if (!lex_le(xs, ys)) return std::nullopt;
  const auto ys_drops = drops(ys);
  for (const auto& candidate : drops(xs)) {
    bool matched = false;
    for (const auto& other : ys_drops) {
      if (lex_le(candidate, other)) {
        matched = true;
        break;
      }
    }
    if (!matched) return BetterGlobalViolation<T>{candidate, max_lex(ys_drops)};
  }
  return std::nullopt;
}

}  // namespace dropk
