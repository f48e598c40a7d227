#pragma once

// Tokens, sequences and the lexicographic order used by every engine.

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dropk {

/// Any element type with a total order can play the role of a digit.
template <class T>
concept Token = std::totally_ordered<T> && std::copyable<T>;

template <Token T>
using Seq = std::vector<T>;

/// Thrown when an operation is called outside its precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Seq<char> seq(std::string_view text) { return Seq<char>(text.begin(), text.end()); }

inline std::string str(const Seq<char>& xs) { return std::string(xs.begin(), xs.end()); }

/// Lexicographic order with the empty sequence as bottom.
///
/// Follows the three defining clauses literally: an empty left side is
/// below anything, a strictly smaller head decides, equal heads defer to
/// the tails. A nonempty sequence is never below the empty one, so a
/// proper prefix is below its extensions but not the other way round.
template <Token T>
bool lex_le(const Seq<T>& a, const Seq<T>& b) {
  std::size_t i = 0;
  for (;; ++i) {
    if (i == a.size()) return true;
    if (i == b.size()) return false;
    if (a[i] < b[i]) return true;
    if (!(a[i] == b[i])) return false;
  }
}

/// Strict part of lex_le.
template <Token T>
bool lex_lt(const Seq<T>& a, const Seq<T>& b) {
  return !lex_le(b, a);
}

/// The maximum of a nonempty candidate collection under lex_le.
/// Ties resolve to the first occurrence.
template <Token T>
const Seq<T>& max_lex(const std::vector<Seq<T>>& candidates) {
  if (candidates.empty()) throw PreconditionError("empty candidate set");
  const Seq<T>* best = &candidates.front();
  for (const auto& c : candidates) {
    if (lex_lt(*best, c)) best = &c;
  }
  return *best;
}

/// xs with position i removed.
template <Token T>
Seq<T> remove_at(const Seq<T>& xs, std::size_t i) {
  Seq<T> out;
  out.reserve(xs.size() - 1);
  out.insert(out.end(), xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(i));
  out.insert(out.end(), xs.begin() + static_cast<std::ptrdiff_t>(i) + 1, xs.end());
  return out;
}

/// Every way of removing exactly one element, in position order.
template <Token T>
std::vector<Seq<T>> drops(const Seq<T>& xs) {
  if (xs.empty()) throw PreconditionError("drops undefined on empty sequence");
  std::vector<Seq<T>> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out.push_back(remove_at(xs, i));
  return out;
}

}  // namespace dropk
