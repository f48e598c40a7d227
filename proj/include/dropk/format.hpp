#pragma once

// Human-readable rendering of sequences for reports and traces.

#include <sstream>
#include <string>
#include <type_traits>

#include "dropk/core.hpp"
#include "dropk/utf8.hpp"

namespace dropk {

template <Token T>
std::string show(const Seq<T>& xs) {
  if constexpr (std::is_same_v<T, char>) {
    return std::string(xs.begin(), xs.end());
  } else if constexpr (std::is_same_v<T, char32_t>) {
    return encode_utf8(xs);
  } else {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    os << ']';
    return os.str();
  }
}

template <Token T>
std::string show(const T& x) {
  return show(Seq<T>{x});
}

}  // namespace dropk
