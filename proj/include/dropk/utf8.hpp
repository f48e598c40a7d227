#pragma once

#include <string>
#include <string_view>

#include "dropk/core.hpp"

namespace dropk {

/// Decodes UTF-8 into Unicode scalar values. Rejects overlong forms,
/// surrogates and truncated sequences.
Seq<char32_t> decode_utf8(std::string_view text);

std::string encode_utf8(const Seq<char32_t>& xs);
std::string encode_utf8(char32_t c);

}  // namespace dropk
