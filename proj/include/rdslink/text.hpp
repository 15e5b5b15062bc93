#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rdslink {

// Normalizes a literal for token search: case-fold, strip punctuation,
// split on whitespace. Tokens come back deduplicated, sorted.
std::vector<std::string> normalize_tokens(std::string_view text);

// Case-folded copy (ASCII plus Latin-1 supplement uppercase letters).
std::string fold_case(std::string_view text);

// Number of Unicode scalar values in a UTF-8 string.
std::size_t utf8_length(std::string_view text);

}  // namespace rdslink
