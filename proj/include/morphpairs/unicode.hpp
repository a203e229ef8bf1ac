#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "morphpairs/errors.hpp"

namespace morphpairs::uni {

namespace detail {

struct CodepointRange {
  char32_t first;
  char32_t last;
};

struct CaseMapping {
  char32_t from;
  char32_t to;
};

extern const CodepointRange kLetterRanges[];
extern const std::size_t kLetterRangeCount;
extern const CaseMapping kLowerMappings[];
extern const std::size_t kLowerMappingCount;

}  // namespace detail

/// True if the code point is in a Unicode letter category (Lu/Ll/Lt/Lm/Lo).
bool is_letter(char32_t cp);

/// Simple one-to-one lowercase mapping; code points without such a mapping
/// (including multi-character lowerings) are returned unchanged.
char32_t to_lower(char32_t cp);

/// Decodes the UTF-8 sequence starting at byte `pos` and advances `pos` past
/// it. Throws DecodeError (carrying the byte offset) on malformed input.
char32_t decode_next(std::string_view text, std::size_t& pos);

/// Decodes a whole UTF-8 string. Throws DecodeError on malformed input.
std::u32string decode(std::string_view text);

void append_utf8(std::string& out, char32_t cp);
std::string encode(std::u32string_view text);

/// Number of code points in a valid UTF-8 string.
std::size_t length(std::string_view text);

std::u32string fold_case(std::u32string_view text);

}  // namespace morphpairs::uni
