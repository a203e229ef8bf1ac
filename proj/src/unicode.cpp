#include "morphpairs/unicode.hpp"

#include <algorithm>

namespace morphpairs::uni {

bool is_letter(char32_t cp) {
  const detail::CodepointRange* begin = detail::kLetterRanges;
  const detail::CodepointRange* end = begin + detail::kLetterRangeCount;
  auto it = std::upper_bound(begin, end, cp,
                             [](char32_t value, const detail::CodepointRange& r) {
                               return value < r.first;
                             });
  return it != begin && cp <= (it - 1)->last;
}

char32_t to_lower(char32_t cp) {
  const detail::CaseMapping* begin = detail::kLowerMappings;
  const detail::CaseMapping* end = begin + detail::kLowerMappingCount;
  auto it = std::lower_bound(begin, end, cp,
                             [](const detail::CaseMapping& m, char32_t value) {
                               return m.from < value;
                             });
  if (it != end && it->from == cp) return it->to;
  return cp;
}

char32_t decode_next(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  auto fail = [&](const char* what) -> char32_t {
    throw DecodeError(std::string(what) + " at byte offset " +
                          std::to_string(start),
                      start);
  };
  if (pos >= text.size()) return fail("decode past end of input");

  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  unsigned char lead = byte(pos);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }

  int extra;
  char32_t cp;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    return fail("invalid UTF-8 lead byte");
  }
  if (pos + static_cast<std::size_t>(extra) >= text.size())
    return fail("truncated UTF-8 sequence");
  for (int i = 1; i <= extra; ++i) {
    unsigned char cont = byte(pos + i);
    if ((cont & 0xC0) != 0x80) return fail("invalid UTF-8 continuation byte");
    cp = (cp << 6) | (cont & 0x3F);
  }
  // Reject overlong encodings and surrogate/out-of-range values.
  static constexpr char32_t kMinForExtra[] = {0, 0x80, 0x800, 0x10000};
  if (cp < kMinForExtra[extra]) return fail("overlong UTF-8 encoding");
  if (cp >= 0xD800 && cp <= 0xDFFF) return fail("UTF-8 encoded surrogate");
  if (cp > 0x10FFFF) return fail("code point out of range");
  pos += static_cast<std::size_t>(extra) + 1;
  return cp;
}

std::u32string decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) out.push_back(decode_next(text, pos));
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) append_utf8(out, cp);
  return out;
}

std::size_t length(std::string_view text) {
  std::size_t pos = 0;
  std::size_t n = 0;
  while (pos < text.size()) {
    decode_next(text, pos);
    ++n;
  }
  return n;
}

std::u32string fold_case(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t& cp : out) cp = to_lower(cp);
  return out;
}

}  // namespace morphpairs::uni
