#!/usr/bin/env python3
"""Regenerates src/unicode_tables.cpp from the Python unicodedata database.

Emits two tables:
  * inclusive code point ranges for the Unicode letter categories (Lu, Ll,
    Lt, Lm, Lo), used by the tokenizer;
  * one-to-one simple lowercase mappings, used for case-insensitive edge
    matching. Multi-character lowerings are intentionally dropped.

Run from the repository root:  python3 tools/gen_unicode_tables.py
"""

import sys
import unicodedata

OUT = "src/unicode_tables.cpp"


def letter_ranges():
    ranges = []
    start = None
    prev = None
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            is_letter = False
        else:
            is_letter = unicodedata.category(chr(cp)).startswith("L")
        if is_letter:
            if start is None:
                start = cp
            prev = cp
        elif start is not None:
            ranges.append((start, prev))
            start = None
    if start is not None:
        ranges.append((start, prev))
    return ranges


def lower_mappings():
    mappings = []
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        low = chr(cp).lower()
        if len(low) == 1 and ord(low) != cp:
            mappings.append((cp, ord(low)))
    return mappings


def main():
    ranges = letter_ranges()
    lowers = lower_mappings()
    with open(OUT, "w", encoding="utf-8") as f:
        w = f.write
        w("// Generated by tools/gen_unicode_tables.py from unicodedata %s.\n"
          % unicodedata.unidata_version)
        w("// Do not edit by hand.\n\n")
        w('#include "morphpairs/unicode.hpp"\n\n')
        w("namespace morphpairs::uni::detail {\n\n")
        w("const CodepointRange kLetterRanges[] = {\n")
        for i in range(0, len(ranges), 6):
            row = ranges[i : i + 6]
            w("    " + " ".join("{0x%X, 0x%X}," % r for r in row) + "\n")
        w("};\n")
        w("const std::size_t kLetterRangeCount = %d;\n\n" % len(ranges))
        w("const CaseMapping kLowerMappings[] = {\n")
        for i in range(0, len(lowers), 6):
            row = lowers[i : i + 6]
            w("    " + " ".join("{0x%X, 0x%X}," % m for m in row) + "\n")
        w("};\n")
        w("const std::size_t kLowerMappingCount = %d;\n\n" % len(lowers))
        w("}  // namespace morphpairs::uni::detail\n")
    print("wrote %s: %d letter ranges, %d lowercase mappings"
          % (OUT, len(ranges), len(lowers)))


if __name__ == "__main__":
    sys.exit(main())
