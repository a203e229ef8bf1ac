#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morphpairs {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File could not be opened, read, or written.
struct IoError : Error {
  using Error::Error;
};

/// Input bytes are not valid UTF-8. The offset is part of the message so it
/// survives the catch-as-std::exception path at the CLI surface.
struct DecodeError : Error {
  DecodeError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)),
        byte_offset(offset) {}
  std::size_t byte_offset;
};

/// A TSV or config row did not parse; the line number is in the message.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  std::size_t line_number;
};

/// Weight calibration cannot proceed (empty intersection handled separately;
/// this fires on a nonpositive mutual-information maximum).
struct CalibrationError : Error {
  using Error::Error;
};

/// Mutual information requested for a pair with a zero marginal or joint
/// count.
struct UndefinedScoreError : Error {
  using Error::Error;
};

/// Contradictory or out-of-range configuration values.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace morphpairs
