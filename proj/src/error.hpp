/*
 * (C) Copyright 2026 infobound developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace infobound {

enum class errc {
  parse,      // lexical or syntax error in a quantity expression
  dimension,  // operands with incompatible dimensions
  domain,     // value outside an operation's domain (zero divisor, negative radicand, ...)
  overflow,   // magnitude left the finite double range
  schema,     // scenario file fails validation
  io,         // file could not be opened or read
  internal,   // broken internal invariant
};

/// The single exception type thrown by this library. Parser and evaluator
/// errors carry a byte offset (and one-past-the-end offset) into the source
/// text; everything else reports npos.
class Error : public std::runtime_error {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(errc code, const std::string& message, std::size_t begin = npos,
        std::size_t end = npos)
      : std::runtime_error(message), code_(code), begin_(begin), end_(end) {}

  errc code() const noexcept { return code_; }
  bool has_location() const noexcept { return begin_ != npos; }
  std::size_t offset() const noexcept { return begin_; }
  std::size_t end_offset() const noexcept { return end_; }

private:
  errc code_;
  std::size_t begin_;
  std::size_t end_;
};

}  // namespace infobound
