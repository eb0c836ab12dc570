// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tzv/errors.hpp"

namespace tzv {

enum class TokenKind {
  Keyword,    // parameter, storage, code, and data constructors (Pair, Some, ...)
  InstrName,  // ALL_CAPS instruction names
  TypeName,   // lowercase type names
  IntLit,     // optional leading minus, arbitrary precision
  StringLit,  // text field holds the decoded payload
  BytesLit,   // text field holds the raw bytes (hex already decoded)
  Annot,      // @x, %x, :x
  Punct,      // { } ; ( )
};

struct Token {
  TokenKind kind;
  std::string text;
  Span span;
};

/// Splits Michelson source into tokens. Comments (`#` to end of line and
/// `/* ... */`) and whitespace are dropped. Throws LexError with a span on
/// illegal characters, unterminated strings/comments and odd-length hex.
std::vector<Token> tokenize(std::string_view source);

const char *token_kind_name(TokenKind kind);

} // namespace tzv
