// SPDX-License-Identifier: Apache-2.0

#include "tzv/lexer.hpp"

#include <cctype>

namespace tzv {

const char *token_kind_name(TokenKind kind) {
  switch (kind) {
  case TokenKind::Keyword:
    return "keyword";
  case TokenKind::InstrName:
    return "instruction";
  case TokenKind::TypeName:
    return "type";
  case TokenKind::IntLit:
    return "int";
  case TokenKind::StringLit:
    return "string";
  case TokenKind::BytesLit:
    return "bytes";
  case TokenKind::Annot:
    return "annotation";
  case TokenKind::Punct:
    return "punctuation";
  }
  return "?";
}

namespace {

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      if (pos_ >= src_.size())
        break;
      out.push_back(next_token());
    }
    return out;
  }

private:
  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  Span span_here() const { return {pos_, 0, line_, col_}; }

  [[noreturn]] void fail(const std::string &msg, Span at) const {
    throw LexError(msg, at);
  }

  void skip_trivia() {
    for (;;) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (pos_ < src_.size() && peek() != '\n')
          advance();
      } else if (c == '/' && peek(1) == '*') {
        Span start = span_here();
        advance();
        advance();
        while (!(peek() == '*' && peek(1) == '/')) {
          if (pos_ >= src_.size())
            fail("unterminated comment", start);
          advance();
        }
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  static bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Token finish(TokenKind kind, std::string text, Span start) {
    start.length = pos_ - start.offset;
    return {kind, std::move(text), start};
  }

  Token next_token() {
    Span start = span_here();
    char c = peek();

    if (c == '{' || c == '}' || c == ';' || c == '(' || c == ')') {
      advance();
      return finish(TokenKind::Punct, std::string(1, c), start);
    }

    if (c == '@' || c == '%' || c == ':') {
      advance();
      std::string text(1, c);
      while (is_word_char(peek()) || peek() == '.' || peek() == '%' ||
             peek() == '@')
        text += advance();
      return finish(TokenKind::Annot, std::move(text), start);
    }

    if (c == '"')
      return lex_string(start);

    if (c == '0' && (peek(1) == 'x' || peek(1) == 'X'))
      return lex_bytes(start);

    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      std::string text;
      if (c == '-')
        text += advance();
      while (std::isdigit(static_cast<unsigned char>(peek())))
        text += advance();
      return finish(TokenKind::IntLit, std::move(text), start);
    }

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      bool has_lower = false;
      bool starts_upper = std::isupper(static_cast<unsigned char>(c)) != 0;
      while (is_word_char(peek())) {
        char w = advance();
        if (std::islower(static_cast<unsigned char>(w)))
          has_lower = true;
        text += w;
      }
      TokenKind kind;
      if (text == "parameter" || text == "storage" || text == "code")
        kind = TokenKind::Keyword;
      else if (starts_upper && has_lower)
        kind = TokenKind::Keyword; // data constructors: Pair, Some, Elt, ...
      else if (starts_upper)
        kind = TokenKind::InstrName; // ALL_CAPS
      else
        kind = TokenKind::TypeName;
      return finish(kind, std::move(text), start);
    }

    fail(std::string("illegal character '") + c + "'", start);
  }

  Token lex_string(Span start) {
    advance(); // opening quote
    std::string text;
    for (;;) {
      if (pos_ >= src_.size() || peek() == '\n')
        fail("unterminated string", start);
      char c = advance();
      if (c == '"')
        break;
      if (c == '\\') {
        if (pos_ >= src_.size())
          fail("unterminated string", start);
        char e = advance();
        switch (e) {
        case 'n':
          text += '\n';
          break;
        case 'r':
          text += '\r';
          break;
        case 't':
          text += '\t';
          break;
        case '"':
          text += '"';
          break;
        case '\\':
          text += '\\';
          break;
        default:
          fail(std::string("bad escape '\\") + e + "' in string", start);
        }
      } else {
        text += c;
      }
    }
    return finish(TokenKind::StringLit, std::move(text), start);
  }

  Token lex_bytes(Span start) {
    advance(); // 0
    advance(); // x
    std::string hex;
    while (std::isxdigit(static_cast<unsigned char>(peek())))
      hex += advance();
    if (hex.size() % 2 != 0)
      fail("bytes literal has odd number of hex digits", start);
    std::string raw;
    raw.reserve(hex.size() / 2);
    auto nibble = [](char h) -> int {
      if (h >= '0' && h <= '9')
        return h - '0';
      if (h >= 'a' && h <= 'f')
        return h - 'a' + 10;
      return h - 'A' + 10;
    };
    for (std::size_t i = 0; i < hex.size(); i += 2)
      raw += static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1]));
    return finish(TokenKind::BytesLit, std::move(raw), start);
  }
};

} // namespace

std::vector<Token> tokenize(std::string_view source) {
  return Lexer(source).run();
}

} // namespace tzv
