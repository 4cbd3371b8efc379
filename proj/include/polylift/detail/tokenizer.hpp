#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "polylift/error.hpp"

namespace polylift::detail {

  struct Token {
    enum class Kind { LParen, RParen, Equals, String, Word, End };

    Kind             kind;
    std::string_view text;
    std::size_t      pos;
  };

  // Splits prefix-notation text into parentheses, '=', "quoted strings" and
  // whitespace-delimited words.
  inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t        pos = 0;
    while (pos < text.size()) {
      char const c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == '(') {
        out.push_back({Token::Kind::LParen, text.substr(pos, 1), pos});
        ++pos;
      } else if (c == ')') {
        out.push_back({Token::Kind::RParen, text.substr(pos, 1), pos});
        ++pos;
      } else if (c == '=') {
        out.push_back({Token::Kind::Equals, text.substr(pos, 1), pos});
        ++pos;
      } else if (c == '"') {
        auto const close = text.find('"', pos + 1);
        if (close == std::string_view::npos) {
          throw ParseError("unterminated string", pos);
        }
        out.push_back({Token::Kind::String, text.substr(pos + 1, close - pos - 1), pos});
        pos = close + 1;
      } else {
        auto const start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))
               && text[pos] != '(' && text[pos] != ')' && text[pos] != '=' && text[pos] != '"') {
          ++pos;
        }
        out.push_back({Token::Kind::Word, text.substr(start, pos - start), start});
      }
    }
    out.push_back({Token::Kind::End, {}, text.size()});
    return out;
  }

  class TokenStream {
   public:
    explicit TokenStream(std::string_view text) : tokens_(tokenize(text)) {}

    Token const& peek() const { return tokens_[pos_]; }
    Token const& next() {
      Token const& t = tokens_[pos_];
      if (t.kind != Token::Kind::End) {
        ++pos_;
      }
      return t;
    }
    bool at_end() const { return peek().kind == Token::Kind::End; }

    void expect(Token::Kind kind, char const* what) {
      auto const& t = next();
      if (t.kind != kind) {
        throw ParseError(std::string("expected ") + what + ", got '" + std::string(t.text) + "'",
                         t.pos);
      }
    }

    int number() {
      auto const& t     = next();
      int         value = 0;
      auto [ptr, ec]    = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
      if (t.kind != Token::Kind::Word || ec != std::errc{} || ptr != t.text.data() + t.text.size()
          || value < 0) {
        throw ParseError("expected index, got '" + std::string(t.text) + "'", t.pos);
      }
      return value;
    }

   private:
    std::vector<Token> tokens_;
    std::size_t        pos_ = 0;
  };

  // Parses the digits after a one-letter prefix ("x12" -> 12); -1 if not of that form.
  inline int suffix_index(std::string_view word, std::size_t prefix_len) {
    if (word.size() <= prefix_len) {
      return -1;
    }
    int  value     = 0;
    auto digits    = word.substr(prefix_len);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 0) {
      return -1;
    }
    return value;
  }

}  // namespace polylift::detail
