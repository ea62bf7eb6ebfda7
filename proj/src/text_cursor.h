// Copyright 2026 The tagrtg Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TAGRTG_SRC_TEXT_CURSOR_H_
#define TAGRTG_SRC_TEXT_CURSOR_H_

#include <string>
#include <string_view>

#include "tagrtg/errors.h"

namespace tagrtg::internal {

// Position-tracking reader shared by the grammar, rule and term parsers.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  char peek_at(std::size_t offset) const {
    return pos_ + offset < text_.size() ? text_[pos_ + offset] : '\0';
  }
  std::size_t pos() const { return pos_; }
  int line() const { return line_; }
  int column() const { return column_; }

  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  // Skips blanks and '#' comments running to the end of the line.
  void skip_space() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') get();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        get();
      } else {
        break;
      }
    }
  }

  bool consume(char c) {
    skip_space();
    if (peek() != c) return false;
    get();
    return true;
  }

  void expect(char c) {
    if (!consume(c)) {
      fail(std::string("expected '") + c + "'" + found());
    }
  }

  bool consume_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    for (std::size_t i = 0; i < word.size(); ++i) get();
    return true;
  }

  std::string found() const {
    if (eof()) return ", found end of input";
    return std::string(", found '") + peek() + "'";
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, column_, message);
  }

  std::string_view rest() const { return text_.substr(pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

inline bool is_symbol_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return (u >= '0' && u <= '9') || (u >= 'a' && u <= 'z') ||
         (u >= 'A' && u <= 'Z') || c == '_' || c == '+' || c == '-' ||
         c == '\'' || c == '.' || u >= 0x80;
}

inline bool is_identifier_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return (u >= '0' && u <= '9') || (u >= 'a' && u <= 'z') ||
         (u >= 'A' && u <= 'Z') || c == '_' || c == '\'' || u >= 0x80;
}

inline std::string read_identifier(TextCursor& in) {
  in.skip_space();
  std::string out;
  while (!in.eof() && is_identifier_char(in.peek())) out += in.get();
  if (out.empty()) in.fail("expected an identifier" + in.found());
  return out;
}

}  // namespace tagrtg::internal

#endif  // TAGRTG_SRC_TEXT_CURSOR_H_
