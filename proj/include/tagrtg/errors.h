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

#ifndef TAGRTG_ERRORS_H_
#define TAGRTG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tagrtg {

// Syntax error in any of the text formats, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A well-formedness violation in a loaded grammar.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tagrtg

#endif  // TAGRTG_ERRORS_H_
