/*
 * Copyright 2026 The ergvc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ergvc/dsl.hpp"

#include <cctype>
#include <vector>

#include "ergvc/error.hpp"

namespace ergvc {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  IntervalUnion parse() {
    skip_ws();
    if (peek() == '{') {
      ++pos_;
      expect('}');
      skip_ws();
      if (pos_ != text_.size()) throw SyntaxError("trailing input", pos_);
      return IntervalUnion();
    }
    std::vector<Interval> terms;
    terms.push_back(term());
    skip_ws();
    while (pos_ < text_.size()) {
      if (peek() != 'u') throw SyntaxError("expected 'u'", pos_);
      ++pos_;
      terms.push_back(term());
      skip_ws();
    }
    return IntervalUnion::normalize(std::move(terms));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c)
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Interval term() {
    expect('[');
    const std::size_t at = pos_;
    Rat lo = rat();
    expect(',');
    Rat hi = rat();
    expect(')');
    if (!(lo < hi))
      throw DomainError("interval starting at position " + std::to_string(at) +
                        " has lo >= hi");
    return {std::move(lo), std::move(hi)};
  }

  Rat rat() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    digits();
    if (peek() == '/') {
      ++pos_;
      digits();
    }
    try {
      return Rat::parse(text_.substr(start, pos_ - start));
    } catch (const SyntaxError& e) {
      throw SyntaxError("malformed rational", start + e.position());
    }
  }

  void digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw SyntaxError("expected digit", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntervalUnion parse_interval_union(std::string_view text) {
  return Parser(text).parse();
}

}  // namespace ergvc
