// Copyright 2026 The blockmzv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace blockmzv {

// A word over {e0, e1}, written with the characters '0' and '1'.
class Word {
 public:
  Word() = default;
  // Throws InvalidInput naming the first bad character (1-based).
  explicit Word(std::string_view letters);

  // Like the constructor, but also rejects the empty word.
  static Word parse_nonempty(std::string_view letters);

  const std::string& str() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  std::size_t weight() const noexcept { return letters_.size(); }
  std::size_t depth() const noexcept;
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  char front() const { return letters_.front(); }
  char back() const { return letters_.back(); }

  Word reversed() const;
  // The word with the letter at 0-based position i removed.
  Word without(std::size_t i) const;
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;

  friend Word operator+(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  struct Trusted {};
  Word(std::string letters, Trusted) : letters_(std::move(letters)) {}

  std::string letters_;
};

// All words of the given length in lexicographic order.
std::vector<Word> all_words(std::size_t length);

}  // namespace blockmzv
