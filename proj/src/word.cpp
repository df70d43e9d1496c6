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

#include "blockmzv/word.hpp"

#include <algorithm>

#include "blockmzv/errors.hpp"

namespace blockmzv {

Word::Word(std::string_view letters) : letters_(letters) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] != '0' && letters_[i] != '1') {
      throw InvalidInput("invalid word '" + letters_ + "': character '" +
                             std::string(1, letters_[i]) + "' at position " +
                             std::to_string(i + 1) + " is not 0 or 1",
                         i + 1);
    }
  }
}

Word Word::parse_nonempty(std::string_view letters) {
  if (letters.empty()) throw InvalidInput("empty word", 1);
  return Word(letters);
}

std::size_t Word::depth() const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), '1'));
}

Word Word::reversed() const {
  return Word(std::string(letters_.rbegin(), letters_.rend()), Trusted{});
}

Word Word::without(std::size_t i) const {
  std::string s = letters_;
  s.erase(i, 1);
  return Word(std::move(s), Trusted{});
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  return Word(letters_.substr(pos, len), Trusted{});
}

Word operator+(const Word& a, const Word& b) {
  return Word(a.letters_ + b.letters_, Word::Trusted{});
}

std::vector<Word> all_words(std::size_t length) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << length);
  std::string s(length, '0');
  for (std::size_t mask = 0; mask < (std::size_t{1} << length); ++mask) {
    for (std::size_t i = 0; i < length; ++i) {
      s[i] = (mask >> (length - 1 - i)) & 1u ? '1' : '0';
    }
    out.emplace_back(s);
  }
  return out;
}

}  // namespace blockmzv
