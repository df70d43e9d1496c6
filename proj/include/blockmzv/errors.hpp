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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace blockmzv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: bad characters in a word, empty words where a
// nonempty one is required, out-of-range parameters.
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what,
                        std::optional<std::size_t> position = std::nullopt)
      : Error(what), position_(position) {}

  // 1-based position of the first offending character, when known.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  std::optional<std::size_t> position_;
};

class InexactDivision : public Error {
 public:
  using Error::Error;
};

// A monomial outside the image of the block encoding.
class InvalidMonomial : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class NotLieElement : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace blockmzv
