// Copyright 2026 The retroeda Authors.
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

#ifndef RETROEDA_ERRORS_H_
#define RETROEDA_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace retroeda {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyMolecule : public Error {
 public:
  using Error::Error;
};

class EmptyBuildingBlockSet : public Error {
 public:
  EmptyBuildingBlockSet() : Error("building-block set is empty") {}
};

// Malformed input text. `line` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& message)
      : Error(source + ":" + std::to_string(line) + ": " + message),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

class BetaOutOfRange : public ParseError {
 public:
  using ParseError::ParseError;
};

class GeneOutOfRange : public Error {
 public:
  using Error::Error;
};

class DegenerateConfig : public Error {
 public:
  using Error::Error;
};

class SpaceTooLarge : public Error {
 public:
  using Error::Error;
};

class ZeroWorkers : public Error {
 public:
  ZeroWorkers() : Error("worker count must be at least 1") {}
};

// Invalid run configuration (bad key, bad value, missing input).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace retroeda

#endif  // RETROEDA_ERRORS_H_
