/* Copyright 2026 The gwin Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gwin {

// Base of every error raised by the library. The CLI maps UsageError to exit
// code 1 and everything else to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated an operation's precondition (bad vertex, bad spec, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Input data could not be interpreted.
class DataError : public Error {
 public:
  using Error::Error;
};

class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Raised when a traversal that requires a DAG meets a cycle. `vertex` is a
// dense ID that lies on the offending cycle.
class CycleError : public DataError {
 public:
  CycleError(std::size_t vertex, const std::string& what)
      : DataError(what), vertex_(vertex) {}

  std::size_t vertex() const { return vertex_; }

 private:
  std::size_t vertex_;
};

// Serialized container is truncated, has the wrong magic, or does not match
// the graph it is loaded against.
class FormatError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace gwin
