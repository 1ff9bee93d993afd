/*
Copyright 2026 The stallings Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stallings {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-side contract was violated (non-regular input, mismatched
// presentations, bad divisor, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two objects built over different alphabets were combined.
class AlphabetMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Coset enumeration hit its bound: the index is larger than allowed or
// possibly infinite.
class CosetLimitExceeded : public Error {
 public:
  using Error::Error;
};

// The low-index search visited more nodes than its budget.
class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A constructed graph does not fulfill a relator of the target presentation.
class FulfillmentFailed : public Error {
 public:
  using Error::Error;
};

// Gluing input does not satisfy the coset-representative requirements.
class SpecInvalid : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace stallings
