// Copyright 2026 The dvworkbench Authors
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

#ifndef DV_ERROR_HPP
#define DV_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dv {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad element index, bad file, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// An operation was called on a value that does not meet its precondition,
/// e.g. dualizing a morphism between algebras that are not compingent.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Syntax error with a 1-based source location.
class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace dv

#endif  // DV_ERROR_HPP
