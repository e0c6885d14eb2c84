// Copyright 2026 The tql Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TQL_ERROR_HPP
#define TQL_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tql {

/// Base of every error thrown by the library. The CLI maps the concrete
/// subclasses onto distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke a precondition (degree mismatch, malformed literal, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded; nothing was truncated.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Data disagrees with its own declared metadata (corrupt generator file).
class DataIntegrityError : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in addition");
  return r;
}

}  // namespace tql

#endif  // TQL_ERROR_HPP
