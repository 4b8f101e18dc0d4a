/* Copyright (C) 2026 The stickel Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace stickel {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (bad conductor, non-coprime
// twist, even order where odd is required, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

// All stored lambda-adic digits vanished; retry with a larger precision.
class PrecisionExhausted : public Error {
public:
  explicit PrecisionExhausted(long precision)
      : Error("precision exhausted at lambda-precision " +
              std::to_string(precision)),
        precision_(precision) {}
  long precision() const { return precision_; }

private:
  long precision_;
};

// Group-law or subgroup validation failure.
class GroupError : public Error {
public:
  using Error::Error;
};

// An invariant that cannot fail for valid inputs did fail.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace stickel
