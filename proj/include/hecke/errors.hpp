/*
 * Copyright 2026 The hecke-models Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HECKE_ERRORS_HPP_
#define HECKE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hecke {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A series or polynomial violated an operation's precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

class UndefinedOrderError : public Error {
 public:
  using Error::Error;
};

class PrecisionError : public Error {
 public:
  using Error::Error;
};

class CalibrationError : public Error {
 public:
  using Error::Error;
};

// Guard samples disagreed with the interpolant.
class InterpolationError : public Error {
 public:
  using Error::Error;
};

class StructureError : public Error {
 public:
  using Error::Error;
};

// A rational with negative p-order was coerced into characteristic p.
class CoercionDomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateModelError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class CacheCorruptionError : public Error {
 public:
  using Error::Error;
};

// Field work would exceed the configured order budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hecke

#endif  // HECKE_ERRORS_HPP_
