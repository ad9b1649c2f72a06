/*
   Copyright 2026 The fsig authors

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

#ifndef FSIG_ERRORS_HPP
#define FSIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fsig {

/// Base class of every error thrown by the library.  The CLI maps these
/// onto exit codes: validation errors -> 2, budget errors -> 3.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public Error {
  public:
    using Error::Error;
};

class BudgetError : public Error {
  public:
    using Error::Error;
};

class DivisionByZero : public ValidationError {
  public:
    DivisionByZero() : ValidationError("division by zero field element") {}
};

class NotAPthPower : public ValidationError {
  public:
    explicit NotAPthPower(const std::string& what) : ValidationError(what) {}
};

class AmbientMismatch : public ValidationError {
  public:
    explicit AmbientMismatch(const std::string& what) : ValidationError(what) {}
};

class DegreeBudgetExceeded : public BudgetError {
  public:
    explicit DegreeBudgetExceeded(const std::string& what) : BudgetError(what) {}
};

class NotZeroDimensional : public ValidationError {
  public:
    explicit NotZeroDimensional(const std::string& what) : ValidationError(what) {}
};

class NotPrimaryToOrigin : public ValidationError {
  public:
    explicit NotPrimaryToOrigin(const std::string& what) : ValidationError(what) {}
};

class NotProperContainment : public ValidationError {
  public:
    explicit NotProperContainment(const std::string& what) : ValidationError(what) {}
};

class ZeroMatrix : public ValidationError {
  public:
    ZeroMatrix() : ValidationError("matrix of socle coordinates must be nonzero") {}
};

class ShapeMismatch : public ValidationError {
  public:
    explicit ShapeMismatch(const std::string& what) : ValidationError(what) {}
};

class TooManySubspaces : public BudgetError {
  public:
    explicit TooManySubspaces(const std::string& what) : BudgetError(what) {}
};

class IncompatibleSpec : public ValidationError {
  public:
    explicit IncompatibleSpec(const std::string& what) : ValidationError(what) {}
};

class ParseError : public ValidationError {
  public:
    ParseError(int line, int column, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    int line;
    int column;
};

class UnknownVariable : public ValidationError {
  public:
    explicit UnknownVariable(const std::string& name)
        : ValidationError("unknown variable '" + name + "'") {}
};

class UnknownIdeal : public ValidationError {
  public:
    explicit UnknownIdeal(const std::string& name)
        : ValidationError("unknown ideal '" + name + "'") {}
};

}  // namespace fsig

#endif
