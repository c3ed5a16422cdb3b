// Copyright (c) intdec contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace intdec {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operands of a binary operation live in different dimensions.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// The automaton backend would exceed its configured variable limit.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Bad index, permutation, point or other malformed argument.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/// Unbound variable, sort clash or misuse of a closed/open formula.
class SortError : public Error {
  public:
    using Error::Error;
};

}  // namespace intdec
