#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topt {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular over GF(2)") {}
};

class UnsupportedGate : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class ParityMismatch : public Error {
public:
    ParityMismatch() : Error("signatures of input and output phase functions differ") {}
};

class EmptyColumn : public Error {
public:
    explicit EmptyColumn(std::size_t column)
        : Error("column " + std::to_string(column) + " of the synthesis matrix is zero") {}
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

}  // namespace topt
