#pragma once

#include <stdexcept>
#include <string>

namespace trihomo {

// Arithmetic left the checked 128-bit range. Silent wraparound is never
// allowed anywhere in the library.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

// Vectors/matrices from different ambient spaces, wrong row counts, etc.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Ill-formed move for the matrix it is applied to (i == j slide, index out
// of range, zero or non-integer twist vector, bad permutation).
struct MoveError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An operation that requires concrete integer entries saw a degree >= 1
// polynomial. The caller has to evaluate first.
struct SymbolicEntryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Text-level failure in polynomial strings, matrix files or certificates.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line = 0, int column = 0)
        : std::runtime_error(line > 0 ? format(msg, line, column) : msg),
          line(line),
          column(column) {}

    int line;    // 1-based, 0 = unknown
    int column;  // 1-based, 0 = unknown

  private:
    static std::string format(const std::string& msg, int line, int column) {
        std::string s = "line " + std::to_string(line);
        if (column > 0) s += ", column " + std::to_string(column);
        return s + ": " + msg;
    }
};

// File could not be read or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace trihomo
