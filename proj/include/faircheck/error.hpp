#pragma once

#include <stdexcept>
#include <string>

namespace faircheck {

enum class ErrorKind {
  AlphabetMismatch,
  SymbolNotInAlphabet,
  NotPrefixClosed,
  NotNormalForm,
  PreconditionFailed,
  Syntax,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. Syntax errors carry a 1-based
/// line/column when they come from a file or a formula string.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  Error(ErrorKind kind, const std::string& message, int line, int column);

  ErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  ErrorKind kind_;
  int line_ = 0;
  int column_ = 0;
};

}  // namespace faircheck
