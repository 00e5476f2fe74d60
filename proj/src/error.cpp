#include "faircheck/error.hpp"

namespace faircheck {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::SymbolNotInAlphabet: return "SymbolNotInAlphabet";
    case ErrorKind::NotPrefixClosed: return "NotPrefixClosed";
    case ErrorKind::NotNormalForm: return "NotNormalForm";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

}  // namespace faircheck
