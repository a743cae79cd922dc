#pragma once

#include <stdexcept>
#include <string>

namespace sblab {

// Error taxonomy shared by the library and the CLI. The CLI maps kinds to
// process exit codes: Input/Dimension -> 2, Resource -> 3.
enum class ErrorKind {
    Input,      // malformed problem data, bad arguments, zero where nonzero required
    Dimension,  // ring-context mismatch (variable count or coefficient field)
    Resource,   // desk-scale guardrail exceeded
    Internal,   // broken invariant; always a bug
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

inline Error input_error(const std::string& msg) { return Error(ErrorKind::Input, msg); }
inline Error dimension_error(const std::string& msg) { return Error(ErrorKind::Dimension, msg); }
inline Error resource_error(const std::string& msg) { return Error(ErrorKind::Resource, msg); }
inline Error internal_error(const std::string& msg) { return Error(ErrorKind::Internal, msg); }

// Parse errors carry a source position.
class ParseError : public Error {
  public:
    ParseError(int line, int column, const std::string& msg)
        : Error(ErrorKind::Input,
                "parse error at line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

}  // namespace sblab
