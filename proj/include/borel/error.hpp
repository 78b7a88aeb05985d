#ifndef BOREL_ERROR_HPP
#define BOREL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace borel {

/// Malformed input or a violated precondition.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Text that does not match one of the grammars. Line and column are 1-based;
/// line is 0 when the text did not come from a file.
class ParseError : public InvalidArgument {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InvalidArgument(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::string out = "parse error";
    if (line != 0) out += " at line " + std::to_string(line);
    out += (line != 0 ? ", column " : " at column ") + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A configured vertex, check or step budget was exceeded. Never a silent truncation.
class ResourceLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace borel

#endif
