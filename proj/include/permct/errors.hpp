#ifndef PERMCT_ERRORS_HPP
#define PERMCT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permct
{

// Violated precondition or invariant on otherwise well-formed input. The
// message names the invariant.
class InvalidInput : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class DegreeCapExceeded : public InvalidInput
{
public:
  using InvalidInput::InvalidInput;
};

// Syntax error in a textual input. Line and column are 1-based.
class ParseError : public std::runtime_error
{
public:
  ParseError(std::string const &message, std::size_t line, std::size_t column)
  : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                       ": " + message),
    line_(line),
    column_(column)
  {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

// A brute-force oracle would have to exceed its configured work limit.
class BudgetExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace permct

#endif // PERMCT_ERRORS_HPP
