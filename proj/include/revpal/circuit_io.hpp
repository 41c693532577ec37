#pragma once

#include <stdexcept>
#include <string>

#include "revpal/circuit.hpp"

namespace revpal
{

/// Syntax or range error in a circuit file; line and column are 1-based.
class ParseError : public std::runtime_error
{
public:
  ParseError(std::size_t line, std::size_t column, std::string const &message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Circuit text format:
///
///   # comment (to end of line, anywhere)
///   .lines 3           required, before any gate
///   .ancilla 4         optional
///   t -x1 -x2 x3       Toffoli; controls x<i> / -x<i>, last token is target
///   v x1 x3            controlled V
///   v+ x3              controlled V-dagger
Circuit parse_circuit(std::string const &text);

/// Canonical text: header lines, then one gate per line with controls in
/// ascending line order.
std::string serialize_circuit(Circuit const &c);

} // namespace revpal
