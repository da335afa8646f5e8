#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kfunction.hpp"

namespace fnclass
{

/*! \brief Syntax error in an SP expression; position is a byte offset into the input. */
class ParseError : public std::invalid_argument
{
public:
  ParseError( std::size_t position, const std::string& message );
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// One factor: x_var (ring value) or x_var^exponent (indicator of x_var = exponent).
struct SPFactor
{
  int var;
  std::optional<Value> exponent;
};

struct SPTerm
{
  Value coefficient = 1;
  std::vector<SPFactor> factors;
};

/// Sum of products over Z_k.
struct SPExpression
{
  std::vector<SPTerm> terms;

  int max_var() const;
};

/*! \brief Parses `term {("+" | "⊕") term}` with `term = factor {["*"] factor}`
  and `factor = "x" index ["^" digit] | number`. Whitespace is ignored.

  Numbers and exponents must be below k.
*/
SPExpression parse_sp( std::string_view text, int k );

/// Truth table over n variables (default: the largest index used).
KFunction evaluate_sp( const SPExpression& e, int k, std::optional<int> n = std::nullopt );

/// parse_sp followed by evaluate_sp.
KFunction parse_expression( std::string_view text, int k, std::optional<int> n = std::nullopt );

/// Full SP form: one indicator product per non-zero table entry, "0" for the zero function.
std::string to_sp( const KFunction& f );

} // namespace fnclass
