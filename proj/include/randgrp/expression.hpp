#pragma once

#include <map>
#include <string>
#include <variant>

#include "randgrp/rational.hpp"

namespace randgrp {

// Value of an arithmetic expression: exact while only + - * / and integer
// powers of rationals are involved, double once a transcendental function
// (or an inexact operation) enters.
using Value = std::variant<Rational, double>;

double to_double(Value const& v);

// Parses and evaluates expressions such as "11*log(l)/(l*log(2*m-1))" or
// "2*d + 0.02".  Grammar: numbers (integer or decimal), variables bound in
// `vars`, + - * / ^, parentheses, unary minus, and the functions log (=ln),
// ln, exp, sqrt, ceil, floor.  Throws ParseError with the column of the
// offending character.
Value evaluate(std::string const& expr,
               std::map<std::string, Value> const& vars);

// Checks that `expr` parses with the given variable names bound.
void validate_expression(std::string const& expr,
                         std::map<std::string, Value> const& sample_vars);

}  // namespace randgrp
