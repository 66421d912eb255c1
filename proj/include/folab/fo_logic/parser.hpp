#pragma once

#include <set>
#include <string>
#include <string_view>

#include "folab/fo_logic/formula.hpp"

namespace folab {

// Grammar:
//   f := 'E' var '.' f | 'A' var '.' f | '!' f | 'adj(' var ',' var ')' | var '=' var
//      | '(' f ')' | '(' f ('&' f)+ ')' | '(' f ('|' f)+ ')' | '(' f '->' f ')'
// A quantifier body is a single f, so "E x . (p & q)" needs the parentheses.
// Variables must be bound or listed in free_vars. ParseError positions are 1-based.
Formula parse_formula(std::string_view text, const std::set<std::string>& free_vars = {});

}  // namespace folab
