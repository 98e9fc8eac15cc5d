#ifndef BERK_PARSE_HPP
#define BERK_PARSE_HPP

#include <string>

#include "berk/series.hpp"

namespace berk {

// Series literal grammar:
//   series := term (('+'|'-') term)* ; term := rat ('*' tpow)? | tpow ;
//   tpow   := 't' ('^' exp)? ; exp := rat | '(' rat ')' ; rat := int ('/' posint)?
// Whitespace is allowed between tokens. Result is exact (infinite precision).
Series parse_series(const std::string& text);

}  // namespace berk

#endif
