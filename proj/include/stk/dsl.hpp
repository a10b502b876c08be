#pragma once

#include <string>
#include <string_view>

#include "stk/ring.hpp"
#include "stk/word.hpp"

namespace stk {

// integers, variables, X, X^-1, + - * ^, and division by units only; throws ParseError
RingElem parse_ring(const RingPtr& ring, std::string_view text);

// word grammar:
//   expr   := factor { "*" factor }
//   factor := atom | inv(expr) | comm(expr,expr) | conj(expr,expr) | (expr) | 1
//   atom   := x|h|w [root](r) | z|c|sym|ds [root](r,r) | diag(r,...,r)
Word parse_word(const ContextPtr& ctx, std::string_view text);

// letter-by-letter rendering that parse_word reads back
std::string print_word(const Word& w);

}  // namespace stk
