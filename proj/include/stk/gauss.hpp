#pragma once

#include "stk/oracle.hpp"

namespace stk {

// word with image m, as lower unipotent * torus * upper unipotent; m must be X-free with unit leading minors.
// The torus part is a product of h letters for the A family and one diagonal letter otherwise.
Word elementary_factor(const ContextPtr& ctx, const SymMat& m);

// unipotent matrix (upper or lower) to root letters, peeled by height
Word unipotent_factor(const ContextPtr& ctx, const SymMat& u, bool upper);

}  // namespace stk
