#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stk/local.hpp"
#include "stk/matrix.hpp"
#include "stk/word.hpp"

namespace stk {

using SymMat = Mat<RingElem>;
using LocMat = Mat<Loc>;

SymMat identity_matrix(const ContextPtr& ctx);
// product of letter images, left to right
SymMat eval(const Word& w);
LocMat eval_at(const Word& w, const EvalMap& phi);
// right multiplication by the image of w, in place
void apply_word(SymMat& m, const Word& w);

enum class Verdict { proved_equal, refuted, probably_equal };
std::string verdict_str(Verdict v);

struct Strategy {
  enum class Kind { symbolic, randomized, automatic };
  Kind kind = Kind::automatic;
  int seeds = 12;
  uint64_t seed = 1;

  static Strategy symbolic() { return {Kind::symbolic, 0, 0}; }
  static Strategy randomized(int n, uint64_t seed = 1) { return {Kind::randomized, n, seed}; }
};

// automatic: symbolic over finite bases, randomized otherwise
Verdict equal(const Word& a, const Word& b, const Strategy& s = {});
Verdict equal_matrix(const SymMat& a, const SymMat& b, const Strategy& s = {});

// identity_mod_M: m - I has entries in M[X, X^-1]; congruent_to_identity uses the given ideal
enum class Predicate { entries_in_B, constant_in_X, identity_mod_M, congruent_to_identity };
bool membership(const SymMat& m, Predicate p, IdealTag ideal = IdealTag::M_laurent);

// g^T F g = F for the D family; always true for A
bool preserves_form(const ContextPtr& ctx, const SymMat& g);

std::string matrix_dump(const SymMat& m);

}  // namespace stk
