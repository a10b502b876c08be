#pragma once

#include <string>
#include <vector>

#include "stk/oracle.hpp"
#include "stk/relgrp.hpp"

namespace stk {

// representative (g, h, u) of a class in the torsor; G and H cache the images of g and h
struct Triple {
  Word g;
  Word h;
  RingElem u;
  SymMat G;
  SymMat H;

  static Triple make(Word g, Word h, RingElem u);
  const ContextPtr& ctx() const { return g.ctx(); }
  // image of p(g, h, u) = g h {X, u}
  SymMat p_image() const { return G * H; }
};

// [p, h, u] in the quotient of triples; p over A[X] modulo M, h over A[X^-1]
struct TripleT {
  Word p;
  Word h;
  RingElem u;
};

Triple base_triple(const ContextPtr& ctx);
Triple from_vt(const TripleT& t);
TripleT to_vt(const Triple& t);

// Steinberg symbol {u, v}, trivial words for u = 1 or v = 1
Word symbol(const ContextPtr& ctx, const RingElem& u, const RingElem& v);

// x_a(aX^-1) g x_a(-aX^-1/(1+am)) {X, 1+am}
Word s_map(const ContextPtr& ctx, Root alpha, const RingElem& a, const Word& g, const RingElem& m);

// m with P in P_a(m), read from the X-linear part of P(0)^-1 P; P must have entries in A[X]
RingElem p_image_value(const ContextPtr& ctx, Root alpha, const SymMat& p);

// right-multiplies h by the inverse of p(0), so that p(0) = 1
Triple renormalize(const Triple& t);
Triple t_neg(const Triple& t, Root alpha, const RingElem& a);
Triple t_pos(const Triple& t, Root alpha, const RingElem& c);
// letters act right to left; coefficients must lie in B = A[X^-1] + M[X]
Triple act(const Word& w, const Triple& t);
// image-level: same g, same u, h1^-1 h2 constant and congruent to 1 mod M
bool triple_equiv(const Triple& a, const Triple& b);

// z_g(f, xi), f in M[X], xi in A[X], rewritten as a word over B
Word b_word_for_z(const ContextPtr& ctx, Root g, const RingElem& f, const RingElem& xi);
// [p1 p, h, u] for p1 a product of z-, x- and c-factors over (M[X], A[X])
TripleT act_relative(const std::vector<Factor>& p1, const TripleT& t);

struct BFactorization {
  Word p;
  Word h;
  RingElem u;
  bool p_polynomial = false;    // entries of the image in A[X]
  bool p_relative = false;      // image congruent to 1 mod M
  bool h_negative = false;      // letters over A[X^-1]
  bool product_matches = false;  // image of input = image(p) image(h)
  bool u_congruent = false;
  bool ok() const { return p_polynomial && p_relative && h_negative && product_matches && u_congruent; }
};
BFactorization factorize_b(const Word& w);

struct PullbackResult {
  Word g0;
  bool constant = false;  // common image has entries in A
  bool ok = false;        // image(g0) equals the common image
  SymMat residual;        // image(g_plus) - image(g0)
};
// throws ImageMismatch when the images differ
PullbackResult pullback_check(const Word& g_plus, const Word& g_minus);

// consecutive entries are equal; the derivation of S_a(a, x_{-a}(mX))
std::vector<Word> tulenbaev_chain(const ContextPtr& ctx, Root alpha, const RingElem& a, const RingElem& m);
// g0 in K(a, b) with <a,b> = 1; g = g0 x_{-a}(mX) x_{-b}(m'X)
std::vector<Word> sr_sharp_chain(const ContextPtr& ctx, Root alpha, Root beta, const RingElem& a, const Word& g0,
                                 const RingElem& m, const RingElem& mp);
// S_a(a, x_{-b}(m'X) x_{-a}(mX)) h_a(1+am)^-1 h_{b-a}(c^-1) x_{b-a}(-bc) rewritten, c = 1 + eps a b m'
std::vector<Word> sr_obtuse_chain(const ContextPtr& ctx, Root alpha, Root beta, const RingElem& a, const RingElem& b,
                                  const RingElem& m, const RingElem& mp);
// the two coset products whose p-values are predicted in the acute and obtuse cases
Word sr_sharp_product(const ContextPtr& ctx, Root alpha, Root beta, const RingElem& a, const Word& g,
                      const RingElem& m, const RingElem& mp);
Word sr_obtuse_product(const ContextPtr& ctx, Root alpha, Root beta, const RingElem& a, const RingElem& b,
                       const Word& g, const RingElem& m, const RingElem& mp);

}  // namespace stk
