#pragma once

#include <string>
#include <vector>

#include "stk/word.hpp"

namespace stk {

// X_ideal: x_g(Xf) outside every K-family (the X_{-a}(MX), X_{-b}(MX) factors)
enum class GenClass { P1, P2, P3, P4, P5, K1, K2, K3, K4, K5, Z, X_ideal, None };
std::string class_str(GenClass c);

// x_root(s), z_root(s, t), c_root(s, t), or an arbitrary word
struct Factor {
  enum class Shape { x, z, c, word };
  Shape shape = Shape::x;
  Root root = -1;
  RingElem s;
  RingElem t;
  Word w;

  static Factor x(Root r, RingElem s) { return {Shape::x, r, std::move(s), {}, {}}; }
  static Factor z(Root r, RingElem s, RingElem xi) { return {Shape::z, r, std::move(s), std::move(xi), {}}; }
  static Factor c(Root r, RingElem s, RingElem t) { return {Shape::c, r, std::move(s), std::move(t), {}}; }
  static Factor of(Word w) { return {Shape::word, -1, {}, {}, std::move(w)}; }

  Word word(const ContextPtr& ctx) const;
  std::string str(const RootSystem& phi) const;
};

struct ClassifiedFactor {
  Factor factor;
  GenClass cls = GenClass::None;
};

Word product(const ContextPtr& ctx, const std::vector<Factor>& fs);
Word product(const ContextPtr& ctx, const std::vector<ClassifiedFactor>& fs);

// generators of P_a(0); throws ConfigError for c or word shapes
GenClass classify_p(const ContextPtr& ctx, Root a, const Factor& f);
// generators of K(a, b) with fixed delta, and of Z_{a,b}; throws ConfigError on a bad configuration
GenClass classify_k(const ContextPtr& ctx, Root a, Root b, Root delta, const Factor& f);
// lowest root outside the A2 span of a, b that is acute to a
Root default_delta(const RootSystem& phi, Root a, Root b);

// p_a on products of z_g(Xf, xi) and c_delta(f, X xi) with one fixed delta orthogonal to a
RingElem p_functional(const ContextPtr& ctx, Root a, const std::vector<Factor>& fs);

struct Decomposition {
  std::string id;
  Word lhs;
  std::vector<ClassifiedFactor> rhs;

  Word rhs_word() const { return product(lhs.ctx(), rhs); }
};

struct ConjData {
  RingElem m;   // in M
  RingElem f;   // in M[X]
  RingElem xi;  // in A[X]
};

// conjugates of P_a(0) generators by x_{-a}(mX); ids eq3-1, eq3-2, eq3-3, eq:zalpha
// (aliases Z2-diff, Z2-sum, Z3, Z5-alpha). b is the companion root of the case.
Decomposition conj_p0_decompose(const ContextPtr& ctx, const std::string& which, Root a, Root b, const ConjData& d);
// first companion root valid for the case
Root conj_p0_companion(const RootSystem& phi, const std::string& which, Root a);

// z-relations 1..5 (ids zrels.1..zrels.5) and c-relations 1..4 (ids crels.1..crels.4)
Decomposition zrels_decompose(const ContextPtr& ctx, int part, Root a, Root b, const RingElem& s, const RingElem& xi,
                              const RingElem& eta);
Decomposition crels_decompose(const ContextPtr& ctx, int part, Root a, Root b, const RingElem& s, const RingElem& t,
                              const RingElem& xi);
// first b in the configuration a part needs
Root zrels_companion(const RootSystem& phi, int part, Root a);
Root crels_companion(const RootSystem& phi, int part, Root a);

struct KabSplit {
  std::vector<Factor> g0;
  RingElem m;
  RingElem m_prime;
};

// appends x_{-b}(-m'X) x_{-a}(-mX) and checks both residual p-values vanish
KabSplit kab_split(const ContextPtr& ctx, const std::vector<Factor>& g, Root a, Root b);

// g = xm_part * comm_part * base_part for g a product of z_{a_i}(f_i, xi_i), f_i in M[X], xi_i in A[X];
// base_part is the product of the constant-term factors
struct KDecomp {
  Word xm_part;
  Word comm_part;
  Word base_part;
};
KDecomp kdecomp1(const ContextPtr& ctx, const std::vector<Factor>& zs);

// intermediate words of the degree-lowering computation for [x_a(a t^d), x_g(b t^e)] = 1, a orthogonal to g;
// 0 < d <= e or d <= 0 <= e. Consecutive entries are equal in St.
struct Chain {
  int regime = 0;
  Root beta = -1;
  std::vector<Word> steps;
};
Chain superfluous_chain(const ContextPtr& ctx, Root a, Root g, const RingElem& ca, const RingElem& cb, int d, int e);

}  // namespace stk
