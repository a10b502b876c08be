#pragma once

#include <memory>
#include <string>
#include <vector>

#include "stk/constants.hpp"
#include "stk/matrix.hpp"
#include "stk/ring.hpp"
#include "stk/rootsys.hpp"

namespace stk {

struct Context {
  RootSystemPtr phi;
  RingPtr ring;
  ConstantTablePtr N;
  MatrixRepPtr rep;  // null for the E family

  static std::shared_ptr<const Context> make(RootSystemPtr phi, RingPtr ring);
  static std::shared_ptr<const Context> make(const std::string& system, RingPtr ring);
};

using ContextPtr = std::shared_ptr<const Context>;

// root letter x_root(coeff); a diagonal matrix letter when root < 0
struct Letter {
  Root root = -1;
  RingElem coeff;
  std::vector<RingElem> diag;

  bool is_diag() const { return root < 0; }
};

class Word {
 public:
  Word() = default;
  explicit Word(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  Word(ContextPtr ctx, std::vector<Letter> letters) : ctx_(std::move(ctx)), letters_(std::move(letters)) {}

  const ContextPtr& ctx() const { return ctx_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word operator*(const Word& o) const;
  Word& operator*=(const Word& o) { return *this = *this * o; }
  Word inverse() const;
  // letter-for-letter equality of coefficients
  bool same_letters(const Word& o) const;

 private:
  ContextPtr ctx_;
  std::vector<Letter> letters_;
};

// strict inverse, falling back to local-unit recognition
RingElem unit_inverse(const RingElem& x);

Word identity(const ContextPtr& ctx);
Word gen(const ContextPtr& ctx, Root a, const RingElem& f);
// diagonal matrix with the given entries along the diagonal
Word diag_letter(const ContextPtr& ctx, std::vector<RingElem> entries);
inline Word mul(const Word& x, const Word& y) { return x * y; }
inline Word inv(const Word& x) { return x.inverse(); }
// y^-1 x y
Word conj(const Word& x, const Word& y);
// y x y^-1
Word lconj(const Word& y, const Word& x);
// x y x^-1 y^-1
Word comm(const Word& x, const Word& y);
Word free_reduce(const Word& w);

Word w_elem(const ContextPtr& ctx, Root a, const RingElem& s);
Word h_elem(const ContextPtr& ctx, Root a, const RingElem& s);
// x_{-a}(-xi) x_a(s) x_{-a}(xi)
Word z_elem(const ContextPtr& ctx, Root a, const RingElem& s, const RingElem& xi);
// [x_a(s), x_{-a}(t)]
Word c_elem(const ContextPtr& ctx, Root a, const RingElem& s, const RingElem& t);
// h(st) h(s)^-1 h(t)^-1
Word sym_elem(const ContextPtr& ctx, Root a, const RingElem& s, const RingElem& t);
// declares 1+ab invertible when needed
Word ds_elem(const ContextPtr& ctx, Root a, const RingElem& x, const RingElem& y);

// all elements of a finite base ring (or of its maximal ideal), as constants
std::vector<RingElem> finite_elements(const RingPtr& ring, bool max_only = false);

// degree in the t = X^-1 grading; throws NonHomogeneous
int degree_of(const RingElem& coeff);
int degree_of(const Letter& l);

enum class RelType { R1, R2, R3_angle, R3_perp };

struct Relation {
  RelType type;
  Root alpha;
  Root beta;  // equals alpha for R1
  int d;
  int e;
  Word lhs;
  Word rhs;
  int degree() const;
  std::string tag() const;
};

int relation_degree(RelType type, int d, int e);
// drop rule for orthogonal commutator relations of high positive degree
bool superfluous(RelType type, int d, int e);

struct InstantiateOptions {
  int max_degree = 1;
  int min_degree = -1;
  bool drop_superfluous = true;
};

// symbolic rings: one generic instance per shape, coefficients from the ring's
// first two A-variables (degree >= 0) and M-variables (degree < 0);
// variable-free finite rings: all coefficient choices
std::vector<Relation> instantiate_relations(const ContextPtr& ctx, const InstantiateOptions& opt);

// replaces letters of degree > n by [x_{a-b}(N a t^{k-1}), x_b(t)], b the nth acute companion
Word reduce_degree(const Word& w, int n, int companion = 0);

}  // namespace stk
