#include "stk/oracle.hpp"

#include <functional>

#include "stk/error.hpp"

namespace stk {

namespace {

const MatrixRep& rep_of(const ContextPtr& ctx) {
  if (!ctx->rep) throw ConfigError("no matrix representation for " + ctx->phi->name());
  return *ctx->rep;
}

}  // namespace

SymMat identity_matrix(const ContextPtr& ctx) {
  return SymMat::identity(rep_of(ctx).dim(), ctx->ring->zero(), ctx->ring->one());
}

void apply_word(SymMat& m, const Word& w) {
  const auto& rep = rep_of(w.ctx());
  for (const auto& l : w.letters()) {
    if (l.is_diag()) {
      for (int j = 0; j < m.n; ++j)
        for (int i = 0; i < m.n; ++i)
          if (!m(i, j).is_zero()) m(i, j) = m(i, j) * l.diag[j];
    } else if (!l.coeff.is_zero()) {
      rep.apply_right(m, l.root, l.coeff);
    }
  }
}

SymMat eval(const Word& w) {
  SymMat m = identity_matrix(w.ctx());
  apply_word(m, w);
  return m;
}

LocMat eval_at(const Word& w, const EvalMap& phi) {
  const auto& rep = rep_of(w.ctx());
  const LocalRing* L = phi.target_ptr();
  LocMat m = LocMat::identity(rep.dim(), Loc(L, 0), Loc(L, 1));
  for (const auto& l : w.letters()) {
    if (l.is_diag()) {
      for (int j = 0; j < m.n; ++j) {
        Loc d = phi(l.diag[j]);
        for (int i = 0; i < m.n; ++i) m(i, j) = m(i, j) * d;
      }
    } else {
      rep.apply_right(m, l.root, phi(l.coeff));
    }
  }
  return m;
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::proved_equal: return "proved-equal-at-image";
    case Verdict::refuted: return "refuted";
    default: return "probably-equal";
  }
}

namespace {

Verdict randomized(const ContextPtr& ctx, const std::function<bool(const EvalMap&)>& agree, const Strategy& s) {
  for (int i = 0; i < s.seeds; ++i) {
    EvalMap phi(ctx->ring, default_target(i), s.seed * 7919 + i);
    if (!agree(phi)) return Verdict::refuted;
  }
  return Verdict::probably_equal;
}

bool use_symbolic(const ContextPtr& ctx, const Strategy& s) {
  if (s.kind == Strategy::Kind::symbolic) return true;
  if (s.kind == Strategy::Kind::randomized) {
    if (ctx->ring->base().finite()) throw ConfigError("randomized evaluation needs an integer base ring");
    return false;
  }
  return ctx->ring->base().finite();
}

}  // namespace

Verdict equal(const Word& a, const Word& b, const Strategy& s) {
  if (a.ctx() != b.ctx()) throw MixedSpecs();
  const auto& ctx = a.ctx();
  if (use_symbolic(ctx, s)) return eval(a) == eval(b) ? Verdict::proved_equal : Verdict::refuted;
  return randomized(ctx, [&](const EvalMap& phi) { return eval_at(a, phi) == eval_at(b, phi); }, s);
}

Verdict equal_matrix(const SymMat& a, const SymMat& b, const Strategy& s) {
  if (s.kind != Strategy::Kind::randomized) return a == b ? Verdict::proved_equal : Verdict::refuted;
  RingPtr R = a(0, 0).ring();
  for (int i = 0; i < s.seeds; ++i) {
    EvalMap phi(R, default_target(i), s.seed * 7919 + i);
    for (int k = 0; k < a.n * a.n; ++k)
      if (phi(a.a[k]) != phi(b.a[k])) return Verdict::refuted;
  }
  return Verdict::probably_equal;
}

bool membership(const SymMat& m, Predicate p, IdealTag ideal) {
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      const RingElem& x = m(i, j);
      switch (p) {
        case Predicate::entries_in_B:
          if (!b_membership(x)) return false;
          break;
        case Predicate::constant_in_X:
          if (!x.x_free()) return false;
          break;
        case Predicate::identity_mod_M:
        case Predicate::congruent_to_identity: {
          RingElem y = i == j ? x - x.ring()->one() : x;
          if (!in_ideal(y, p == Predicate::identity_mod_M ? IdealTag::M_laurent : ideal)) return false;
          break;
        }
      }
    }
  return true;
}

bool preserves_form(const ContextPtr& ctx, const SymMat& g) {
  if (ctx->phi->family() != Family::D) return true;
  auto F = ctx->rep->form().map([&](int64_t v) { return ctx->ring->constant(v); });
  return g.transpose() * F * g == F;
}

std::string matrix_dump(const SymMat& m) { return mat_str(m); }

}  // namespace stk
