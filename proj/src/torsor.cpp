#include "stk/torsor.hpp"

#include <stdexcept>

#include "stk/error.hpp"
#include "stk/gauss.hpp"

namespace stk {

namespace {

RingElem one(const ContextPtr& ctx) { return ctx->ring->one(); }
RingElem xvar(const ContextPtr& ctx) { return ctx->ring->X(); }
RingElem xinv(const ContextPtr& ctx) { return ctx->ring->Xinv(); }

bool mat_equal(const SymMat& a, const SymMat& b) { return equal_matrix(a, b) != Verdict::refuted; }

SymMat at_x0(const SymMat& m) {
  SymMat out = m;
  for (auto& e : out.a) e = e.at_x0();
  return out;
}

void require_poly(const SymMat& p) {
  for (const auto& e : p.a)
    if (!in_a_poly(e)) throw std::logic_error("p-image left A[X]: " + e.str());
}

// sum of the X^k parts with k >= 0
RingElem nonneg_part(const RingElem& c) {
  RingElem out = c.ring()->zero();
  if (c.is_zero()) return out;
  for (int k = std::max(0, c.min_x()); k <= c.max_x(); ++k) out += c.x_coeff(k) * c.ring()->X().pow(k);
  return out;
}

Word hinv(const ContextPtr& ctx, Root a, const RingElem& u) { return h_elem(ctx, a, u).inverse(); }

}  // namespace

Triple Triple::make(Word g, Word h, RingElem u) {
  Triple t{std::move(g), std::move(h), std::move(u), {}, {}};
  t.G = eval(t.g);
  t.H = eval(t.h);
  return t;
}

Triple base_triple(const ContextPtr& ctx) { return Triple::make(identity(ctx), identity(ctx), one(ctx)); }

Word symbol(const ContextPtr& ctx, const RingElem& u, const RingElem& v) {
  if (u.is_one() || v.is_one()) return identity(ctx);
  return sym_elem(ctx, 0, u, v);
}

Triple from_vt(const TripleT& t) {
  const ContextPtr& ctx = t.p.ctx();
  return Triple::make(t.p * t.h * symbol(ctx, t.u, xvar(ctx)), t.h.inverse(), t.u);
}

TripleT to_vt(const Triple& t) {
  const ContextPtr& ctx = t.ctx();
  return {t.g * t.h * symbol(ctx, xvar(ctx), t.u), t.h.inverse(), t.u};
}

Word s_map(const ContextPtr& ctx, Root alpha, const RingElem& a, const Word& g, const RingElem& m) {
  RingElem c = one(ctx) + a * m;
  RingElem ci = unit_inverse(c);
  return gen(ctx, alpha, a * xinv(ctx)) * g * gen(ctx, alpha, -(a * xinv(ctx) * ci)) * symbol(ctx, xvar(ctx), c);
}

RingElem p_image_value(const ContextPtr& ctx, Root alpha, const SymMat& p) {
  require_poly(p);
  SymMat p0 = at_x0(p);
  SymMat y = p;
  if (p0 != identity_matrix(ctx)) y = eval(elementary_factor(ctx, p0).inverse()) * p;
  const auto& e = ctx->rep->pattern(ctx->phi->neg(alpha))[0];
  return y(e.row, e.col).x_coeff(1) * static_cast<int64_t>(e.sign);
}

Triple renormalize(const Triple& t) {
  const ContextPtr& ctx = t.ctx();
  SymMat p = t.p_image();
  require_poly(p);
  SymMat p0 = at_x0(p);
  if (p0 == identity_matrix(ctx)) return t;
  Word h0 = elementary_factor(ctx, p0).inverse();
  Triple out{t.g, t.h * h0, t.u, t.G, t.H};
  apply_word(out.H, h0);
  return out;
}

Triple t_neg(const Triple& t, Root alpha, const RingElem& a) {
  const ContextPtr& ctx = t.ctx();
  Triple r = renormalize(t);
  RingElem m = p_image_value(ctx, alpha, r.p_image());
  RingElem c = one(ctx) + a * m;
  RingElem ax = a * xinv(ctx);
  RingElem hc = -(ax * unit_inverse(c));
  r.g = gen(ctx, alpha, ax) * r.g;
  ctx->rep->apply_left(r.G, alpha, ax);
  r.h = r.h * gen(ctx, alpha, hc);
  ctx->rep->apply_right(r.H, alpha, hc);
  r.u = r.u * c;
  return r;
}

Triple t_pos(const Triple& t, Root alpha, const RingElem& c) {
  const ContextPtr& ctx = t.ctx();
  RingElem a = c.at_x0();
  if (!in_a_poly(c) || !in_ideal(c - a, IdealTag::XM_poly))
    throw ConfigError("coefficient outside A + XM[X]: " + c.str());
  Triple r = t;
  r.g = gen(ctx, alpha, c) * r.g;
  ctx->rep->apply_left(r.G, alpha, c);
  if (!a.is_zero()) {
    r.h = r.h * gen(ctx, alpha, -a);
    ctx->rep->apply_right(r.H, alpha, -a);
  }
  return r;
}

Triple act(const Word& w, const Triple& t) {
  const ContextPtr& ctx = t.ctx();
  if (!ctx->rep) throw ConfigError("the torsor action needs a matrix representation");
  Triple cur = t;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    if (it->is_diag()) throw ConfigError("diagonal letters do not act on the torsor");
    const RingElem& c = it->coeff;
    if (c.is_zero()) continue;
    if (!b_membership(c)) throw ConfigError("coefficient outside B: " + c.str());
    // x(c) = x(c_{>=0}) x(c_{-1} X^-1) x(c_{-2} X^-2) ..., pieces commute
    for (int k = c.min_x(); k <= -2; ++k) {
      RingElem piece = c.x_coeff(k) * ctx->ring->Xinv().pow(-k);
      if (piece.is_zero()) continue;
      cur = act(reduce_degree(gen(ctx, it->root, piece), 1), cur);
    }
    if (c.min_x() <= -1) {
      RingElem a = c.x_coeff(-1);
      if (!a.is_zero()) cur = t_neg(cur, it->root, a);
    }
    RingElem pos = nonneg_part(c);
    if (!pos.is_zero()) cur = t_pos(cur, it->root, pos);
  }
  return cur;
}

bool triple_equiv(const Triple& a, const Triple& b) {
  if (a.u != b.u) return false;
  if (!mat_equal(a.G, b.G)) return false;
  SymMat q = eval(a.h.inverse()) * b.H;
  return membership(q, Predicate::constant_in_X) && membership(q, Predicate::identity_mod_M);
}

Word b_word_for_z(const ContextPtr& ctx, Root g, const RingElem& f, const RingElem& xi) {
  const auto& phi = *ctx->phi;
  if (xi.is_zero() || xi.x_free()) return z_elem(ctx, g, f, xi);
  if (!in_a_poly(xi)) throw ConfigError("xi outside A[X]: " + xi.str());
  RingElem a = xi.at_x0();
  RingElem rest = (xi - a) * xinv(ctx);
  // z_g(f, X xi') via the fifth z-relation, g = al + be
  Root al = -1, be = -1;
  for (Root r = 0; r < phi.size() && al < 0; ++r) {
    Root d = phi.diff(g, r);
    if (d >= 0) al = r, be = d;
  }
  if (al < 0) throw ConfigError("no decomposition of " + phi.format(g) + " as a sum of roots");
  const int eps = (*ctx->N)(al, be);
  const RingElem X = xvar(ctx);
  const RingElem X2 = X * X;
  Word w = gen(ctx, al, eps * (X * f)) * gen(ctx, phi.neg(be), -(X2 * f * rest)) * gen(ctx, be, rest * f) *
           gen(ctx, g, f) * b_word_for_z(ctx, al, -(eps * (X * f)), -(eps * rest)) *
           gen(ctx, phi.neg(al), -(eps * (X * rest * rest * f))) * gen(ctx, phi.neg(g), -(X2 * f * rest * rest)) *
           z_elem(ctx, phi.neg(be), X2 * f * rest, -xinv(ctx));
  if (!a.is_zero()) w = gen(ctx, phi.neg(g), -a) * w * gen(ctx, phi.neg(g), a);
  return w;
}

TripleT act_relative(const std::vector<Factor>& p1, const TripleT& t) {
  const ContextPtr& ctx = t.p.ctx();
  Word w(ctx);
  for (const auto& f : p1) {
    switch (f.shape) {
      case Factor::Shape::x:
        w *= gen(ctx, f.root, f.s);
        break;
      case Factor::Shape::z:
        w *= b_word_for_z(ctx, f.root, f.s, f.t);
        break;
      case Factor::Shape::c:
        // c_d(f, X xi) = x_d(f) z_d(-f, -X xi)
        w *= gen(ctx, f.root, f.s) * b_word_for_z(ctx, f.root, -f.s, -f.t);
        break;
      case Factor::Shape::word:
        throw ConfigError("act_relative takes x, z and c factors only");
    }
  }
  return to_vt(act(w, from_vt(t)));
}

BFactorization factorize_b(const Word& w) {
  const ContextPtr& ctx = w.ctx();
  TripleT tt = to_vt(act(w, base_triple(ctx)));
  BFactorization out{tt.p, tt.h, tt.u};
  SymMat p = eval(tt.p);
  out.p_polynomial = true;
  for (const auto& e : p.a) out.p_polynomial = out.p_polynomial && in_a_poly(e);
  out.p_relative = membership(p, Predicate::identity_mod_M);
  out.h_negative = true;
  for (const auto& l : tt.h.letters())
    if (!l.is_diag() && !l.coeff.is_zero() && l.coeff.max_x() > 0) out.h_negative = false;
  out.product_matches = mat_equal(eval(w), p * eval(tt.h));
  out.u_congruent = tt.u.x_free() && in_m(tt.u - one(ctx));
  return out;
}

PullbackResult pullback_check(const Word& g_plus, const Word& g_minus) {
  const ContextPtr& ctx = g_plus.ctx();
  SymMat a = eval(g_plus);
  if (!mat_equal(a, eval(g_minus))) throw ImageMismatch("g_plus and g_minus have different images");
  for (const auto& l : g_plus.letters())
    if (!l.is_diag() && !in_a_poly(l.coeff)) throw ConfigError("g_plus letter outside A[X]: " + l.coeff.str());
  for (const auto& l : g_minus.letters())
    if (!l.is_diag() && !l.coeff.is_zero() && l.coeff.max_x() > 0)
      throw ConfigError("g_minus letter outside A[X^-1]: " + l.coeff.str());
  PullbackResult out;
  std::vector<Letter> ls;
  for (const auto& l : g_plus.letters()) {
    Letter c = l;
    if (!c.is_diag()) c.coeff = c.coeff.at_x0();
    ls.push_back(std::move(c));
  }
  out.g0 = Word(ctx, std::move(ls));
  out.constant = membership(a, Predicate::constant_in_X);
  SymMat b = eval(out.g0);
  out.residual = a;
  for (std::size_t i = 0; i < a.a.size(); ++i) out.residual.a[i] = a.a[i] - b.a[i];
  out.ok = out.constant && mat_equal(a, b);
  return out;
}

std::vector<Word> tulenbaev_chain(const ContextPtr& ctx, Root alpha, const RingElem& a, const RingElem& m) {
  const auto& phi = *ctx->phi;
  Root gam = -1;
  for (Root r = 0; r < phi.size() && gam < 0; ++r)
    if (phi.pairing(alpha, r) == -1) gam = r;
  if (gam < 0) throw ConfigError("no root with pairing -1 against " + phi.format(alpha));
  const Root na = phi.neg(alpha);
  const RingElem X = xvar(ctx), Xi = xinv(ctx);
  const RingElem c = one(ctx) + a * m;
  const RingElem ci = unit_inverse(c);
  const Word hg = h_elem(ctx, gam, X);
  const Word ds = ds_elem(ctx, alpha, a, m);
  // right factor turning each T_k into S_a(a, x_{-a}(mX))
  const Word tail = gen(ctx, alpha, -(a * Xi * ci)) * symbol(ctx, X, c);
  const Word head = gen(ctx, na, m * X * ci) * ds;
  std::vector<Word> t;
  t.push_back(s_map(ctx, alpha, a, gen(ctx, na, m * X), m));
  t.push_back(gen(ctx, alpha, a * Xi) * gen(ctx, na, m * X) * tail);
  t.push_back(lconj(hg, gen(ctx, alpha, a) * gen(ctx, na, m)) * tail);
  t.push_back(lconj(hg, gen(ctx, na, m * ci) * ds * h_elem(ctx, alpha, c) * gen(ctx, alpha, a * ci)) * tail);
  t.push_back(head * h_elem(ctx, alpha, Xi * c) * hinv(ctx, alpha, Xi) * gen(ctx, alpha, a * Xi * ci) * tail);
  t.push_back(head * symbol(ctx, Xi, c) * h_elem(ctx, alpha, c) * gen(ctx, alpha, a * Xi * ci) * tail);
  t.push_back(head * h_elem(ctx, alpha, c) * gen(ctx, alpha, a * Xi * ci) * symbol(ctx, c, X) * tail);
  t.push_back(head * h_elem(ctx, alpha, c) * symbol(ctx, c, X) * symbol(ctx, X, c));
  t.push_back(head * h_elem(ctx, alpha, c));
  return t;
}

std::vector<Word> sr_sharp_chain(const ContextPtr& ctx, Root alpha, Root beta, const RingElem& a, const Word& g0,
                                 const RingElem& m, const RingElem& mp) {
  const auto& phi = *ctx->phi;
  const Root na = phi.neg(alpha), nb = phi.neg(beta), amb = phi.diff(alpha, beta);
  if (amb < 0) throw ConfigError("alpha - beta is not a root");
  const RingElem X = xvar(ctx), Xi = xinv(ctx);
  const RingElem c = one(ctx) + a * m;
  const RingElem ci = unit_inverse(c);
  const int n = (*ctx->N)(alpha, nb);
  const Word g = g0 * gen(ctx, na, m * X) * gen(ctx, nb, mp * X);
  const Word g1 = lconj(gen(ctx, alpha, a * Xi), g0);
  const Word ds = ds_elem(ctx, alpha, a, m);
  std::vector<Word> t;
  t.push_back(s_map(ctx, alpha, a, g, m));
  t.push_back(g1 * s_map(ctx, alpha, a, gen(ctx, na, m * X), m) *
              s_map(ctx, alpha, a * ci, gen(ctx, nb, mp * X), ctx->ring->zero()));
  t.push_back(g1 * gen(ctx, na, m * X * ci) * ds * h_elem(ctx, alpha, c) * gen(ctx, nb, mp * X) *
              gen(ctx, amb, n * (a * mp * ci)));
  t.push_back(g1 * gen(ctx, na, m * X * ci) * ds * gen(ctx, nb, mp * X * ci) * gen(ctx, amb, n * (a * mp)) *
              h_elem(ctx, alpha, c));
  return t;
}

Word sr_sharp_product(const ContextPtr& ctx, Root alpha, Root beta, const RingElem& a, const Word& g,
                      const RingElem& m, const RingElem& mp) {
  const auto& phi = *ctx->phi;
  const int n = (*ctx->N)(alpha, phi.neg(beta));
  return s_map(ctx, alpha, a, g, m) * hinv(ctx, alpha, one(ctx) + a * m) *
         gen(ctx, phi.diff(alpha, beta), -(n * (a * mp)));
}

std::vector<Word> sr_obtuse_chain(const ContextPtr& ctx, Root alpha, Root beta, const RingElem& a, const RingElem& b,
                                  const RingElem& m, const RingElem& mp) {
  const auto& phi = *ctx->phi;
  const Root na = phi.neg(alpha), nb = phi.neg(beta), amb = phi.diff(alpha, beta), bma = phi.neg(amb);
  if (amb < 0) throw ConfigError("alpha - beta is not a root");
  const RingElem X = xvar(ctx), zero = ctx->ring->zero();
  const int eps = (*ctx->N)(alpha, nb);
  const RingElem d = one(ctx) + a * m;
  const RingElem di = unit_inverse(d);
  const RingElem c = one(ctx) + eps * (a * b * mp);
  const RingElem ci = unit_inverse(c);
  const Word s0 = ds_elem(ctx, alpha, a, m);
  const Word s1 = ds_elem(ctx, amb, eps * (a * mp), -(b * ci));
  const Word tail = h_elem(ctx, bma, ci) * gen(ctx, bma, -(b * c));
  const Word sb = s_map(ctx, alpha, a, gen(ctx, nb, mp * X), zero);
  std::vector<Word> t;
  t.push_back(s_map(ctx, alpha, a, gen(ctx, nb, mp * X) * gen(ctx, na, m * X), m) * hinv(ctx, alpha, d) * tail);
  t.push_back(sb * s_map(ctx, alpha, a, gen(ctx, na, m * X), m) * hinv(ctx, alpha, d) * tail);
  t.push_back(sb * gen(ctx, na, m * X * di) * s0 * tail);
  t.push_back(gen(ctx, nb, mp * X) * gen(ctx, amb, eps * (a * mp)) * gen(ctx, bma, -(b * ci)) *
              gen(ctx, na, m * X * di) * s0 * h_elem(ctx, bma, ci));
  t.push_back(gen(ctx, nb, mp * X) * gen(ctx, bma, -b) * s1 * h_elem(ctx, amb, ci) * gen(ctx, amb, eps * (a * c * mp)) *
              gen(ctx, na, m * X * di) * s0 * h_elem(ctx, bma, ci));
  t.push_back(gen(ctx, bma, -b) * gen(ctx, nb, mp * X) * gen(ctx, na, -(eps * (b * mp * X))) * s1 *
              gen(ctx, amb, eps * (a * ci * mp)) * gen(ctx, na, c * m * X * di) * s0);
  t.push_back(gen(ctx, bma, -b) * gen(ctx, nb, mp * ci * X) * gen(ctx, amb, eps * (a * ci * mp)) * s1 * s0 *
              gen(ctx, na, -(eps * (b * mp * X)) + c * m * X * di));
  return t;
}

Word sr_obtuse_product(const ContextPtr& ctx, Root alpha, Root beta, const RingElem& a, const RingElem& b,
                       const Word& g, const RingElem& m, const RingElem& mp) {
  const auto& phi = *ctx->phi;
  const Root bma = phi.diff(beta, alpha);
  const int eps = (*ctx->N)(alpha, phi.neg(beta));
  const RingElem c = one(ctx) + eps * (a * b * mp);
  return gen(ctx, bma, b) * s_map(ctx, alpha, a, g, m) * hinv(ctx, alpha, one(ctx) + a * m) *
         h_elem(ctx, bma, unit_inverse(c)) * gen(ctx, bma, -(b * c));
}

}  // namespace stk
