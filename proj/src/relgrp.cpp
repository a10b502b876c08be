#include "stk/relgrp.hpp"

#include <algorithm>
#include <stdexcept>

#include "stk/error.hpp"

namespace stk {

namespace {

bool in_m_poly(const RingElem& x) { return in_ideal(x, IdealTag::M_poly); }
bool in_xm_poly(const RingElem& x) { return in_ideal(x, IdealTag::XM_poly); }
bool in_x2m_poly(const RingElem& x) { return in_ideal(x, IdealTag::X2M_poly); }
// X A[X]
bool in_xa_poly(const RingElem& x) { return x.is_zero() || (in_a_poly(x) && x.min_x() >= 1); }

// t^k with t = X^-1
RingElem tpow(const RingPtr& R, int k) { return k >= 0 ? R->Xinv().pow(k) : R->X().pow(-k); }

Angle angle(const RootSystem& phi, Root a, Root b) { return angle_class(phi, a, b).kind; }

Root first_with(const RootSystem& phi, Root a, Angle kind) {
  for (Root b = 0; b < phi.size(); ++b)
    if (angle(phi, a, b) == kind) return b;
  throw ConfigError("no root in the required position relative to " + phi.format(a));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError("configuration mismatch: " + what);
}

ClassifiedFactor cp(const ContextPtr& ctx, Root a, Factor f) {
  GenClass c = classify_p(ctx, a, f);
  return {std::move(f), c};
}

ClassifiedFactor un(Factor f) { return {std::move(f), GenClass::None}; }

std::vector<Root> span_a2(const RootSystem& phi, Root a, Root b) {
  Root d = phi.diff(a, b);
  return {a, b, d, phi.neg(a), phi.neg(b), phi.neg(d)};
}

bool contains(const std::vector<Root>& v, Root r) { return std::find(v.begin(), v.end(), r) != v.end(); }

}  // namespace

std::string class_str(GenClass c) {
  static const char* names[] = {"P1", "P2", "P3", "P4", "P5", "K1", "K2", "K3", "K4", "K5", "Z", "X_ideal", "None"};
  return names[static_cast<int>(c)];
}

Word Factor::word(const ContextPtr& ctx) const {
  switch (shape) {
    case Shape::x:
      return gen(ctx, root, s);
    case Shape::z:
      return z_elem(ctx, root, s, t);
    case Shape::c:
      return c_elem(ctx, root, s, t);
    case Shape::word:
      return w;
  }
  return w;
}

std::string Factor::str(const RootSystem& phi) const {
  switch (shape) {
    case Shape::x:
      return "x" + phi.format(root) + "(" + s.str() + ")";
    case Shape::z:
      return "z" + phi.format(root) + "(" + s.str() + ", " + t.str() + ")";
    case Shape::c:
      return "c" + phi.format(root) + "(" + s.str() + ", " + t.str() + ")";
    case Shape::word:
      return "<word of " + std::to_string(w.size()) + " letters>";
  }
  return {};
}

Word product(const ContextPtr& ctx, const std::vector<Factor>& fs) {
  Word w(ctx);
  for (const auto& f : fs) w *= f.word(ctx);
  return w;
}

Word product(const ContextPtr& ctx, const std::vector<ClassifiedFactor>& fs) {
  Word w(ctx);
  for (const auto& f : fs) w *= f.factor.word(ctx);
  return w;
}

GenClass classify_p(const ContextPtr& ctx, Root a, const Factor& f) {
  const auto& phi = *ctx->phi;
  if (f.shape == Factor::Shape::c || f.shape == Factor::Shape::word)
    throw ConfigError("P-classification takes x or z factors");
  if (f.root < 0 || f.root >= phi.size()) throw ConfigError("malformed factor: bad root index");
  bool is_x = f.shape == Factor::Shape::x || f.t.is_zero();
  if (!in_m_poly(f.s)) return GenClass::None;
  if (!is_x && !in_a_poly(f.t)) return GenClass::None;
  Root g = f.root;
  if (g == a) return is_x ? GenClass::P5 : GenClass::None;
  if (g == phi.neg(a)) return is_x && in_x2m_poly(f.s) ? GenClass::P4 : GenClass::None;
  Angle k = angle(phi, a, g);
  if (k == Angle::orthogonal) return GenClass::P3;
  if (in_xm_poly(f.s)) return GenClass::P1;
  if (k == Angle::difference_is_root && (is_x || in_xa_poly(f.t))) return GenClass::P2;
  return GenClass::None;
}

Root default_delta(const RootSystem& phi, Root a, Root b) {
  auto psi = span_a2(phi, a, b);
  for (Root r = 0; r < phi.size(); ++r)
    if (!contains(psi, r) && phi.pairing(a, r) == 1) return r;
  throw ConfigError("no root outside the A2 span acute to " + phi.format(a));
}

GenClass classify_k(const ContextPtr& ctx, Root a, Root b, Root delta, const Factor& f) {
  const auto& phi = *ctx->phi;
  if (a == b || phi.pairing(a, b) != 1) throw ConfigError("K-classification needs <a,b> = 1");
  auto psi = span_a2(phi, a, b);
  if (delta < 0 || delta >= phi.size() || contains(psi, delta)) throw ConfigError("delta must lie outside the A2 span");
  if (f.shape == Factor::Shape::word) throw ConfigError("K-classification takes x, z or c factors");
  if (f.root < 0 || f.root >= phi.size()) throw ConfigError("malformed factor: bad root index");
  if (f.shape == Factor::Shape::c)
    return f.root == delta && in_m_poly(f.s) && in_xa_poly(f.t) ? GenClass::K5 : GenClass::None;
  bool is_x = f.shape == Factor::Shape::x || f.t.is_zero();
  if (!is_x && !in_a_poly(f.t)) return GenClass::None;
  if (!in_m_poly(f.s)) return GenClass::None;
  Root g = f.root;
  if (!contains(psi, g) && in_xm_poly(f.s)) return GenClass::K1;
  if (!is_x) return GenClass::None;
  Root d = phi.diff(a, b);
  if (g == phi.neg(a) || g == phi.neg(b)) {
    if (in_x2m_poly(f.s)) return GenClass::K2;
    if (in_xm_poly(f.s)) return GenClass::X_ideal;
  }
  if ((g == a || g == b) && in_xm_poly(f.s)) return GenClass::K3;
  if ((g == d || g == phi.neg(d)) && in_xm_poly(f.s)) return GenClass::K4;
  if (phi.pairing(a, g) > 0 && g != d) return GenClass::Z;
  return GenClass::None;
}

RingElem p_functional(const ContextPtr& ctx, Root a, const std::vector<Factor>& fs) {
  const auto& phi = *ctx->phi;
  RingElem sum = ctx->ring->zero();
  Root delta = -1;
  for (const auto& f : fs) {
    switch (f.shape) {
      case Factor::Shape::word:
        throw ConfigError("factor outside the admissible alphabet: arbitrary word");
      case Factor::Shape::c:
        // any fixed delta other than +-a has zero linear part along -a
        if (f.root == a || f.root == phi.neg(a) || !in_m_poly(f.s) || !in_xa_poly(f.t))
          throw ConfigError("factor outside the admissible alphabet: " + f.str(phi));
        if (delta >= 0 && delta != f.root) throw ConfigError("c-factors must share one root");
        delta = f.root;
        break;
      case Factor::Shape::x:
      case Factor::Shape::z: {
        RingElem xi = f.shape == Factor::Shape::x ? ctx->ring->zero() : f.t;
        if (!in_xm_poly(f.s) || !in_a_poly(xi)) throw ConfigError("factor outside the admissible alphabet: " + f.str(phi));
        // linear term of the image along the root vector of -a
        if (f.root == phi.neg(a)) {
          sum += f.s.x_coeff(1);
        } else if (f.root == a && !xi.is_zero()) {
          RingElem x0 = xi.x_coeff(0);
          sum -= f.s.x_coeff(1) * x0 * x0;
        }
        break;
      }
    }
  }
  return sum;
}

Root conj_p0_companion(const RootSystem& phi, const std::string& which, Root a) {
  if (which == "eq3-1" || which == "eq3-2" || which == "Z2-diff" || which == "Z2-sum")
    return first_with(phi, a, Angle::difference_is_root);
  if (which == "eq3-3" || which == "eq:zalpha" || which == "Z3" || which == "Z5-alpha")
    return first_with(phi, a, Angle::sum_is_root);
  throw ConfigError("unknown decomposition case: " + which);
}

Decomposition conj_p0_decompose(const ContextPtr& ctx, const std::string& which, Root a, Root b, const ConjData& d) {
  const auto& phi = *ctx->phi;
  const auto& N = *ctx->N;
  const RingPtr& R = ctx->ring;
  RingElem X = R->X(), X2 = X * X;
  const RingElem &m = d.m, &f = d.f, &xi = d.xi;
  Root na = phi.neg(a);
  Word conj_by = gen(ctx, na, m * X);
  std::string id = which == "Z2-diff" ? "eq3-1" : which == "Z2-sum" ? "eq3-2" : which == "Z3" ? "eq3-3"
                   : which == "Z5-alpha" ? "eq:zalpha" : which;
  Decomposition out{id, {}, {}};
  if (id == "eq3-1" || id == "eq3-2") {
    require(angle(phi, a, b) == Angle::difference_is_root, "a-b must be a root");
    Root bma = phi.sum(b, na);
    bool p1 = id == "eq3-1";
    Factor g = p1 ? Factor::z(b, X * f, xi) : Factor::z(b, f, X * xi);
    out.lhs = conj(g.word(ctx), conj_by);
    out.rhs = {cp(ctx, a, Factor::x(na, -(m * X2 * f * xi))),
               cp(ctx, a, Factor::x(bma, N(b, na) * (p1 ? m * X2 * f : m * X * f))), cp(ctx, a, g)};
  } else if (id == "eq3-3") {
    require(angle(phi, a, b) == Angle::sum_is_root, "a+b must be a root");
    Factor g = Factor::z(b, X * f, xi);
    out.lhs = conj(g.word(ctx), conj_by);
    out.rhs = {cp(ctx, a, Factor::x(na, m * X2 * f * xi)),
               cp(ctx, a, Factor::x(phi.neg(phi.sum(a, b)), N(b, a) * (m * X2 * f * xi * xi))), cp(ctx, a, g)};
  } else if (id == "eq:zalpha") {
    require(angle(phi, a, b) == Angle::sum_is_root, "a+b must be a root");
    Root ab = phi.sum(a, b), nb = phi.neg(b);
    int e = N(a, b);
    out.lhs = conj(gen(ctx, a, f), conj_by);
    out.rhs = {cp(ctx, a, Factor::x(ab, e * (X * f))),
               cp(ctx, a, Factor::x(b, -(m * X2 * f))),
               cp(ctx, a, Factor::x(nb, m * f)),
               cp(ctx, a, Factor::x(a, f)),
               cp(ctx, a, Factor::z(ab, -e * (X * f), -e * m)),
               cp(ctx, a, Factor::z(nb, -(m * f), -X)),
               cp(ctx, a, Factor::x(phi.neg(ab), -e * (m * m * X * f))),
               cp(ctx, a, Factor::x(na, -(m * m * X2 * f)))};
  } else {
    throw ConfigError("unknown decomposition case: " + which);
  }
  return out;
}

Root zrels_companion(const RootSystem& phi, int part, Root a) {
  switch (part) {
    case 1:
      return a;
    case 2:
    case 5:
      return first_with(phi, a, Angle::sum_is_root);
    case 3:
      return first_with(phi, a, Angle::difference_is_root);
    case 4:
      return first_with(phi, a, Angle::orthogonal);
  }
  throw ConfigError("z-relation part must be 1..5");
}

Root crels_companion(const RootSystem& phi, int part, Root a) {
  switch (part) {
    case 1:
    case 4:
      return first_with(phi, a, Angle::sum_is_root);
    case 2:
      return first_with(phi, a, Angle::difference_is_root);
    case 3:
      return first_with(phi, a, Angle::orthogonal);
  }
  throw ConfigError("c-relation part must be 1..4");
}

Decomposition zrels_decompose(const ContextPtr& ctx, int part, Root a, Root b, const RingElem& s, const RingElem& xi,
                              const RingElem& eta) {
  const auto& phi = *ctx->phi;
  const auto& N = *ctx->N;
  Decomposition out{"zrels." + std::to_string(part), {}, {}};
  switch (part) {
    case 1:
      out.lhs = conj(z_elem(ctx, a, s, xi), gen(ctx, phi.neg(a), eta));
      out.rhs = {un(Factor::z(a, s, xi + eta))};
      break;
    case 2:
      require(angle(phi, a, b) == Angle::sum_is_root, "a+b must be a root");
      out.lhs = conj(z_elem(ctx, b, s, xi), gen(ctx, a, eta));
      out.rhs = {un(Factor::x(a, -(s * xi * eta))), un(Factor::x(phi.sum(a, b), N(b, a) * (s * eta))),
                 un(Factor::z(b, s, xi))};
      break;
    case 3:
      require(angle(phi, a, b) == Angle::difference_is_root, "a-b must be a root");
      out.lhs = conj(z_elem(ctx, b, s, xi), gen(ctx, a, eta));
      out.rhs = {un(Factor::x(a, s * xi * eta)), un(Factor::x(phi.diff(a, b), N(b, phi.neg(a)) * (s * xi * xi * eta))),
                 un(Factor::z(b, s, xi))};
      break;
    case 4:
      require(angle(phi, a, b) == Angle::orthogonal, "a and b must be orthogonal");
      out.lhs = conj(z_elem(ctx, b, s, xi), gen(ctx, a, eta));
      out.rhs = {un(Factor::z(b, s, xi))};
      break;
    case 5: {
      require(angle(phi, a, b) == Angle::sum_is_root, "a+b must be a root");
      Root ab = phi.sum(a, b);
      int e = N(a, b);
      out.lhs = z_elem(ctx, ab, s * eta, xi);
      out.rhs = {un(Factor::x(a, e * s)),
                 un(Factor::x(phi.neg(b), -(s * xi))),
                 un(Factor::x(b, s * xi * eta * eta)),
                 un(Factor::x(ab, s * eta)),
                 un(Factor::z(a, -e * s, -e * (xi * eta))),
                 un(Factor::x(phi.neg(a), -e * (s * xi * xi * eta * eta))),
                 un(Factor::x(phi.neg(ab), -(s * xi * xi * eta))),
                 un(Factor::z(phi.neg(b), s * xi, -eta))};
      break;
    }
    default:
      throw ConfigError("z-relation part must be 1..5");
  }
  return out;
}

Decomposition crels_decompose(const ContextPtr& ctx, int part, Root a, Root b, const RingElem& s, const RingElem& t,
                              const RingElem& xi) {
  const auto& phi = *ctx->phi;
  const auto& N = *ctx->N;
  Decomposition out{"crels." + std::to_string(part), {}, {}};
  if (part >= 1 && part <= 3) out.lhs = comm(c_elem(ctx, b, s, t), gen(ctx, a, xi));
  switch (part) {
    case 1:
      require(angle(phi, a, b) == Angle::sum_is_root, "a+b must be a root");
      out.rhs = {un(Factor::x(a, -(s * t * xi))), un(Factor::x(phi.sum(a, b), N(a, b) * (s * s * t * xi)))};
      break;
    case 2:
      require(angle(phi, a, b) == Angle::difference_is_root, "a-b must be a root");
      out.rhs = {un(Factor::x(a, s * t * xi + s * s * t * t * xi)),
                 un(Factor::x(phi.diff(a, b), N(phi.neg(a), b) * (s * t * t * xi)))};
      break;
    case 3:
      require(angle(phi, a, b) == Angle::orthogonal, "a and b must be orthogonal");
      break;
    case 4: {
      require(angle(phi, a, b) == Angle::sum_is_root, "a+b must be a root");
      Root ab = phi.sum(a, b);
      int e = N(a, b);
      out.lhs = c_elem(ctx, ab, s, t * xi);
      Word by = gen(ctx, ab, -s) * gen(ctx, phi.neg(a), e * t);
      out.rhs = {un(Factor::of(conj(c_elem(ctx, b, s * t, xi), by))),
                 un(Factor::of(c_elem(ctx, a, e * (s * xi), -e * t).inverse())),
                 un(Factor::x(phi.neg(b), -(s * t * xi * xi)))};
      break;
    }
    default:
      throw ConfigError("c-relation part must be 1..4");
  }
  return out;
}

KabSplit kab_split(const ContextPtr& ctx, const std::vector<Factor>& g, Root a, Root b) {
  const auto& phi = *ctx->phi;
  RingElem X = ctx->ring->X();
  KabSplit out{g, p_functional(ctx, a, g), p_functional(ctx, b, g)};
  out.g0.push_back(Factor::x(phi.neg(b), -(out.m_prime * X)));
  out.g0.push_back(Factor::x(phi.neg(a), -(out.m * X)));
  if (!p_functional(ctx, a, out.g0).is_zero() || !p_functional(ctx, b, out.g0).is_zero())
    throw std::logic_error("residual p-value does not vanish");
  return out;
}

KDecomp kdecomp1(const ContextPtr& ctx, const std::vector<Factor>& zs) {
  const auto& phi = *ctx->phi;
  KDecomp out{Word(ctx), Word(ctx), Word(ctx)};
  Word P(ctx);  // prefix of C_j z_j(0)
  std::vector<Word> ys;
  std::vector<Word> prefixes;
  for (const auto& f : zs) {
    if (f.shape != Factor::Shape::x && f.shape != Factor::Shape::z) throw ConfigError("expected z-factors");
    RingElem xi = f.shape == Factor::Shape::x ? ctx->ring->zero() : f.t;
    if (!in_m_poly(f.s) || !in_a_poly(xi)) throw ConfigError("factor outside M[X] x A[X]: " + f.str(phi));
    RingElem f0 = f.s.at_x0(), x0 = xi.at_x0();
    Word z0 = z_elem(ctx, f.root, f0, x0);
    Word c = comm(gen(ctx, phi.neg(f.root), -(xi - x0)), z0);
    // z(f, xi) = c * z0 * z(f - f0, xi)
    out.comm_part *= lconj(out.base_part, c);
    out.base_part *= z0;
    P *= c * z0;
    out.xm_part *= lconj(P, z_elem(ctx, f.root, f.s - f0, xi));
  }
  out.xm_part = free_reduce(out.xm_part);
  out.comm_part = free_reduce(out.comm_part);
  return out;
}

Chain superfluous_chain(const ContextPtr& ctx, Root a, Root g, const RingElem& ca, const RingElem& cb, int d, int e) {
  const auto& phi = *ctx->phi;
  const auto& N = *ctx->N;
  const RingPtr& R = ctx->ring;
  require(angle(phi, a, g) == Angle::orthogonal, "roots must be orthogonal");
  if (d > e) throw ConfigError("expected d <= e");
  Chain out;
  Root b = obtuse_pair(phi, a, g);
  out.beta = b;
  Root ab = phi.sum(a, b), bg = phi.sum(b, g), abg = phi.sum(a, bg), nb = phi.neg(b);
  int e1 = N(b, g), e2 = N(a, bg), d1 = N(a, b);
  auto x = [&](Root r, const RingElem& c) { return gen(ctx, r, c); };
  if (d > 0) {
    out.regime = 1;
    RingElem td = tpow(R, d), te = tpow(R, e), ted = tpow(R, e - d);
    Word top = x(abg, -(e1 * e2) * (ca * cb * te));
    Word ybg = x(bg, e1 * (cb * ted)), ynb = x(nb, td), yab = x(ab, -d1 * ca);
    Word yg = x(g, cb * te), ya = x(a, ca * td);
    out.steps = {top,
                 comm(ybg, comm(ynb, yab)),
                 comm(comm(ybg, ynb), lconj(ynb, yab)),
                 lconj(ynb, comm(x(g, -(cb * te)), yab)),
                 lconj(ynb, comm(ybg, ya)),
                 comm(yg * ybg, ya),
                 lconj(yg, top) * comm(yg, ya),
                 top * comm(yg, ya)};
  } else if (e >= 0) {
    out.regime = 2;
    RingElem td = tpow(R, d), te = tpow(R, e), te1 = tpow(R, e - 1), t1 = R->Xinv();
    Word ya = x(a, ca * td), ybg = x(bg, cb * te1), ynb = x(nb, -e1 * t1);
    out.steps = {comm(ya, x(g, cb * te)),
                 comm(ya, comm(ybg, ynb)),
                 comm(comm(ya, ybg), lconj(ybg, ynb)),
                 lconj(ybg, comm(x(abg, e2 * (ca * cb * tpow(R, d + e - 1))), ynb)),
                 identity(ctx)};
  } else {
    throw ConfigError("expected 0 < d <= e or d <= 0 <= e");
  }
  return out;
}

}  // namespace stk
