#include "stk/word.hpp"

#include <algorithm>

#include "stk/error.hpp"

namespace stk {

std::shared_ptr<const Context> Context::make(RootSystemPtr phi, RingPtr ring) {
  auto c = std::make_shared<Context>();
  c->phi = phi;
  c->ring = std::move(ring);
  c->N = standard_constants(phi);
  if (phi->family() != Family::E) c->rep = MatrixRep::build(phi);
  return c;
}

std::shared_ptr<const Context> Context::make(const std::string& system, RingPtr ring) {
  return make(RootSystem::parse_name(system), std::move(ring));
}

RingElem unit_inverse(const RingElem& x) {
  try {
    return x.inverse();
  } catch (const NotAUnit&) {
    return x.inverse_local();
  }
}

namespace {

Letter inverse_letter(const Letter& l) {
  Letter r = l;
  if (l.is_diag()) {
    for (auto& d : r.diag) d = unit_inverse(d);
  } else {
    r.coeff = -l.coeff;
  }
  return r;
}

}  // namespace

Word Word::operator*(const Word& o) const {
  if (ctx_ && o.ctx_ && ctx_ != o.ctx_) throw MixedSpecs();
  Word r(ctx_ ? ctx_ : o.ctx_, letters_);
  r.letters_.insert(r.letters_.end(), o.letters_.begin(), o.letters_.end());
  return r;
}

Word Word::inverse() const {
  Word r(ctx_);
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(inverse_letter(*it));
  return r;
}

bool Word::same_letters(const Word& o) const {
  if (letters_.size() != o.letters_.size()) return false;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto &x = letters_[i], &y = o.letters_[i];
    if (x.root != y.root) return false;
    if (x.is_diag()) {
      if (x.diag.size() != y.diag.size()) return false;
      for (std::size_t j = 0; j < x.diag.size(); ++j)
        if (x.diag[j] != y.diag[j]) return false;
    } else if (x.coeff != y.coeff) {
      return false;
    }
  }
  return true;
}

Word identity(const ContextPtr& ctx) { return Word(ctx); }

Word gen(const ContextPtr& ctx, Root a, const RingElem& f) {
  if (a < 0 || a >= ctx->phi->size()) throw NoSuchRoot("root index out of range");
  if (f.ring() != ctx->ring) throw MixedSpecs();
  return Word(ctx, {Letter{a, f, {}}});
}

Word diag_letter(const ContextPtr& ctx, std::vector<RingElem> entries) {
  if (!ctx->rep || static_cast<int>(entries.size()) != ctx->rep->dim())
    throw ConfigError("diagonal letter needs one entry per matrix row");
  return Word(ctx, {Letter{-1, ctx->ring->zero(), std::move(entries)}});
}

Word conj(const Word& x, const Word& y) { return y.inverse() * x * y; }
Word lconj(const Word& y, const Word& x) { return y * x * y.inverse(); }
Word comm(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (l.is_diag()) {
      bool trivial = std::all_of(l.diag.begin(), l.diag.end(), [](const RingElem& d) { return d.is_one(); });
      if (!trivial) out.push_back(l);
      continue;
    }
    if (l.coeff.is_zero()) continue;
    if (!out.empty() && !out.back().is_diag() && out.back().root == l.root) {
      RingElem s = out.back().coeff + l.coeff;
      if (s.is_zero())
        out.pop_back();
      else
        out.back().coeff = s;
    } else {
      out.push_back(l);
    }
  }
  return Word(w.ctx(), std::move(out));
}

Word w_elem(const ContextPtr& ctx, Root a, const RingElem& s) {
  Root na = ctx->phi->neg(a);
  return gen(ctx, a, s) * gen(ctx, na, -unit_inverse(s)) * gen(ctx, a, s);
}

Word h_elem(const ContextPtr& ctx, Root a, const RingElem& s) {
  return w_elem(ctx, a, s) * w_elem(ctx, a, -ctx->ring->one());
}

Word z_elem(const ContextPtr& ctx, Root a, const RingElem& s, const RingElem& xi) {
  return conj(gen(ctx, a, s), gen(ctx, ctx->phi->neg(a), xi));
}

Word c_elem(const ContextPtr& ctx, Root a, const RingElem& s, const RingElem& t) {
  return comm(gen(ctx, a, s), gen(ctx, ctx->phi->neg(a), t));
}

Word sym_elem(const ContextPtr& ctx, Root a, const RingElem& s, const RingElem& t) {
  // h(st) h(s)^-1 h(t)^-1 with the w(-1) w(1) pairs cancelled
  RingPtr R = ctx->ring;
  return w_elem(ctx, a, s * t) * w_elem(ctx, a, -s) * w_elem(ctx, a, R->one()) * w_elem(ctx, a, -t);
}

Word ds_elem(const ContextPtr& ctx, Root a, const RingElem& x, const RingElem& y) {
  RingElem d = ctx->ring->one() + x * y;
  RingElem di;
  try {
    di = d.inverse();
  } catch (const NotAUnit&) {
    if (ctx->ring->base().finite()) throw;
    try {
      di = d.inverse_local();
    } catch (const NotAUnit&) {
      ctx->ring->declare(d.num());
      di = d.inverse();
    }
  }
  Root na = ctx->phi->neg(a);
  return gen(ctx, na, -(y * di)) * gen(ctx, a, x) * gen(ctx, na, y) * gen(ctx, a, -(x * di)) *
         h_elem(ctx, a, d).inverse();
}

int degree_of(const RingElem& c) {
  if (c.is_zero()) return 0;
  if (!c.den_x_free()) throw NonHomogeneous("coefficient has a denominator involving X: " + c.str());
  int lo = c.min_x(), hi = c.max_x();
  if (lo != hi) throw NonHomogeneous("coefficient is not homogeneous: " + c.str());
  return -lo;
}

int degree_of(const Letter& l) {
  if (l.is_diag()) return 0;
  return degree_of(l.coeff);
}

int relation_degree(RelType type, int d, int e) {
  if (type == RelType::R1) return d;
  if (type == RelType::R2) return std::max({d, e, d + e});
  return std::max(d, e);
}

bool superfluous(RelType type, int d, int e) {
  return type == RelType::R3_perp && std::max(0, d) + std::max(0, e) > 1;
}

int Relation::degree() const { return relation_degree(type, d, e); }

std::string Relation::tag() const {
  switch (type) {
    case RelType::R1: return "R1_" + std::to_string(d);
    case RelType::R2: return "R2_" + std::to_string(d) + "," + std::to_string(e);
    case RelType::R3_angle: return "R3angle_" + std::to_string(d) + "," + std::to_string(e);
    default: return "R3perp_" + std::to_string(d) + "," + std::to_string(e);
  }
}

std::vector<RingElem> finite_elements(const RingPtr& R, bool max_only) {
  const auto& b = R->base();
  if (!b.finite()) throw ConfigError("element enumeration needs a finite base ring");
  std::vector<RingElem> out;
  if (b.kind == BaseSpec::Kind::ZPK) {
    int64_t q = b.modulus();
    for (int64_t c = 0; c < q; ++c)
      if (!max_only || c % b.p == 0) out.push_back(R->constant(c));
    return out;
  }
  RingElem e = R->var("eps");
  std::vector<int64_t> digits(b.k, 0);
  for (;;) {
    if (!max_only || digits[0] == 0) {
      RingElem s = R->zero(), pw = R->one();
      for (int i = 0; i < b.k; ++i) {
        s = s + pw * digits[i];
        pw = pw * e;
      }
      out.push_back(s);
    }
    int i = 0;
    while (i < b.k && ++digits[i] == b.p) digits[i++] = 0;
    if (i == b.k) break;
  }
  return out;
}

namespace {

struct CoeffSource {
  RingPtr R;
  bool finite;
  std::vector<RingElem> avars, mvars, all, maxi;

  explicit CoeffSource(const RingPtr& r) : R(r) {
    finite = R->base().finite() && R->spec().a_vars.empty() && R->spec().m_vars.empty();
    if (finite) {
      all = finite_elements(R, false);
      maxi = finite_elements(R, true);
    } else {
      for (const auto& v : R->spec().a_vars) avars.push_back(R->var(v));
      for (const auto& v : R->spec().m_vars) mvars.push_back(R->var(v));
    }
  }

  RingElem tpow(int d) const { return d >= 0 ? R->Xinv().pow(d) : R->X().pow(-d); }

  // candidates for B_d; slot picks a distinct generic variable
  std::vector<RingElem> graded(int d, int slot) const {
    std::vector<RingElem> out;
    if (finite) {
      for (const auto& c : d >= 0 ? all : maxi) out.push_back(c * tpow(d));
      return out;
    }
    const auto& vs = d >= 0 ? avars : mvars;
    if (vs.empty()) throw ConfigError(d >= 0 ? "ring has no A-variables" : "ring has no M-variables");
    out.push_back(vs[std::min<std::size_t>(slot, vs.size() - 1)] * tpow(d));
    return out;
  }
};

}  // namespace

std::vector<Relation> instantiate_relations(const ContextPtr& ctx, const InstantiateOptions& opt) {
  if (opt.max_degree < 1) throw ConfigError("max degree must be at least 1");
  const auto& phi = *ctx->phi;
  CoeffSource src(ctx->ring);
  std::vector<Relation> out;
  for (Root a = 0; a < phi.size(); ++a)
    for (int d = opt.min_degree; d <= opt.max_degree; ++d)
      for (const auto& x : src.graded(d, 0))
        for (const auto& y : src.graded(d, 1))
          out.push_back({RelType::R1, a, a, d, d, gen(ctx, a, x) * gen(ctx, a, y), gen(ctx, a, x + y)});
  for (Root a = 0; a < phi.size(); ++a)
    for (Root b = 0; b < phi.size(); ++b) {
      if (b == a || b == phi.neg(a)) continue;
      RelType type;
      int p = phi.pairing(a, b);
      if (p == -1)
        type = RelType::R2;
      else if (p == 1)
        type = RelType::R3_angle;
      else
        type = RelType::R3_perp;
      for (int d = opt.min_degree; d <= opt.max_degree; ++d)
        for (int e = opt.min_degree; e <= opt.max_degree; ++e) {
          if (relation_degree(type, d, e) > opt.max_degree) continue;
          if (opt.drop_superfluous && superfluous(type, d, e)) continue;
          for (const auto& x : src.graded(d, 0))
            for (const auto& y : src.graded(e, 1)) {
              Word lhs = comm(gen(ctx, a, x), gen(ctx, b, y));
              Word rhs = type == RelType::R2 ? gen(ctx, phi.sum(a, b), x * y * (*ctx->N)(a, b)) : identity(ctx);
              out.push_back({type, a, b, d, e, lhs, rhs});
            }
        }
    }
  return out;
}

namespace {

void reduce_letter(const ContextPtr& ctx, const Letter& l, int n, int companion, std::vector<Letter>& out) {
  if (l.is_diag() || l.coeff.is_zero() || degree_of(l) <= n) {
    out.push_back(l);
    return;
  }
  const auto& phi = *ctx->phi;
  Root b = acute_companion(phi, l.root, companion);
  Root g = phi.diff(l.root, b);
  Word x = gen(ctx, g, l.coeff * ctx->ring->X() * (*ctx->N)(g, b));
  Word y = gen(ctx, b, ctx->ring->Xinv());
  Word c = comm(x, y);
  for (const auto& k : c.letters()) reduce_letter(ctx, k, n, companion, out);
}

}  // namespace

Word reduce_degree(const Word& w, int n, int companion) {
  if (n < 1) throw ConfigError("degree bound must be at least 1");
  std::vector<Letter> out;
  for (const auto& l : w.letters()) reduce_letter(w.ctx(), l, n, companion, out);
  return Word(w.ctx(), std::move(out));
}

}  // namespace stk
