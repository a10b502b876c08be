#include "stk/local.hpp"

#include <sstream>

#include "stk/error.hpp"

namespace stk {

namespace {

int64_t mulmod(int64_t a, int64_t b, int64_t q) {
  return static_cast<int64_t>(static_cast<__int128>(a) * b % q);
}

int64_t norm(int64_t a, int64_t q) {
  a %= q;
  return a < 0 ? a + q : a;
}

int64_t invmod(int64_t x, int64_t q) {
  int64_t a = norm(x, q), m = q, u = 1, v = 0;
  while (m) {
    int64_t t = a / m;
    a -= t * m;
    std::swap(a, m);
    u -= t * v;
    std::swap(u, v);
  }
  if (a != 1) throw NotAUnit("not a unit in finite ring");
  return norm(u, q);
}

}  // namespace

LocalRing LocalRing::parse(const std::string& s) {
  BaseSpec b = BaseSpec::parse(s);
  if (b.kind == BaseSpec::Kind::Z) throw ConfigError("evaluation target must be finite: " + s);
  if (b.kind == BaseSpec::Kind::FPE) return fpe(b.p, b.k);
  return zpk(b.p, b.k);
}

int64_t LocalRing::q() const {
  if (kind == Kind::FPE) return p;
  int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

std::string LocalRing::name() const {
  if (kind == Kind::FPE) return "F" + std::to_string(p) + "[eps]/eps^" + std::to_string(k);
  return k == 1 ? "F" + std::to_string(p) : "Z" + std::to_string(q());
}

Loc::Loc(const LocalRing* L, int64_t c) : L_(L) { c_[0] = norm(c, L->q()); }

Loc Loc::eps(const LocalRing* L) {
  Loc r(L, 0);
  if (L->kind == LocalRing::Kind::FPE && L->k > 1) r.c_[1] = 1;
  return r;
}

Loc Loc::operator+(const Loc& o) const {
  Loc r = *this;
  int64_t q = L_->q();
  int n = L_->kind == LocalRing::Kind::FPE ? L_->k : 1;
  for (int i = 0; i < n; ++i) r.c_[i] = norm(c_[i] + o.c_[i], q);
  return r;
}

Loc Loc::operator-() const {
  Loc r = *this;
  int64_t q = L_->q();
  int n = L_->kind == LocalRing::Kind::FPE ? L_->k : 1;
  for (int i = 0; i < n; ++i) r.c_[i] = norm(-c_[i], q);
  return r;
}

Loc Loc::operator-(const Loc& o) const { return *this + (-o); }

Loc Loc::operator*(const Loc& o) const {
  Loc r(L_, 0);
  int64_t q = L_->q();
  if (L_->kind == LocalRing::Kind::ZPK) {
    r.c_[0] = mulmod(c_[0], o.c_[0], q);
    return r;
  }
  int k = L_->k;
  for (int i = 0; i < k; ++i) {
    if (!c_[i]) continue;
    for (int j = 0; i + j < k; ++j) r.c_[i + j] = norm(r.c_[i + j] + mulmod(c_[i], o.c_[j], q), q);
  }
  return r;
}

bool Loc::operator==(const Loc& o) const {
  for (int i = 0; i < kLocMax; ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

bool Loc::is_zero() const {
  for (int i = 0; i < kLocMax; ++i)
    if (c_[i]) return false;
  return true;
}

bool Loc::is_unit() const { return c_[0] % L_->p != 0; }
bool Loc::in_max() const { return !is_unit(); }

Loc Loc::inverse() const {
  if (!is_unit()) throw NotAUnit("not a unit: " + str());
  int64_t q = L_->q();
  Loc r(L_, 0);
  if (L_->kind == LocalRing::Kind::ZPK) {
    r.c_[0] = invmod(c_[0], q);
    return r;
  }
  int64_t i0 = invmod(c_[0], q);
  r.c_[0] = i0;
  for (int i = 1; i < L_->k; ++i) {
    int64_t s = 0;
    for (int j = 1; j <= i; ++j) s = norm(s + mulmod(c_[j], r.c_[i - j], q), q);
    r.c_[i] = norm(-mulmod(i0, s, q), q);
  }
  return r;
}

Loc Loc::pow(int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Loc r(L_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::string Loc::str() const {
  if (L_->kind == LocalRing::Kind::ZPK) return std::to_string(c_[0]);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < L_->k; ++i) {
    if (!c_[i]) continue;
    os << (any ? " + " : "") << c_[i];
    if (i) os << "*eps" << (i > 1 ? "^" + std::to_string(i) : "");
    any = true;
  }
  return any ? os.str() : "0";
}

Loc random_loc(const LocalRing* L, std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> d(0, L->q() - 1);
  Loc r(L, d(rng));
  if (L->kind == LocalRing::Kind::FPE) {
    Loc e = Loc::eps(L), pw(L, 1);
    for (int i = 1; i < L->k; ++i) {
      pw = pw * e;
      r = r + pw * Loc(L, d(rng));
    }
  }
  return r;
}

Loc random_max(const LocalRing* L, std::mt19937_64& rng) {
  if (L->is_field()) return Loc(L, 0);
  if (L->kind == LocalRing::Kind::ZPK) return Loc(L, L->p) * random_loc(L, rng);
  return Loc::eps(L) * random_loc(L, rng);
}

Loc random_unit(const LocalRing* L, std::mt19937_64& rng) {
  for (;;) {
    Loc r = random_loc(L, rng);
    if (r.is_unit()) return r;
  }
}

LocalRing default_target(int seed_index) {
  switch (((seed_index % 3) + 3) % 3) {
    case 0: return LocalRing::zpk(1000003, 1);
    case 1: return LocalRing::zpk(1000003, 2);
    default: return LocalRing::fpe(1000003, 3);
  }
}

EvalMap::EvalMap(RingPtr ring, LocalRing target, uint64_t seed)
    : ring_(std::move(ring)), L_(std::make_shared<LocalRing>(target)), seed_(seed) {
  if (ring_->base().finite()) throw ConfigError("finite evaluation needs an integer base ring");
  std::mt19937_64 rng(seed);
  for (int attempt = 0;; ++attempt) {
    sample(rng);
    bool ok = true;
    int n = ring_->num_dens();
    den_inv_.assign(n, Loc(L_.get(), 0));
    den_ok_.assign(n, false);
    for (int i = 0; i < n && ok; ++i) {
      Loc v = eval_poly(ring_->den(i));
      if (!v.is_unit()) {
        ok = false;
        break;
      }
      den_inv_[i] = v.inverse();
      den_ok_[i] = true;
    }
    if (ok) break;
    if (attempt > 200) throw NotAUnit("could not sample units for the declared denominators");
  }
}

void EvalMap::sample(std::mt19937_64& rng) {
  int n = ring_->nvars();
  vals_.assign(n, Loc(L_.get(), 0));
  // a field target is a generic point: ideal variables are sampled freely
  for (int v = 0; v < n; ++v) {
    if (v == 0)
      vals_[v] = random_unit(L_.get(), rng);
    else if (ring_->is_m_var(v) && !L_->is_field())
      vals_[v] = random_max(L_.get(), rng);
    else
      vals_[v] = random_loc(L_.get(), rng);
  }
  xinv_ = vals_[0].inverse();
}

void EvalMap::assign(const std::string& var, const Loc& v) {
  int i = ring_->var_index(var);
  if (i < 0) throw ConfigError("unknown variable: " + var);
  vals_[i] = v;
  if (i == 0) xinv_ = v.inverse();
  std::lock_guard<std::mutex> lock(*mu_);
  den_ok_.assign(den_ok_.size(), false);
}

Loc EvalMap::den_inv(int i) const {
  std::lock_guard<std::mutex> lock(*mu_);
  if (i >= static_cast<int>(den_ok_.size())) {
    den_inv_.resize(i + 1, Loc(L_.get(), 0));
    den_ok_.resize(i + 1, false);
  }
  if (!den_ok_[i]) {
    Loc v = eval_poly(ring_->den(i));
    den_inv_[i] = v.inverse();
    den_ok_[i] = true;
  }
  return den_inv_[i];
}

Loc EvalMap::eval_poly(const Poly& p) const {
  Loc s(L_.get(), 0);
  int n = ring_->nvars();
  for (const auto& t : p) {
    Loc m(L_.get(), t.c);
    for (int v = 0; v < n; ++v) {
      int e = t.e[v];
      if (!e) continue;
      m = m * (e > 0 ? vals_[v].pow(e) : xinv_.pow(-e));
    }
    s = s + m;
  }
  return s;
}

Loc EvalMap::operator()(const RingElem& x) const {
  if (x.ring() != ring_) throw MixedSpecs();
  Loc r = eval_poly(x.num());
  for (std::size_t i = 0; i < x.den().size(); ++i)
    if (x.den()[i]) r = r * den_inv(static_cast<int>(i)).pow(x.den()[i]);
  return r;
}

}  // namespace stk
