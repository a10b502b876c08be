#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "stk/error.hpp"
#include "stk/ring.hpp"

namespace stk {

namespace {

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool valid_name(const std::string& n) {
  if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) return false;
  for (char ch : n)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  static const std::set<std::string> reserved = {"X", "eps"};
  return !reserved.count(n);
}

}  // namespace

RingPtr Ring::make(const RingSpec& spec) {
  std::shared_ptr<Ring> r(new Ring());
  r->spec_ = spec;
  r->dens_.reset(new Poly[kMaxDens]);
  r->names_.push_back("X");
  r->is_m_.push_back(false);
  std::set<std::string> seen = {"X"};
  auto add = [&](const std::string& n, bool m) {
    if (!valid_name(n) && n != "eps") throw ConfigError("invalid variable name: " + n);
    if (!seen.insert(n).second) throw ConfigError("duplicate variable name: " + n);
    r->names_.push_back(n);
    r->is_m_.push_back(m);
  };
  for (const auto& n : spec.a_vars) add(n, false);
  for (const auto& n : spec.m_vars) {
    if (n == "eps") throw ConfigError("invalid variable name: eps");
    add(n, true);
  }
  if (spec.base.kind == BaseSpec::Kind::FPE) {
    add("eps", true);
    r->nil_var_ = r->nvars() - 1;
  }
  if (r->nvars() > kMaxVars) throw ConfigError("too many variables");
  return r;
}

RingPtr Ring::make(const std::string& a_vars, const std::string& m_vars, const std::string& base) {
  RingSpec s;
  s.a_vars = split_names(a_vars);
  s.m_vars = split_names(m_vars);
  s.base = BaseSpec::parse(base);
  return make(s);
}

int Ring::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

RingElem Ring::zero() { return RingElem(shared_from_this(), {}); }
RingElem Ring::one() { return constant(1); }
RingElem Ring::constant(int64_t c) { return RingElem(shared_from_this(), pconst(c)); }

RingElem Ring::var(const std::string& name) {
  int v = var_index(name);
  if (v < 0) throw ConfigError("unknown variable: " + name);
  Term t;
  t.e.fill(0);
  t.e[v] = 1;
  t.c = 1;
  Poly p{t};
  truncate(p);
  return RingElem(shared_from_this(), p);
}

RingElem Ring::X() { return var("X"); }

RingElem Ring::Xinv() {
  Term t;
  t.e.fill(0);
  t.e[0] = -1;
  t.c = 1;
  return RingElem(shared_from_this(), {t});
}

RingElem::RingElem(RingPtr r, Poly num, std::vector<int16_t> den)
    : r_(std::move(r)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RingElem::check_same(const RingElem& o) const {
  if (r_ != o.r_) throw MixedSpecs();
}

void RingElem::normalize() {
  if (num_.empty()) {
    den_.clear();
    return;
  }
  for (std::size_t i = 0; i < den_.size(); ++i) {
    Poly q;
    while (den_[i] > 0 && r_->pdiv(num_, r_->den(static_cast<int>(i)), q)) {
      num_ = std::move(q);
      --den_[i];
    }
  }
  while (!den_.empty() && den_.back() == 0) den_.pop_back();
}

bool RingElem::den_x_free() const {
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (!den_[i]) continue;
    for (const auto& t : r_->den(static_cast<int>(i)))
      if (t.e[0] != 0) return false;
  }
  return true;
}

bool RingElem::is_one() const { return is_const_int(1); }

bool RingElem::is_const_int(int64_t c) const {
  if (!den_.empty()) return false;
  Poly p = r_->pconst(c);
  return num_ == p;
}

namespace {

Poly den_power(const Ring& r, int i, int k) {
  Poly p = r.pconst(1);
  for (int j = 0; j < k; ++j) p = r.pmul(p, r.den(i));
  return p;
}

}  // namespace

RingElem RingElem::operator+(const RingElem& o) const {
  check_same(o);
  if (num_.empty()) return o;
  if (o.num_.empty()) return *this;
  if (den_ == o.den_) {
    RingElem r;
    r.r_ = r_;
    r.num_ = r_->padd(num_, o.num_);
    r.den_ = den_;
    r.normalize();
    return r;
  }
  std::size_t n = std::max(den_.size(), o.den_.size());
  std::vector<int16_t> m(n, 0);
  Poly a = num_, b = o.num_;
  for (std::size_t i = 0; i < n; ++i) {
    int x = i < den_.size() ? den_[i] : 0;
    int y = i < o.den_.size() ? o.den_[i] : 0;
    m[i] = static_cast<int16_t>(std::max(x, y));
    if (m[i] > x) a = r_->pmul(a, den_power(*r_, static_cast<int>(i), m[i] - x));
    if (m[i] > y) b = r_->pmul(b, den_power(*r_, static_cast<int>(i), m[i] - y));
  }
  RingElem r;
  r.r_ = r_;
  r.num_ = r_->padd(a, b);
  r.den_ = std::move(m);
  r.normalize();
  return r;
}

RingElem RingElem::operator-() const {
  RingElem r = *this;
  r.num_ = r_->pneg(num_);
  return r;
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
  check_same(o);
  RingElem r;
  r.r_ = r_;
  r.num_ = r_->pmul(num_, o.num_);
  if (r.num_.empty()) return r;
  std::size_t n = std::max(den_.size(), o.den_.size());
  r.den_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    r.den_[i] = static_cast<int16_t>((i < den_.size() ? den_[i] : 0) + (i < o.den_.size() ? o.den_[i] : 0));
  if (!den_.empty() || !o.den_.empty()) r.normalize();
  return r;
}

RingElem RingElem::operator*(int64_t c) const { return *this * r_->constant(c); }
RingElem operator*(int64_t c, const RingElem& x) { return x * c; }

bool RingElem::operator==(const RingElem& o) const {
  check_same(o);
  if (den_ == o.den_) return num_ == o.num_;
  return (*this - o).is_zero();
}

RingElem RingElem::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RingElem r = r_->one(), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

namespace {

// strips declared denominators from p; returns exponents and the cofactor
std::vector<int16_t> strip_dens(const Ring& r, Poly& p) {
  std::vector<int16_t> e(r.num_dens(), 0);
  for (int i = 0; i < r.num_dens(); ++i) {
    Poly q;
    while (r.pdiv(p, r.den(i), q)) {
      p = std::move(q);
      ++e[i];
    }
  }
  return e;
}

bool x_monomial_only(const Term& t) {
  for (int i = 1; i < kMaxVars; ++i)
    if (t.e[i]) return false;
  return true;
}

}  // namespace

RingElem RingElem::inverse() const {
  if (num_.empty()) throw NotAUnit("0 is not a unit");
  const Ring& R = *r_;
  // denominators move up
  Poly up = R.pconst(1);
  for (std::size_t i = 0; i < den_.size(); ++i)
    if (den_[i]) up = R.pmul(up, den_power(R, static_cast<int>(i), den_[i]));
  if (R.base().finite()) {
    // x = c X^k (1 + n) with n nilpotent
    Poly unit_part;
    for (const auto& t : num_)
      if (!R.in_m(t)) unit_part.push_back(t);
    if (unit_part.size() != 1 || !x_monomial_only(unit_part[0]) || !R.cunit(unit_part[0].c))
      throw NotAUnit("not a unit: " + str());
    Term u = unit_part[0];
    Mono ninv{};
    ninv[0] = static_cast<int16_t>(-u.e[0]);
    int64_t cinv = R.cinv(u.c);
    Poly n = R.psub(R.pscale(num_, cinv, ninv), R.pconst(1));
    Poly sum = R.pconst(1), pw = R.pconst(1);
    Poly negn = R.pneg(n);
    for (int it = 0; !n.empty(); ++it) {
      if (it > 64) throw NotAUnit("not a unit (non-nilpotent remainder): " + str());
      pw = R.pmul(pw, negn);
      if (pw.empty()) break;
      sum = R.padd(sum, pw);
    }
    RingElem r;
    r.r_ = r_;
    r.num_ = R.pmul(R.pscale(sum, cinv, ninv), up);
    return r;
  }
  Poly p = num_;
  auto e = strip_dens(R, p);
  if (p.size() != 1 || !x_monomial_only(p[0]) || (p[0].c != 1 && p[0].c != -1))
    throw NotAUnit("not a recognizable unit: " + str());
  Mono sh{};
  sh[0] = static_cast<int16_t>(-p[0].e[0]);
  return RingElem(r_, R.pscale(up, p[0].c, sh), e);
}

RingElem RingElem::inverse_local() const {
  try {
    return inverse();
  } catch (const NotAUnit&) {
    if (r_->base().finite()) throw;
  }
  Ring& R = *r_;
  Poly p = num_;
  strip_dens(R, p);
  int mx = p[0].e[0];
  for (const auto& t : p)
    if (t.e[0] != mx) throw NotAUnit("not a unit (X-dependent): " + str());
  Mono sh{};
  sh[0] = static_cast<int16_t>(-mx);
  Poly q = R.pscale(p, 1, sh);
  int64_t c0 = 0;
  int nonm = 0;
  for (const auto& t : q) {
    if (R.in_m(t)) continue;
    ++nonm;
    if (!x_monomial_only(t)) throw NotAUnit("not a unit (not 1 mod M): " + str());
    c0 = t.c;
  }
  if (nonm != 1 || (c0 != 1 && c0 != -1)) throw NotAUnit("not a unit (not +-1 mod M): " + str());
  R.declare(q);
  return inverse();
}

bool RingElem::is_unit() const {
  try {
    inverse();
    return true;
  } catch (const NotAUnit&) {
    return false;
  }
}

int RingElem::min_x() const {
  int m = num_.at(0).e[0];
  for (const auto& t : num_) m = std::min<int>(m, t.e[0]);
  return m;
}

int RingElem::max_x() const { return num_.at(0).e[0]; }

bool RingElem::x_free() const {
  if (!den_x_free()) return false;
  for (const auto& t : num_)
    if (t.e[0]) return false;
  return true;
}

RingElem RingElem::x_coeff(int k) const {
  if (!den_x_free()) throw DenominatorObstruction("X-dependent denominator: " + str());
  Poly p;
  for (auto t : num_)
    if (t.e[0] == k) {
      t.e[0] = 0;
      p.push_back(t);
    }
  return RingElem(r_, p, den_);
}

RingElem RingElem::graded(int d) const {
  if (!den_x_free()) throw DenominatorObstruction("X-dependent denominator: " + str());
  Poly p;
  for (const auto& t : num_)
    if (t.e[0] == -d) p.push_back(t);
  return RingElem(r_, p, den_);
}

RingElem RingElem::at_x0() const {
  if (!num_.empty() && min_x() < 0) throw DenominatorObstruction("negative X power at X=0: " + str());
  return x_coeff(0);
}

std::string RingElem::str() const {
  if (!r_) return "<null>";
  std::string s = r_->pstr(num_);
  if (den_.empty()) return s;
  std::string out = num_.size() > 1 ? "(" + s + ")" : s;
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (!den_[i]) continue;
    out += "/(" + r_->den_str(static_cast<int>(i)) + ")";
    if (den_[i] > 1) out += "^" + std::to_string(den_[i]);
  }
  return out;
}

bool in_ideal(const RingElem& x, IdealTag tag) {
  if (!x.den_x_free()) throw DenominatorObstruction("X-dependent denominator: " + x.str());
  int lo = tag == IdealTag::M_poly ? 0 : tag == IdealTag::XM_poly ? 1 : tag == IdealTag::X2M_poly ? 2 : INT32_MIN;
  for (const auto& t : x.num()) {
    if (!x.ring()->in_m(t)) return false;
    if (t.e[0] < lo) return false;
  }
  return true;
}

bool in_m(const RingElem& x) { return x.x_free() && in_ideal(x, IdealTag::M_laurent); }

bool b_membership(const RingElem& x) {
  if (!x.den_x_free()) throw DenominatorObstruction("X-dependent denominator: " + x.str());
  for (const auto& t : x.num())
    if (t.e[0] > 0 && !x.ring()->in_m(t)) return false;
  return true;
}

bool in_a(const RingElem& x) { return x.x_free(); }

bool in_a_poly(const RingElem& x) {
  if (!x.den_x_free()) return false;
  return x.is_zero() || x.min_x() >= 0;
}

DoubleElem DoubleElem::operator+(const DoubleElem& o) const { return {first + o.first, second + o.second, ideal}; }
DoubleElem DoubleElem::operator*(const DoubleElem& o) const { return {first * o.first, second * o.second, ideal}; }
DoubleElem DoubleElem::operator-() const { return {-first, -second, ideal}; }
bool DoubleElem::operator==(const DoubleElem& o) const { return first == o.first && second == o.second; }

DoubleElem make_double(const RingElem& r, const RingElem& s, IdealTag ideal) {
  if (!in_ideal(r - s, ideal)) throw CongruenceViolation("components not congruent: " + (r - s).str());
  return {r, s, ideal};
}

DoubleElem delta(const RingElem& r, IdealTag ideal) { return {r, r, ideal}; }

}  // namespace stk
