#include <algorithm>
#include <sstream>

#include "stk/error.hpp"
#include "stk/ring.hpp"

namespace stk {

namespace {

bool mono_less(const Mono& a, const Mono& b) { return a < b; }

// descending order
struct Desc {
  bool operator()(const Term& a, const Term& b) const { return mono_less(b.e, a.e); }
};

Mono mono_add(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<int16_t>(a[i] + b[i]);
  return r;
}

}  // namespace

int64_t BaseSpec::modulus() const {
  if (kind == Kind::Z) return 0;
  if (kind == Kind::FPE) return p;
  int64_t q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  return q;
}

BaseSpec BaseSpec::parse(const std::string& s0) {
  std::string s;
  for (char ch : s0)
    if (ch != ' ') s += ch;
  BaseSpec b;
  if (s == "Z" || s.empty()) return b;
  auto is_prime = [](int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  auto bad = [&]() { return ConfigError("unsupported base ring: " + s0); };
  try {
    if (s[0] == 'F') {
      auto lb = s.find('[');
      int64_t p = std::stoll(s.substr(1, lb == std::string::npos ? std::string::npos : lb - 1));
      if (!is_prime(p)) throw bad();
      b.p = p;
      if (lb == std::string::npos) {
        b.kind = Kind::ZPK;
        b.k = 1;
        return b;
      }
      auto caret = s.rfind('^');
      if (caret == std::string::npos) throw bad();
      b.kind = Kind::FPE;
      b.k = std::stoi(s.substr(caret + 1));
      if (b.k < 1 || b.k > 8) throw bad();
      return b;
    }
    if (s[0] == 'Z') {
      std::string rest = s.substr(1);
      if (!rest.empty() && rest[0] == '/') rest = rest.substr(1);
      int64_t n = std::stoll(rest);
      for (int64_t p = 2; p <= n; ++p) {
        if (n % p) continue;
        int k = 0;
        int64_t m = n;
        while (m % p == 0) {
          m /= p;
          ++k;
        }
        if (m != 1) throw bad();
        b.kind = Kind::ZPK;
        b.p = p;
        b.k = k;
        return b;
      }
    }
  } catch (const ConfigError&) {
    throw;
  } catch (...) {
    throw bad();
  }
  throw bad();
}

std::string BaseSpec::str() const {
  switch (kind) {
    case Kind::Z: return "Z";
    case Kind::ZPK: return k == 1 ? "F" + std::to_string(p) : "Z" + std::to_string(modulus());
    case Kind::FPE: return "F" + std::to_string(p) + "[eps]/eps^" + std::to_string(k);
  }
  return "?";
}

int64_t Ring::cnorm(int64_t x) const {
  int64_t q = spec_.base.modulus();
  if (!q) return x;
  x %= q;
  return x < 0 ? x + q : x;
}

int64_t Ring::cadd(int64_t x, int64_t y) const {
  int64_t q = spec_.base.modulus();
  if (q) return cnorm(static_cast<int64_t>((static_cast<__int128>(x) + y) % q));
  int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw CoefficientOverflow();
  return r;
}

int64_t Ring::cmul(int64_t x, int64_t y) const {
  int64_t q = spec_.base.modulus();
  if (q) return cnorm(static_cast<int64_t>((static_cast<__int128>(x) * y) % q));
  int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw CoefficientOverflow();
  return r;
}

int64_t Ring::cneg(int64_t x) const {
  if (spec_.base.modulus()) return cnorm(-x);
  if (x == INT64_MIN) throw CoefficientOverflow();
  return -x;
}

bool Ring::cunit(int64_t x) const {
  if (!spec_.base.finite()) return x == 1 || x == -1;
  return cnorm(x) % spec_.base.p != 0;
}

int64_t Ring::cinv(int64_t x) const {
  if (!spec_.base.finite()) {
    if (x == 1 || x == -1) return x;
    throw NotAUnit("integer " + std::to_string(x) + " is not a unit");
  }
  int64_t q = spec_.base.modulus();
  int64_t a = cnorm(x), m = q, u = 1, v = 0;
  while (m) {
    int64_t t = a / m;
    a -= t * m;
    std::swap(a, m);
    u -= t * v;
    std::swap(u, v);
  }
  if (a != 1) throw NotAUnit("coefficient " + std::to_string(x) + " is not a unit");
  return cnorm(u);
}

bool Ring::cin_max(int64_t x) const {
  if (spec_.base.kind != BaseSpec::Kind::ZPK) return false;
  return cnorm(x) % spec_.base.p == 0;
}

bool Ring::in_m(const Term& t) const {
  for (int v = 1; v < nvars(); ++v)
    if (is_m_[v] && t.e[v] > 0) return true;
  return cin_max(t.c);
}

void Ring::truncate(Poly& x) const {
  if (nil_var_ < 0) return;
  int k = spec_.base.k;
  x.erase(std::remove_if(x.begin(), x.end(), [&](const Term& t) { return t.e[nil_var_] >= k; }), x.end());
}

Poly Ring::pconst(int64_t c) const {
  c = cnorm(c);
  if (c == 0) return {};
  Term t;
  t.e.fill(0);
  t.c = c;
  return {t};
}

Poly Ring::padd(const Poly& x, const Poly& y) const {
  Poly r;
  r.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].e == y[j].e) {
      int64_t c = cadd(x[i].c, y[j].c);
      if (c) r.push_back({x[i].e, c});
      ++i;
      ++j;
    } else if (mono_less(y[j].e, x[i].e)) {
      r.push_back(x[i++]);
    } else {
      r.push_back(y[j++]);
    }
  }
  for (; i < x.size(); ++i) r.push_back(x[i]);
  for (; j < y.size(); ++j) r.push_back(y[j]);
  return r;
}

Poly Ring::pneg(const Poly& x) const {
  Poly r = x;
  for (auto& t : r) t.c = cneg(t.c);
  return r;
}

Poly Ring::psub(const Poly& x, const Poly& y) const { return padd(x, pneg(y)); }

Poly Ring::pscale(const Poly& x, int64_t c, const Mono& shift) const {
  Poly r;
  r.reserve(x.size());
  for (const auto& t : x) {
    int64_t cc = cmul(t.c, c);
    if (cc) r.push_back({mono_add(t.e, shift), cc});
  }
  truncate(r);
  return r;
}

Poly Ring::pmul(const Poly& x, const Poly& y) const {
  if (x.empty() || y.empty()) return {};
  if (x.size() == 1) return pscale(y, x[0].c, x[0].e);
  if (y.size() == 1) return pscale(x, y[0].c, y[0].e);
  Poly prod;
  prod.reserve(x.size() * y.size());
  for (const auto& a : x)
    for (const auto& b : y) prod.push_back({mono_add(a.e, b.e), cmul(a.c, b.c)});
  std::sort(prod.begin(), prod.end(), Desc());
  Poly r;
  r.reserve(prod.size());
  for (const auto& t : prod) {
    if (!r.empty() && r.back().e == t.e) {
      r.back().c = cadd(r.back().c, t.c);
      if (r.back().c == 0) r.pop_back();
    } else if (t.c) {
      r.push_back(t);
    }
  }
  truncate(r);
  return r;
}

bool Ring::pdiv(const Poly& x, const Poly& d, Poly& q) const {
  q.clear();
  if (d.empty()) return false;
  if (x.empty()) return true;
  auto minx = [](const Poly& p) {
    int m = p[0].e[0];
    for (const auto& t : p) m = std::min<int>(m, t.e[0]);
    return m;
  };
  int sx = minx(x), sd = minx(d);
  Mono shx{}, shd{};
  shx[0] = static_cast<int16_t>(-sx);
  shd[0] = static_cast<int16_t>(-sd);
  Poly r = pscale(x, 1, shx);
  Poly dd = pscale(d, 1, shd);
  const Term& lt = dd[0];
  bool finite = spec_.base.finite();
  int64_t linv = 0;
  if (finite) {
    if (!cunit(lt.c)) return false;
    linv = cinv(lt.c);
  }
  std::size_t guard = 0;
  while (!r.empty()) {
    if (++guard > 200000) return false;
    const Term& t = r[0];
    Mono m;
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.e[i] < lt.e[i]) return false;
      m[i] = static_cast<int16_t>(t.e[i] - lt.e[i]);
    }
    int64_t c;
    if (finite) {
      c = cmul(t.c, linv);
    } else {
      if (t.c % lt.c != 0) return false;
      c = t.c / lt.c;
    }
    q.push_back({m, c});
    r = psub(r, pscale(dd, c, m));
  }
  Mono back{};
  back[0] = static_cast<int16_t>(sx - sd);
  q = pscale(q, 1, back);
  return true;
}

int Ring::declare(const Poly& d0) {
  if (d0.empty()) throw NotAUnit("cannot declare 0 invertible");
  // normalize: lowest X power 0, positive leading coefficient
  int m = d0[0].e[0];
  for (const auto& t : d0) m = std::min<int>(m, t.e[0]);
  Mono sh{};
  sh[0] = static_cast<int16_t>(-m);
  Poly d = pscale(d0, 1, sh);
  if (!spec_.base.finite() && d[0].c < 0) d = pneg(d);
  std::lock_guard<std::mutex> lock(mu_);
  int n = nden_.load(std::memory_order_relaxed);
  for (int i = 0; i < n; ++i)
    if (dens_[i] == d) return i;
  if (n >= kMaxDens) throw ConfigError("too many declared denominators");
  dens_[n] = d;
  nden_.store(n + 1, std::memory_order_release);
  return n;
}

std::string Ring::den_str(int i) const { return pstr(dens_[i]); }

std::string Ring::pstr(const Poly& x) const {
  if (x.empty()) return "0";
  std::ostringstream os;
  int64_t q = spec_.base.modulus();
  bool first = true;
  for (const auto& t : x) {
    int64_t c = t.c;
    if (q && c > q / 2) c -= q;
    bool neg = c < 0;
    uint64_t mag = neg ? -static_cast<uint64_t>(c) : static_cast<uint64_t>(c);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (int v = 1; v < nvars(); ++v) {
      if (!t.e[v]) continue;
      mono << (any ? "*" : "") << names_[v];
      if (t.e[v] != 1) mono << "^" << t.e[v];
      any = true;
    }
    if (t.e[0]) {
      mono << (any ? "*" : "") << "X";
      if (t.e[0] != 1) mono << "^" << t.e[0];
      any = true;
    }
    if (!any) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << mono.str();
    }
  }
  return os.str();
}

}  // namespace stk
