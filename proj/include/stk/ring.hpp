#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace stk {

constexpr int kMaxVars = 16;
// exponent vector; slot 0 is the Laurent variable X
using Mono = std::array<int16_t, kMaxVars>;

struct Term {
  Mono e;
  int64_t c;
  bool operator==(const Term&) const = default;
};

// terms sorted by descending lex order on Mono, no zero coefficients
using Poly = std::vector<Term>;

struct BaseSpec {
  enum class Kind { Z, ZPK, FPE };
  Kind kind = Kind::Z;
  int64_t p = 0;
  int k = 1;

  // "Z", "Z9", "Z/9", "F3", "F3[eps]/eps^3"
  static BaseSpec parse(const std::string& s);
  std::string str() const;
  bool finite() const { return kind != Kind::Z; }
  int64_t modulus() const;
};

struct RingSpec {
  std::vector<std::string> a_vars;
  std::vector<std::string> m_vars;
  bool laurent = true;
  std::vector<std::string> denominators;
  BaseSpec base;
};

enum class IdealTag { M_poly, XM_poly, X2M_poly, M_laurent };

class Ring;
using RingPtr = std::shared_ptr<Ring>;
class RingElem;

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr make(const RingSpec& spec);
  // convenience: "a,b", "m,n"
  static RingPtr make(const std::string& a_vars, const std::string& m_vars, const std::string& base = "Z");

  const RingSpec& spec() const { return spec_; }
  const BaseSpec& base() const { return spec_.base; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& var_name(int v) const { return names_[v]; }
  int var_index(const std::string& name) const;
  bool is_m_var(int v) const { return is_m_[v]; }
  int nil_var() const { return nil_var_; }

  RingElem zero();
  RingElem one();
  RingElem constant(int64_t c);
  RingElem var(const std::string& name);
  RingElem X();
  RingElem Xinv();

  // coefficient arithmetic in the base
  int64_t cadd(int64_t x, int64_t y) const;
  int64_t cmul(int64_t x, int64_t y) const;
  int64_t cneg(int64_t x) const;
  int64_t cnorm(int64_t x) const;
  bool cunit(int64_t x) const;
  int64_t cinv(int64_t x) const;
  // true when the coefficient alone lies in the maximal ideal of the base
  bool cin_max(int64_t x) const;

  int num_dens() const { return nden_.load(std::memory_order_acquire); }
  const Poly& den(int i) const { return dens_[i]; }
  // declares d invertible; returns its slot (existing slot if already declared)
  int declare(const Poly& d);
  std::string den_str(int i) const;

  // polynomial kernels
  Poly padd(const Poly& x, const Poly& y) const;
  Poly psub(const Poly& x, const Poly& y) const;
  Poly pmul(const Poly& x, const Poly& y) const;
  Poly pneg(const Poly& x) const;
  Poly pscale(const Poly& x, int64_t c, const Mono& shift) const;
  // exact quotient x/d in the Laurent ring, or false
  bool pdiv(const Poly& x, const Poly& d, Poly& q) const;
  Poly pconst(int64_t c) const;
  std::string pstr(const Poly& x) const;

  bool in_m(const Term& t) const;

  static constexpr int kMaxDens = 4096;

 private:
  Ring() = default;
  void truncate(Poly& x) const;

  RingSpec spec_;
  std::vector<std::string> names_;
  std::vector<bool> is_m_;
  int nil_var_ = -1;
  std::unique_ptr<Poly[]> dens_;
  std::atomic<int> nden_{0};
  std::mutex mu_;
};

class RingElem {
 public:
  RingElem() = default;
  RingElem(RingPtr r, Poly num, std::vector<int16_t> den = {});

  const RingPtr& ring() const { return r_; }
  const Poly& num() const { return num_; }
  const std::vector<int16_t>& den() const { return den_; }
  bool has_den() const { return !den_.empty(); }
  bool den_x_free() const;

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  bool is_const_int(int64_t c) const;

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
  RingElem& operator-=(const RingElem& o) { return *this = *this - o; }
  RingElem& operator*=(const RingElem& o) { return *this = *this * o; }
  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  RingElem operator*(int64_t c) const;
  RingElem pow(int k) const;
  // strict unit recognition; throws NotAUnit
  RingElem inverse() const;
  // also accepts X-free elements congruent to +-1 mod M by declaring them
  RingElem inverse_local() const;
  bool is_unit() const;

  // X-degree range of the numerator; numerator must be nonzero
  int min_x() const;
  int max_x() const;
  // part of X-degree k, with X^k removed; denominators must be X-free
  RingElem x_coeff(int k) const;
  // degree-d part in the t = X^-1 grading
  RingElem graded(int d) const;
  // X := 0; requires no negative X powers
  RingElem at_x0() const;
  bool x_free() const;

  std::string str() const;

 private:
  void normalize();
  void check_same(const RingElem& o) const;

  RingPtr r_;
  Poly num_;
  std::vector<int16_t> den_;
};

RingElem operator*(int64_t c, const RingElem& x);

bool in_ideal(const RingElem& x, IdealTag tag);
bool in_m(const RingElem& x);
bool b_membership(const RingElem& x);
// x lies in A: X-free
bool in_a(const RingElem& x);
// x lies in A[X]: no negative X powers
bool in_a_poly(const RingElem& x);

struct DoubleElem {
  RingElem first;
  RingElem second;
  IdealTag ideal;

  DoubleElem operator+(const DoubleElem& o) const;
  DoubleElem operator*(const DoubleElem& o) const;
  DoubleElem operator-() const;
  bool operator==(const DoubleElem& o) const;
};

DoubleElem make_double(const RingElem& r, const RingElem& s, IdealTag ideal);
DoubleElem delta(const RingElem& r, IdealTag ideal = IdealTag::M_laurent);
inline RingElem p0(const DoubleElem& d) { return d.first; }
inline RingElem p1(const DoubleElem& d) { return d.second; }

}  // namespace stk
