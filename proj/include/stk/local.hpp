#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "stk/ring.hpp"

namespace stk {

// Z/p^k, or F_p[eps]/(eps^k); Z/p with k = 1 doubles as a generic-point field
struct LocalRing {
  enum class Kind { ZPK, FPE };
  Kind kind = Kind::ZPK;
  int64_t p = 3;
  int k = 2;

  static LocalRing zpk(int64_t p, int k) { return {Kind::ZPK, p, k}; }
  static LocalRing fpe(int64_t p, int k) { return {Kind::FPE, p, k}; }
  // "Z9", "F3[eps]/eps^3", "F1000003"
  static LocalRing parse(const std::string& s);
  int64_t q() const;
  bool is_field() const { return kind == Kind::ZPK && k == 1; }
  std::string name() const;
};

constexpr int kLocMax = 8;

class Loc {
 public:
  Loc() = default;
  Loc(const LocalRing* L, int64_t c);

  const LocalRing* ring() const { return L_; }
  int64_t coef(int i) const { return c_[i]; }

  Loc operator+(const Loc& o) const;
  Loc operator-(const Loc& o) const;
  Loc operator*(const Loc& o) const;
  Loc operator-() const;
  Loc& operator+=(const Loc& o) { return *this = *this + o; }
  Loc& operator*=(const Loc& o) { return *this = *this * o; }
  bool operator==(const Loc& o) const;
  bool operator!=(const Loc& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_unit() const;
  bool in_max() const;
  Loc inverse() const;
  Loc pow(int64_t e) const;
  std::string str() const;

  static Loc eps(const LocalRing* L);

 private:
  const LocalRing* L_ = nullptr;
  int64_t c_[kLocMax] = {0, 0, 0, 0, 0, 0, 0, 0};
};

// ring homomorphism from the localized symbolic ring into a finite local ring
class EvalMap {
 public:
  EvalMap(RingPtr ring, LocalRing target, uint64_t seed);

  const LocalRing& target() const { return *L_; }
  const LocalRing* target_ptr() const { return L_.get(); }
  Loc value(int var) const { return vals_[var]; }
  Loc x_inv() const { return xinv_; }
  Loc operator()(const RingElem& x) const;
  Loc constant(int64_t c) const { return Loc(L_.get(), c); }
  // overrides one sampled value (X must stay a unit)
  void assign(const std::string& var, const Loc& v);
  void assign(const std::string& var, int64_t c) { assign(var, Loc(L_.get(), c)); }

 private:
  Loc den_inv(int i) const;
  Loc eval_poly(const Poly& p) const;
  void sample(std::mt19937_64& rng);

  RingPtr ring_;
  std::shared_ptr<LocalRing> L_;
  std::vector<Loc> vals_;
  Loc xinv_;
  uint64_t seed_;
  std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
  mutable std::vector<Loc> den_inv_;
  mutable std::vector<bool> den_ok_;
};

Loc random_loc(const LocalRing* L, std::mt19937_64& rng);
Loc random_max(const LocalRing* L, std::mt19937_64& rng);
Loc random_unit(const LocalRing* L, std::mt19937_64& rng);

// the rotation used by randomized strategies: generic field, Z/p^2, F_p[eps]/eps^3
LocalRing default_target(int seed_index);

}  // namespace stk
