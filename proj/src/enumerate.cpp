#include "stk/enumerate.hpp"

#include "stk/error.hpp"

namespace stk {

namespace {

int64_t element_code(const RingElem& x) {
  const Ring& R = *x.ring();
  if (!x.x_free() || x.has_den()) throw ConfigError("enumeration letters need constant coefficients: " + x.str());
  int64_t code = 0;
  int nil = R.nil_var();
  for (const auto& t : x.num()) {
    int64_t pw = 1;
    if (nil >= 0)
      for (int i = 0; i < t.e[nil]; ++i) pw *= R.base().p;
    code += R.cnorm(t.c) * pw;
  }
  return code;
}

// HLT coset enumeration with coincidence handling, trivial subgroup
class CosetTable {
 public:
  CosetTable(int ngen, std::vector<int> inv, int64_t limit) : n_(ngen), inv_(std::move(inv)), limit_(limit) {
    new_coset();
  }

  void run(const std::vector<std::vector<int>>& rels) {
    for (int64_t c = 0; c < static_cast<int64_t>(parent_.size()); ++c) {
      for (const auto& r : rels) {
        if (parent_[c] != c) break;
        scan_and_fill(c, r);
      }
      for (int x = 0; x < n_ && parent_[c] == c; ++x)
        if (at(c, x) < 0) define(c, x);
    }
  }

  int64_t live() const {
    int64_t k = 0;
    for (int64_t c = 0; c < static_cast<int64_t>(parent_.size()); ++c)
      if (parent_[c] == c) ++k;
    return k;
  }

  std::vector<int32_t> table;
  std::vector<int32_t> parent_;

 private:
  int32_t& at(int64_t c, int x) { return table[c * n_ + x]; }

  int64_t new_coset() {
    int64_t d = static_cast<int64_t>(parent_.size());
    if (d >= limit_) throw CosetLimitExceeded("coset limit " + std::to_string(limit_) + " exceeded");
    parent_.push_back(static_cast<int32_t>(d));
    table.resize(table.size() + n_, -1);
    return d;
  }

  void define(int64_t c, int x) {
    int64_t d = new_coset();
    at(c, x) = static_cast<int32_t>(d);
    at(d, inv_[x]) = static_cast<int32_t>(c);
  }

  int64_t rep(int64_t c) {
    int64_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int64_t nx = parent_[c];
      parent_[c] = static_cast<int32_t>(r);
      c = nx;
    }
    return r;
  }

  void merge(int64_t k, int64_t l, std::vector<int64_t>& q) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = static_cast<int32_t>(k);
    q.push_back(l);
  }

  void coincidence(int64_t a, int64_t b) {
    std::vector<int64_t> q;
    merge(a, b, q);
    for (std::size_t i = 0; i < q.size(); ++i) {
      int64_t e = q[i];
      for (int x = 0; x < n_; ++x) {
        int64_t f = at(e, x);
        if (f < 0) continue;
        int xi = inv_[x];
        if (at(f, xi) == e) at(f, xi) = -1;
        int64_t e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x), q);
        } else if (at(f1, xi) >= 0) {
          merge(e1, at(f1, xi), q);
        } else {
          at(e1, x) = static_cast<int32_t>(f1);
          at(f1, xi) = static_cast<int32_t>(e1);
        }
      }
    }
  }

  void scan_and_fill(int64_t c, const std::vector<int>& r) {
    int i = 0, j = static_cast<int>(r.size()) - 1;
    int64_t f = c, b = c;
    for (;;) {
      while (i <= j && at(f, r[i]) >= 0) f = at(f, r[i++]);
      if (i > j) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j >= i && at(b, inv_[r[j]]) >= 0) b = at(b, inv_[r[j--]]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, r[i]) = static_cast<int32_t>(b);
        at(b, inv_[r[i]]) = static_cast<int32_t>(f);
        return;
      }
      define(f, r[i]);
    }
  }

  int n_;
  std::vector<int> inv_;
  int64_t limit_;
};

}  // namespace

std::shared_ptr<const EnumHandle> EnumHandle::build(const ContextPtr& ctx, const EnumOptions& opt) {
  const RingPtr& R = ctx->ring;
  if (!R->base().finite() || !R->spec().a_vars.empty() || !R->spec().m_vars.empty())
    throw ConfigError("coset enumeration needs a variable-free finite ring");
  auto h = std::make_shared<EnumHandle>();
  h->ctx_ = ctx;
  auto elems = finite_elements(R);
  h->nelem_ = static_cast<int>(elems.size());
  for (int i = 0; i < h->nelem_; ++i) h->elem_of_code_[element_code(elems[i])] = i;
  auto idx = [&](const RingElem& x) { return h->elem_of_code_.at(element_code(x)); };
  const auto& phi = *ctx->phi;
  int ne = h->nelem_;
  h->ngen_ = phi.size() * (ne - 1);
  std::vector<int> inv(h->ngen_);
  for (Root a = 0; a < phi.size(); ++a)
    for (int i = 1; i < ne; ++i) inv[a * (ne - 1) + i - 1] = a * (ne - 1) + idx(-elems[i]) - 1;
  auto col = [&](Root a, int i) { return a * (ne - 1) + i - 1; };

  std::vector<std::vector<int>> rels;
  auto push = [&](std::vector<int>& r, Root a, const RingElem& c) {
    int i = idx(c);
    if (i) r.push_back(col(a, i));
  };
  for (Root a = 0; a < phi.size(); ++a)
    for (int i = 1; i < ne; ++i)
      for (int j = 1; j < ne; ++j) {
        std::vector<int> r;
        push(r, a, elems[i]);
        push(r, a, elems[j]);
        push(r, a, -(elems[i] + elems[j]));
        rels.push_back(r);
      }
  for (Root a = 0; a < phi.size(); ++a)
    for (Root b = 0; b < phi.size(); ++b) {
      if (b == a || b == phi.neg(a)) continue;
      for (int i = 1; i < ne; ++i)
        for (int j = 1; j < ne; ++j) {
          std::vector<int> r;
          push(r, a, elems[i]);
          push(r, b, elems[j]);
          push(r, a, -elems[i]);
          push(r, b, -elems[j]);
          Root s = phi.sum(a, b);
          if (s >= 0) push(r, s, -(elems[i] * elems[j] * (*ctx->N)(a, b)));
          rels.push_back(r);
        }
    }
  h->nrel_ = static_cast<int>(rels.size());
  CosetTable ct(h->ngen_, inv, opt.coset_limit);
  ct.run(rels);
  h->order_ = ct.live();
  h->defined_ = static_cast<int64_t>(ct.parent_.size());
  h->table_ = std::move(ct.table);
  h->parent_ = std::move(ct.parent_);
  return h;
}

int64_t EnumHandle::rep(int64_t c) const {
  while (parent_[c] != c) c = parent_[c];
  return c;
}

int EnumHandle::column(const Letter& l) const {
  if (l.is_diag()) throw ConfigError("diagonal letters are not Steinberg generators");
  int i = elem_of_code_.at(element_code(l.coeff));
  return i ? l.root * (nelem_ - 1) + i - 1 : -1;
}

int64_t EnumHandle::trace(const Word& w) const {
  if (w.ctx() != ctx_) throw MixedSpecs();
  int64_t c = 0;
  for (const auto& l : w.letters()) {
    int x = column(l);
    if (x < 0) continue;
    c = rep(table_[c * ngen_ + x]);
  }
  return c;
}

bool enum_equal(const EnumHandle& h, const Word& a, const Word& b) { return h.trace(a) == h.trace(b); }

}  // namespace stk
