#include "stk/gauss.hpp"

#include <algorithm>
#include <stdexcept>

#include "stk/error.hpp"

namespace stk {

Word unipotent_factor(const ContextPtr& ctx, const SymMat& u, bool upper) {
  const auto& phi = *ctx->phi;
  const auto& rep = *ctx->rep;
  std::vector<Root> roots;
  for (Root r = 0; r < phi.size(); ++r)
    if (phi.is_positive(r) == upper) roots.push_back(r);
  std::stable_sort(roots.begin(), roots.end(),
                   [&](Root a, Root b) { return std::abs(phi.height(a)) < std::abs(phi.height(b)); });
  SymMat cur = u;
  Word out(ctx);
  std::size_t i = 0;
  while (i < roots.size()) {
    std::size_t j = i;
    int h = std::abs(phi.height(roots[i]));
    std::vector<std::pair<Root, RingElem>> level;
    while (j < roots.size() && std::abs(phi.height(roots[j])) == h) {
      const auto& e = rep.pattern(roots[j])[0];
      RingElem c = cur(e.row, e.col) * static_cast<int64_t>(e.sign);
      if (!c.is_zero()) level.emplace_back(roots[j], c);
      ++j;
    }
    for (const auto& [r, c] : level) {
      rep.apply_left(cur, r, -c);
      out *= gen(ctx, r, c);
    }
    i = j;
  }
  if (cur != identity_matrix(ctx)) throw std::logic_error("unipotent factorization left a residue");
  return out;
}

Word elementary_factor(const ContextPtr& ctx, const SymMat& m) {
  if (!ctx->rep) throw ConfigError("matrix factorization needs a matrix representation");
  const int n = m.n;
  const RingPtr& R = ctx->ring;
  SymMat w = m;
  SymMat L = identity_matrix(ctx);
  for (int k = 0; k < n; ++k) {
    RingElem pinv = unit_inverse(w(k, k));
    for (int i = k + 1; i < n; ++i) {
      if (w(i, k).is_zero()) continue;
      RingElem l = w(i, k) * pinv;
      L(i, k) = l;
      for (int j = k; j < n; ++j)
        if (!w(k, j).is_zero()) w(i, j) = w(i, j) - l * w(k, j);
    }
  }
  std::vector<RingElem> d(n);
  SymMat U = identity_matrix(ctx);
  for (int k = 0; k < n; ++k) {
    d[k] = w(k, k);
    RingElem dinv = unit_inverse(d[k]);
    for (int j = k + 1; j < n; ++j) U(k, j) = w(k, j) * dinv;
  }
  Word out = unipotent_factor(ctx, L, false);
  const auto& phi = *ctx->phi;
  if (phi.family() == Family::A) {
    RingElem t = R->one();
    for (int i = 0; i + 1 < n; ++i) {
      t = t * d[i];
      std::vector<int> c(n, 0);
      c[i] = 1;
      c[i + 1] = -1;
      if (!t.is_one()) out *= h_elem(ctx, phi.find(c), t);
    }
  } else if (std::any_of(d.begin(), d.end(), [](const RingElem& x) { return !x.is_one(); })) {
    out *= diag_letter(ctx, d);
  }
  out *= unipotent_factor(ctx, U, true);
  return out;
}

}  // namespace stk
