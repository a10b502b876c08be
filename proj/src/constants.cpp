#include "stk/constants.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "stk/error.hpp"

namespace stk {

ConstantTable::ConstantTable(RootSystemPtr phi, ConstantSource src)
    : phi_(std::move(phi)), src_(src), n_(static_cast<std::size_t>(phi_->size()) * phi_->size(), 0) {}

std::string ConstantTable::dump() const {
  std::ostringstream os;
  int n = phi_->size();
  for (Root a = 0; a < n; ++a)
    for (Root b = 0; b < n; ++b) {
      if (phi_->sum(a, b) < 0) continue;
      int v = (*this)(a, b);
      os << "N(" << phi_->format(a) << ", " << phi_->format(b) << ") = " << (v > 0 ? "+1" : "-1") << "\n";
    }
  return os.str();
}

ConstantTable derive_constants(const MatrixRep& rep) {
  const auto& phi = rep.phi();
  ConstantTable t(rep.phi_ptr(), ConstantSource::from_representation);
  int n = phi.size();
  for (Root a = 0; a < n; ++a)
    for (Root b = 0; b < n; ++b) {
      Root s = phi.sum(a, b);
      if (s < 0) continue;
      auto m = rep.int_gen(a, 1) * rep.int_gen(b, 1) * rep.int_gen(a, -1) * rep.int_gen(b, -1);
      const auto& e = rep.pattern(s)[0];
      int64_t v = m(e.row, e.col) * e.sign;
      if ((v != 1 && v != -1) || m != rep.int_gen(s, v))
        throw ConfigError("commutator is not a root element for " + phi.format(a) + ", " + phi.format(b));
      t.set(a, b, static_cast<int>(v));
    }
  return t;
}

ConstantTable extraspecial_constants(RootSystemPtr phi) {
  int n = phi->size(), l = phi->rank();
  auto cart = phi->cartan();
  // bimultiplicative cocycle on the root lattice: eps(i,i) = -1, eps(i,j) = (-1)^{a_ij} for i<j
  std::vector<std::vector<int>> odd(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) {
    odd[i][i] = 1;
    for (int j = i + 1; j < l; ++j) odd[i][j] = cart[i][j] & 1;
  }
  auto eps = [&](Root a, Root b) {
    const auto& x = phi->simple_coeffs(a);
    const auto& y = phi->simple_coeffs(b);
    int s = 0;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        if (odd[i][j]) s += x[i] * y[j];
    return (s & 1) ? -1 : 1;
  };
  // negative root vectors flipped so N(-a,-b) = -N(a,b)
  std::vector<int> c(n);
  for (Root r = 0; r < n; ++r) c[r] = phi->is_positive(r) ? 1 : -1;
  ConstantTable t(phi, ConstantSource::extraspecial);
  for (Root a = 0; a < n; ++a)
    for (Root b = 0; b < n; ++b) {
      Root s = phi->sum(a, b);
      if (s >= 0) t.set(a, b, c[a] * c[b] * c[s] * eps(a, b));
    }
  // normalize extraspecial pairs, processing positive roots by height
  std::vector<Root> pos(phi->num_positive());
  std::iota(pos.begin(), pos.end(), 0);
  std::stable_sort(pos.begin(), pos.end(), [&](Root x, Root y) { return phi->height(x) < phi->height(y); });
  std::vector<int> rank_of(n, 0);
  for (int i = 0; i < static_cast<int>(pos.size()); ++i) rank_of[pos[i]] = i;
  std::vector<int> d(n, 1);
  for (Root xi : pos) {
    if (phi->height(xi) == 1) continue;
    Root best = -1;
    for (Root a : pos) {
      Root b = phi->diff(xi, a);
      if (b >= 0 && phi->is_positive(b) && (best < 0 || rank_of[a] < rank_of[best])) best = a;
    }
    Root b = phi->diff(xi, best);
    int v = d[best] * d[b] * t(best, b);
    d[xi] = d[phi->neg(xi)] = v;
  }
  return rescale(t, d);
}

VerifyReport verify(const ConstantTable& t) {
  const auto& phi = t.phi();
  int n = phi.size();
  VerifyReport rep;
  auto fail = [&](const std::string& what) {
    rep.pass = false;
    rep.violations.push_back(what);
  };
  for (Root a = 0; a < n; ++a)
    for (Root b = 0; b < n; ++b) {
      Root s = phi.sum(a, b);
      if (s < 0) continue;
      ++rep.pairs;
      int v = t(a, b);
      std::string tag = "(" + phi.format(a) + ", " + phi.format(b) + ")";
      if (v != 1 && v != -1) fail("value not +-1 at " + tag);
      if (t(b, a) != -v) fail("N(a,b) = -N(b,a) fails at " + tag);
      if (t(phi.neg(a), phi.neg(b)) != -v) fail("N(a,b) = -N(-a,-b) fails at " + tag);
      if (t(b, phi.neg(s)) != v) fail("N(a,b) = N(b,-a-b) fails at " + tag);
      if (t(phi.neg(s), a) != v) fail("N(a,b) = N(-a-b,a) fails at " + tag);
    }
  for (Root a = 0; a < n; ++a)
    for (Root b = 0; b < n; ++b) {
      if (phi.pairing(a, b) != -1) continue;
      for (Root g = 0; g < n; ++g) {
        if (phi.pairing(b, g) != -1 || phi.pairing(a, g) != 0) continue;
        Root ab = phi.sum(a, b), bg = phi.sum(b, g);
        ++rep.triples;
        if (t(b, g) * t(a, bg) != t(ab, g) * t(a, b))
          fail("cocycle identity fails at (" + phi.format(a) + ", " + phi.format(b) + ", " + phi.format(g) + ")");
      }
    }
  return rep;
}

ConstantTable rescale(const ConstantTable& t, const std::vector<int>& c) {
  const auto& phi = t.phi();
  ConstantTable r(t.phi_ptr(), t.source());
  for (Root a = 0; a < phi.size(); ++a)
    for (Root b = 0; b < phi.size(); ++b) {
      Root s = phi.sum(a, b);
      if (s >= 0) r.set(a, b, c[a] * c[b] * c[s] * t(a, b));
    }
  return r;
}

std::optional<std::vector<int>> sign_rescaling(const ConstantTable& from, const ConstantTable& to) {
  const auto& phi = from.phi();
  int n = phi.size(), np = phi.num_positive();
  auto pidx = [&](Root r) { return phi.is_positive(r) ? r : phi.neg(r); };
  // GF(2) rows: bitmask over positive roots plus right-hand side
  std::vector<std::vector<uint8_t>> rows;
  for (Root a = 0; a < n; ++a)
    for (Root b = 0; b < n; ++b) {
      Root s = phi.sum(a, b);
      if (s < 0) continue;
      std::vector<uint8_t> row(np + 1, 0);
      row[pidx(a)] ^= 1;
      row[pidx(b)] ^= 1;
      row[pidx(s)] ^= 1;
      row[np] = from(a, b) == to(a, b) ? 0 : 1;
      rows.push_back(std::move(row));
    }
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < np && r < static_cast<int>(rows.size()); ++col) {
    int p = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col]) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      if (i != r && rows[i][col])
        for (int j = col; j <= np; ++j) rows[i][j] ^= rows[r][j];
    pivot_col.push_back(col);
    ++r;
  }
  for (int i = r; i < static_cast<int>(rows.size()); ++i)
    if (rows[i][np]) return std::nullopt;
  std::vector<int> bit(np, 0);
  for (int i = 0; i < r; ++i) bit[pivot_col[i]] = rows[i][np];
  std::vector<int> c(n);
  for (Root x = 0; x < n; ++x) c[x] = bit[pidx(x)] ? -1 : 1;
  return c;
}

ConstantTable restrict_table(const ConstantTable& t, RootSystemPtr sub, const std::vector<Root>& emb) {
  ConstantTable r(sub, t.source());
  for (Root a = 0; a < sub->size(); ++a)
    for (Root b = 0; b < sub->size(); ++b)
      if (sub->sum(a, b) >= 0) r.set(a, b, t(emb[a], emb[b]));
  return r;
}

CompatibilityResult check_compatibility(const ConstantTable& big, const ConstantTable& sub,
                                        const std::vector<Root>& emb) {
  CompatibilityResult res;
  auto restricted = restrict_table(big, sub.phi_ptr(), emb);
  res.equal = restricted == sub;
  if (!res.equal) res.rescaling = sign_rescaling(sub, restricted);
  return res;
}

ConstantTablePtr standard_constants(const RootSystemPtr& phi) {
  static std::mutex mu;
  static std::map<std::string, ConstantTablePtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(phi->name());
  if (it != cache.end()) return it->second;
  ConstantTablePtr t;
  if (phi->family() == Family::E)
    t = std::make_shared<ConstantTable>(extraspecial_constants(phi));
  else
    t = std::make_shared<ConstantTable>(derive_constants(*MatrixRep::build(phi)));
  cache[phi->name()] = t;
  return t;
}

}  // namespace stk
