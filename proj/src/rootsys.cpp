#include "stk/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "stk/error.hpp"

namespace stk {

int RootSubset::count() const { return static_cast<int>(std::count(bits.begin(), bits.end(), true)); }

std::vector<Root> RootSubset::members() const {
  std::vector<Root> out;
  for (int i = 0; i < static_cast<int>(bits.size()); ++i)
    if (bits[i]) out.push_back(i);
  return out;
}

namespace {

std::vector<std::pair<int, int>> e_edges(int rank) {
  // Bourbaki labelling: 1-3-4-5-6-7-8 with 2 hanging off 4
  std::vector<std::pair<int, int>> all = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : all)
    if (a <= rank && b <= rank) out.push_back({a - 1, b - 1});
  return out;
}

}  // namespace

RootSystemPtr RootSystem::build(Family f, int rank) {
  bool ok = (f == Family::A && rank >= 1) || (f == Family::D && rank >= 3) ||
            (f == Family::E && rank >= 6 && rank <= 8);
  if (!ok || rank > 15) throw ConfigError("unsupported root system");
  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->family_ = f;
  rs->rank_ = rank;
  std::vector<std::vector<int>> pos;
  std::vector<std::vector<int>> simple;
  if (f == Family::A) {
    int n = rank + 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::vector<int> v(n, 0);
        v[i] = 1;
        v[j] = -1;
        pos.push_back(v);
      }
    for (int i = 0; i < rank; ++i) {
      std::vector<int> v(n, 0);
      v[i] = 1;
      v[i + 1] = -1;
      simple.push_back(v);
    }
  } else if (f == Family::D) {
    int n = rank;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::vector<int> v(n, 0);
        v[i] = 1;
        v[j] = -1;
        pos.push_back(v);
        v[j] = 1;
        pos.push_back(v);
      }
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<int> v(n, 0);
      v[i] = 1;
      v[i + 1] = -1;
      simple.push_back(v);
    }
    std::vector<int> v(n, 0);
    v[n - 2] = 1;
    v[n - 1] = 1;
    simple.push_back(v);
  } else {
    rs->gram_.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) rs->gram_[i][i] = 2;
    for (auto [a, b] : e_edges(rank)) rs->gram_[a][b] = rs->gram_[b][a] = -1;
    std::set<std::vector<int>> seen;
    std::queue<std::vector<int>> q;
    for (int i = 0; i < rank; ++i) {
      std::vector<int> v(rank, 0);
      v[i] = 1;
      simple.push_back(v);
      seen.insert(v);
      q.push(v);
    }
    while (!q.empty()) {
      auto b = q.front();
      q.pop();
      for (int i = 0; i < rank; ++i) {
        if (rs->inner(b, simple[i]) != -1) continue;
        auto c = b;
        c[i] += 1;
        if (seen.insert(c).second) q.push(c);
      }
    }
    pos.assign(seen.begin(), seen.end());
  }
  std::sort(pos.begin(), pos.end());
  rs->npos_ = static_cast<int>(pos.size());
  rs->coords_ = pos;
  for (auto& v : pos) {
    auto w = v;
    for (auto& x : w) x = -x;
    rs->coords_.push_back(w);
  }
  rs->finish();
  for (auto& s : simple) rs->simple_.push_back(rs->find(s));
  // simple coefficients
  int n = rs->size();
  rs->scoef_.assign(n, std::vector<int>(rank, 0));
  for (int r = 0; r < n; ++r) {
    const auto& v = rs->coords_[r];
    auto& c = rs->scoef_[r];
    if (f == Family::E) {
      c = v;
    } else if (f == Family::A) {
      int s = 0;
      for (int k = 0; k < rank; ++k) c[k] = (s += v[k]);
    } else {
      int s = 0;
      for (int k = 0; k < rank - 2; ++k) c[k] = (s += v[k]);
      s += v[rank - 2];
      c[rank - 1] = (s + v[rank - 1]) / 2;
      c[rank - 2] = (s - v[rank - 1]) / 2;
    }
  }
  return rs;
}

RootSystemPtr RootSystem::parse_name(std::string_view name) {
  if (name.size() < 2) throw ConfigError("bad system name: " + std::string(name));
  Family f;
  switch (name[0]) {
    case 'A': f = Family::A; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    default: throw ConfigError("bad system name: " + std::string(name));
  }
  int rank = 0;
  for (char ch : name.substr(1)) {
    if (ch < '0' || ch > '9') throw ConfigError("bad system name: " + std::string(name));
    rank = rank * 10 + (ch - '0');
  }
  return build(f, rank);
}

int RootSystem::inner(const std::vector<int>& x, const std::vector<int>& y) const {
  int s = 0;
  if (family_ == Family::E) {
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) s += x[i] * gram_[i][j] * y[j];
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  }
  return s;
}

void RootSystem::finish() {
  int n = size();
  pair_.assign(n * n, 0);
  sum_.assign(n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      pair_[a * n + b] = inner(coords_[a], coords_[b]);
      if (pair_[a * n + b] == -1) {
        auto v = coords_[a];
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += coords_[b][i];
        sum_[a * n + b] = find(v);
      }
    }
}

Root RootSystem::find(const std::vector<int>& v) const {
  // positives are sorted, negatives mirror them
  if (v.size() != coords_[0].size()) return -1;
  auto pb = coords_.begin();
  auto pe = coords_.begin() + npos_;
  auto it = std::lower_bound(pb, pe, v);
  if (it != pe && *it == v) return static_cast<Root>(it - pb);
  auto w = v;
  for (auto& x : w) x = -x;
  it = std::lower_bound(pb, pe, w);
  if (it != pe && *it == w) return static_cast<Root>(it - pb) + npos_;
  return -1;
}

int RootSystem::height(Root r) const {
  const auto& c = scoef_[r];
  return std::accumulate(c.begin(), c.end(), 0);
}

std::vector<std::vector<int>> RootSystem::cartan() const {
  std::vector<std::vector<int>> c(rank_, std::vector<int>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) c[i][j] = pairing(simple_[i], simple_[j]);
  return c;
}

std::string RootSystem::name() const {
  const char* f = family_ == Family::A ? "A" : family_ == Family::D ? "D" : "E";
  return f + std::to_string(rank_);
}

std::string RootSystem::format(Root r) const {
  std::ostringstream os;
  if (family_ == Family::E) {
    os << "s[";
    const auto& c = scoef_[r];
    for (int i = 0; i < rank_; ++i) os << (i ? "," : "") << c[i];
    os << "]";
    return os.str();
  }
  os << "[";
  bool first = true;
  const auto& v = coords_[r];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    os << (first ? "" : ",") << (v[i] < 0 ? "-" : "") << (i + 1);
    first = false;
  }
  os << "]";
  return os.str();
}

Root RootSystem::parse_root(std::string_view text) const {
  auto fail = [&](const std::string& why) -> Root {
    throw NoSuchRoot(why + ": " + std::string(text) + " in " + name());
  };
  std::string t;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') t += ch;
  bool simple_form = !t.empty() && t[0] == 's';
  if (simple_form) t = t.substr(1);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') return fail("malformed root");
  std::vector<int> nums;
  std::string body = t.substr(1, t.size() - 2);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) return fail("malformed root");
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (...) {
      return fail("malformed root");
    }
    if (used != tok.size()) return fail("malformed root");
    nums.push_back(x);
  }
  std::vector<int> v(dim(), 0);
  if (simple_form) {
    if (static_cast<int>(nums.size()) != rank_) return fail("wrong number of simple coefficients");
    for (int k = 0; k < rank_; ++k)
      for (int i = 0; i < dim(); ++i) v[i] += nums[k] * coords_[simple_[k]][i];
  } else {
    if (family_ == Family::E) return fail("E roots use s[...] syntax");
    for (int x : nums) {
      int i = x < 0 ? -x : x;
      if (i < 1 || i > dim()) return fail("coordinate out of range");
      v[i - 1] += x < 0 ? -1 : 1;
    }
  }
  Root r = find(v);
  if (r < 0) return fail("not a root");
  return r;
}

RootSubset RootSystem::all() const {
  RootSubset s(size());
  for (int i = 0; i < size(); ++i) s.add(i);
  return s;
}

RootSubset RootSystem::positives() const {
  RootSubset s(size());
  for (int i = 0; i < npos_; ++i) s.add(i);
  return s;
}

AngleResult angle_class(const RootSystem& phi, Root a, Root b) {
  if (a == b) return {Angle::equal, -1};
  if (a == phi.neg(b)) return {Angle::negative, -1};
  int p = phi.pairing(a, b);
  if (p == -1) return {Angle::sum_is_root, phi.sum(a, b)};
  if (p == 1) return {Angle::difference_is_root, phi.diff(a, b)};
  return {Angle::orthogonal, -1};
}

ZSets z_sets(const RootSystem& phi, Root a) {
  ZSets z{RootSubset(phi.size()), RootSubset(phi.size())};
  for (int b = 0; b < phi.size(); ++b) {
    int p = phi.pairing(a, b);
    if (p > 0) z.plus.add(b);
    if (p == 0) z.zero.add(b);
  }
  return z;
}

SubsetClass classify_subset(const RootSystem& phi, const RootSubset& s) {
  SubsetClass c;
  int n = phi.size();
  c.closed = true;
  for (int a = 0; a < n && c.closed; ++a) {
    if (!s.has(a)) continue;
    for (int b = 0; b < n; ++b) {
      if (!s.has(b)) continue;
      Root r = phi.sum(a, b);
      if (r >= 0 && !s.has(r)) {
        c.closed = false;
        break;
      }
    }
  }
  bool covers = true;
  bool sym = true;
  bool disjoint = true;
  for (int a = 0; a < n; ++a) {
    bool in = s.has(a);
    bool neg_in = s.has(phi.neg(a));
    if (!in && !neg_in) covers = false;
    if (in && !neg_in) sym = false;
    if (in && neg_in) disjoint = false;
  }
  c.parabolic = c.closed && covers;
  c.symmetric = c.closed && sym;
  c.special = c.closed && disjoint;
  if (c.parabolic) {
    c.special_part = RootSubset(n);
    for (int a = 0; a < n; ++a)
      if (s.has(a) && !s.has(phi.neg(a))) c.special_part.add(a);
  }
  return c;
}

RootSubset d_operator(const RootSystem& phi, const RootSubset& u) {
  RootSubset out = u;
  auto m = u.members();
  for (Root a : m)
    for (Root b : m) {
      Root r = phi.diff(a, b);
      if (r >= 0) out.add(r);
    }
  return out;
}

namespace {

struct EmbedSearch {
  const RootSystem& phi;
  std::vector<std::vector<int>> cartan;
  std::vector<Root> order;
  std::vector<Root> chosen;
  const RootSystem& target;
  const std::vector<Root>& must;
  std::optional<std::vector<Root>> result;

  bool extend(int k) {
    if (k == static_cast<int>(cartan.size())) return check();
    for (Root r : order) {
      bool ok = true;
      for (int j = 0; j < k && ok; ++j)
        if (chosen[j] == r || phi.pairing(r, chosen[j]) != cartan[k][j]) ok = false;
      if (!ok) continue;
      chosen[k] = r;
      if (extend(k + 1)) return true;
    }
    return false;
  }

  bool check() {
    int dim = phi.dim();
    std::vector<Root> img(target.size());
    std::vector<bool> used(phi.size(), false);
    for (int t = 0; t < target.size(); ++t) {
      std::vector<int> v(dim, 0);
      const auto& c = target.simple_coeffs(t);
      for (std::size_t k = 0; k < c.size(); ++k)
        for (int i = 0; i < dim; ++i) v[i] += c[k] * phi.coords(chosen[k])[i];
      Root r = phi.find(v);
      if (r < 0 || used[r]) return false;
      used[r] = true;
      img[t] = r;
    }
    for (Root m : must)
      if (!used[m]) return false;
    result = img;
    return true;
  }
};

}  // namespace

std::optional<std::vector<Root>> find_embedding(const RootSystem& phi, Family target, int target_rank,
                                                const std::vector<Root>& must_contain) {
  if (target_rank > phi.rank()) return std::nullopt;
  RootSystemPtr t;
  try {
    t = RootSystem::build(target, target_rank);
  } catch (const ConfigError&) {
    return std::nullopt;
  }
  EmbedSearch s{phi, t->cartan(), {}, std::vector<Root>(target_rank, -1), *t, must_contain, std::nullopt};
  // simple roots first so the identity embedding is found first
  std::vector<bool> seen(phi.size(), false);
  for (Root r : phi.simple()) {
    s.order.push_back(r);
    seen[r] = true;
  }
  for (Root r = 0; r < phi.size(); ++r)
    if (!seen[r]) s.order.push_back(r);
  s.extend(0);
  return s.result;
}

Root acute_companion(const RootSystem& phi, Root a, int nth) {
  for (Root b = 0; b < phi.size(); ++b) {
    if (b == a || phi.pairing(a, b) != 1) continue;
    if (nth-- == 0) return b;
  }
  throw NoSuchRoot("no acute companion for " + phi.format(a));
}

Root obtuse_pair(const RootSystem& phi, Root a, Root g) {
  for (Root b = 0; b < phi.size(); ++b)
    if (phi.pairing(a, b) == -1 && phi.pairing(g, b) == -1) return b;
  throw NoSuchRoot("no root obtuse to both " + phi.format(a) + " and " + phi.format(g));
}

}  // namespace stk
