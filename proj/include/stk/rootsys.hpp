#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stk {

enum class Family { A, D, E };

// index into RootSystem::roots
using Root = int;

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

struct RootSubset {
  std::vector<bool> bits;

  RootSubset() = default;
  explicit RootSubset(int n) : bits(n, false) {}
  bool has(Root r) const { return bits[r]; }
  void add(Root r) { bits[r] = true; }
  int count() const;
  std::vector<Root> members() const;
  bool operator==(const RootSubset&) const = default;
};

class RootSystem {
 public:
  static RootSystemPtr build(Family f, int rank);
  // "A2", "D5", "E8"
  static RootSystemPtr parse_name(std::string_view name);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int size() const { return static_cast<int>(coords_.size()); }
  int num_positive() const { return npos_; }
  std::string name() const;

  const std::vector<int>& coords(Root r) const { return coords_[r]; }
  int dim() const { return static_cast<int>(coords_[0].size()); }
  Root neg(Root r) const { return r < npos_ ? r + npos_ : r - npos_; }
  bool is_positive(Root r) const { return r < npos_; }
  int pairing(Root b, Root a) const { return pair_[b * size() + a]; }
  // index of a+b, or -1
  Root sum(Root a, Root b) const { return sum_[a * size() + b]; }
  Root diff(Root a, Root b) const { return sum(a, neg(b)); }
  Root find(const std::vector<int>& coords) const;

  const std::vector<Root>& simple() const { return simple_; }
  const std::vector<int>& simple_coeffs(Root r) const { return scoef_[r]; }
  int height(Root r) const;
  std::vector<std::vector<int>> cartan() const;

  std::string format(Root r) const;
  // "[1,-2]", "[-1,-2]", "s[1,0,1]"; throws NoSuchRoot
  Root parse_root(std::string_view text) const;
  RootSubset all() const;
  RootSubset positives() const;

 private:
  RootSystem() = default;
  void finish();
  int inner(const std::vector<int>& x, const std::vector<int>& y) const;

  Family family_ = Family::A;
  int rank_ = 0;
  int npos_ = 0;
  std::vector<std::vector<int>> coords_;
  std::vector<std::vector<int>> scoef_;
  std::vector<Root> simple_;
  std::vector<int> pair_;
  std::vector<Root> sum_;
  std::vector<std::vector<int>> gram_;  // E family only
};

enum class Angle { equal, negative, sum_is_root, difference_is_root, orthogonal };

struct AngleResult {
  Angle kind;
  Root root = -1;
};

AngleResult angle_class(const RootSystem& phi, Root a, Root b);

struct ZSets {
  RootSubset plus;
  RootSubset zero;
};

ZSets z_sets(const RootSystem& phi, Root a);

struct SubsetClass {
  bool closed = false;
  bool parabolic = false;
  bool symmetric = false;
  bool special = false;
  RootSubset special_part;
};

SubsetClass classify_subset(const RootSystem& phi, const RootSubset& s);
RootSubset d_operator(const RootSystem& phi, const RootSubset& u);

// result[i] is the image of root i of the target system
std::optional<std::vector<Root>> find_embedding(const RootSystem& phi, Family target, int target_rank,
                                                const std::vector<Root>& must_contain);

// nth root (by index) with <a,b> = 1, b != a
Root acute_companion(const RootSystem& phi, Root a, int nth = 0);
// lowest root b with <a,b> = <g,b> = -1
Root obtuse_pair(const RootSystem& phi, Root a, Root g);

}  // namespace stk
