#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stk/matrix.hpp"
#include "stk/rootsys.hpp"

namespace stk {

enum class ConstantSource { from_representation, extraspecial };

// N(a,b) in {+1,-1} for every summable pair, 0 elsewhere
class ConstantTable {
 public:
  ConstantTable(RootSystemPtr phi, ConstantSource src);

  const RootSystem& phi() const { return *phi_; }
  const RootSystemPtr& phi_ptr() const { return phi_; }
  ConstantSource source() const { return src_; }
  int operator()(Root a, Root b) const { return n_[a * phi_->size() + b]; }
  void set(Root a, Root b, int v) { n_[a * phi_->size() + b] = static_cast<int8_t>(v); }
  // one line per ordered summable pair
  std::string dump() const;
  bool operator==(const ConstantTable& o) const { return n_ == o.n_; }

 private:
  RootSystemPtr phi_;
  ConstantSource src_;
  std::vector<int8_t> n_;
};

using ConstantTablePtr = std::shared_ptr<const ConstantTable>;

// reads N off [x_a(1), x_b(1)] = x_{a+b}(N); throws ConfigError for E
ConstantTable derive_constants(const MatrixRep& rep);
ConstantTable extraspecial_constants(RootSystemPtr phi);

struct VerifyReport {
  bool pass = true;
  int pairs = 0;
  int triples = 0;
  std::vector<std::string> violations;
};

// antisymmetry/negation/cyclic identities on pairs, cocycle identity on A3-type triples
VerifyReport verify(const ConstantTable& t);

// signs c (indexed by root, c[-r] = c[r]) with c_a c_b c_{a+b} from(a,b) = to(a,b), if any
std::optional<std::vector<int>> sign_rescaling(const ConstantTable& from, const ConstantTable& to);
ConstantTable rescale(const ConstantTable& t, const std::vector<int>& c);

// table of the subsystem obtained by reading t along emb (emb[i] = image of subsystem root i)
ConstantTable restrict_table(const ConstantTable& t, RootSystemPtr sub, const std::vector<Root>& emb);

struct CompatibilityResult {
  bool equal = false;
  std::optional<std::vector<int>> rescaling;
};

CompatibilityResult check_compatibility(const ConstantTable& big, const ConstantTable& sub,
                                        const std::vector<Root>& emb);

// representation-derived for A/D, extraspecial for E; cached per system
ConstantTablePtr standard_constants(const RootSystemPtr& phi);

}  // namespace stk
