#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "stk/word.hpp"

namespace stk {

struct EnumOptions {
  int64_t coset_limit = 1000000;
};

// regular coset table of St(phi, k) for a small finite base ring k, from the full R1-R3 presentation
class EnumHandle {
 public:
  static std::shared_ptr<const EnumHandle> build(const ContextPtr& ctx, const EnumOptions& opt = {});

  const ContextPtr& ctx() const { return ctx_; }
  int64_t order() const { return order_; }
  int num_generators() const { return ngen_; }
  int num_relators() const { return nrel_; }
  int64_t cosets_defined() const { return defined_; }
  // coset reached from the identity coset along w
  int64_t trace(const Word& w) const;

 private:
  int column(const Letter& l) const;
  int64_t rep(int64_t c) const;

  ContextPtr ctx_;
  int ngen_ = 0;
  int nrel_ = 0;
  int64_t order_ = 0;
  int64_t defined_ = 0;
  std::vector<int64_t> key_;  // per ring element, by code
  std::map<int64_t, int> elem_of_code_;
  int nelem_ = 0;
  std::vector<int32_t> table_;
  std::vector<int32_t> parent_;
};

using EnumHandlePtr = std::shared_ptr<const EnumHandle>;

// exact equality in the Steinberg group
bool enum_equal(const EnumHandle& h, const Word& a, const Word& b);

}  // namespace stk
