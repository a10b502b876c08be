#include <random>

#include "doctest.h"
#include "stk/enumerate.hpp"
#include "stk/error.hpp"
#include "stk/oracle.hpp"

using namespace stk;

namespace {

// |SL_n(F_q)| computed from the product formula
int64_t sl_order(int n, int64_t q) {
  int64_t r = 1, qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  int64_t qi = 1;
  for (int i = 0; i < n; ++i) {
    r *= qn - qi;
    qi *= q;
  }
  return r / (q - 1);
}

Word random_const_word(const ContextPtr& ctx, std::mt19937_64& rng, int len) {
  auto elems = finite_elements(ctx->ring);
  std::uniform_int_distribution<int> root(0, ctx->phi->size() - 1), e(0, static_cast<int>(elems.size()) - 1);
  Word w(ctx);
  for (int i = 0; i < len; ++i) w *= gen(ctx, root(rng), elems[e(rng)]);
  return w;
}

}  // namespace

TEST_CASE("coset enumeration orders") {
  auto f2 = EnumHandle::build(Context::make("A2", Ring::make("", "", "F2")));
  CHECK(f2->order() == 168);
  CHECK(f2->order() == sl_order(3, 2));
  auto f3 = EnumHandle::build(Context::make("A2", Ring::make("", "", "F3")));
  CHECK(f3->order() == 5616);
  CHECK(f3->order() == sl_order(3, 3));
  CHECK_THROWS_AS(EnumHandle::build(Context::make("A2", Ring::make("", "", "F3")), {1000}), CosetLimitExceeded);
  CHECK_THROWS_AS(EnumHandle::build(Context::make("A2", Ring::make("a", "", "F3"))), ConfigError);
}

TEST_CASE("enumeration agrees with matrices") {
  for (auto base : {"F2", "F3"}) {
    CAPTURE(base);
    auto ctx = Context::make("A2", Ring::make("", "", base));
    auto h = EnumHandle::build(ctx);
    std::mt19937_64 rng(17);
    int equal_pairs = 0;
    for (int i = 0; i < 100; ++i) {
      auto u = random_const_word(ctx, rng, 6);
      // half the pairs are equal by construction through a relation
      Word v = i % 2 ? random_const_word(ctx, rng, 6) : u * comm(gen(ctx, 0, ctx->ring->one()), gen(ctx, 3 % ctx->phi->size(), ctx->ring->one())) *
                                                        comm(gen(ctx, 0, ctx->ring->one()), gen(ctx, 3 % ctx->phi->size(), ctx->ring->one())).inverse();
      bool m = equal(u, v) == Verdict::proved_equal;
      bool e = enum_equal(*h, u, v);
      CHECK(m == e);
      if (e) ++equal_pairs;
    }
    CHECK(equal_pairs >= 50);
  }
}

TEST_CASE("Z/4 has a nontrivial central symbol") {
  auto ctx = Context::make("A2", Ring::make("", "", "Z4"));
  auto h = EnumHandle::build(ctx);
  // kernel of SL_3(Z/4) -> SL_3(F_2) has order 2^8
  CHECK(h->order() == 2 * sl_order(3, 2) * 256);
  auto two = ctx->ring->constant(2);
  auto ds = ds_elem(ctx, 0, two, two);
  CHECK(eval(ds) == identity_matrix(ctx));
  CHECK(!enum_equal(*h, ds, identity(ctx)));
  CHECK(enum_equal(*h, ds * ds, identity(ctx)));
}
