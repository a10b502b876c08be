#include <algorithm>
#include <set>

#include "doctest.h"
#include "stk/error.hpp"
#include "stk/rootsys.hpp"

using namespace stk;

namespace {

// independent count: E8 lattice vectors of norm 2 in the doubled even coordinate model
int count_e8_doubled() {
  int n = 0;
  // integer part: +-e_i +- e_j
  n += 4 * 28;
  // half-integer part: all signs with an even number of minus signs
  for (int mask = 0; mask < 256; ++mask)
    if (__builtin_popcount(mask) % 2 == 0) ++n;
  return n;
}

}  // namespace

TEST_CASE("root counts") {
  CHECK(RootSystem::build(Family::A, 2)->size() == 6);
  CHECK(RootSystem::build(Family::D, 4)->size() == 24);
  CHECK(RootSystem::build(Family::E, 6)->size() == 72);
  CHECK(RootSystem::build(Family::E, 7)->size() == 126);
  CHECK(RootSystem::build(Family::E, 8)->size() == count_e8_doubled());
  CHECK_THROWS_AS(RootSystem::build(Family::D, 2), ConfigError);
  CHECK_THROWS_AS(RootSystem::build(Family::E, 5), ConfigError);
}

TEST_CASE("root system invariants") {
  for (auto name : {"A1", "A3", "A4", "D4", "D5", "E6", "E7", "E8"}) {
    auto phi = RootSystem::parse_name(name);
    CAPTURE(name);
    int pos = 0;
    for (Root r = 0; r < phi->size(); ++r) {
      CHECK(phi->pairing(r, r) == 2);
      CHECK(phi->pairing(r, phi->neg(r)) == -2);
      CHECK(phi->neg(phi->neg(r)) == r);
      if (phi->is_positive(r)) {
        ++pos;
        CHECK(phi->height(r) > 0);
      } else {
        CHECK(phi->height(r) < 0);
      }
      for (Root s = 0; s < phi->size(); ++s) {
        int p = phi->pairing(r, s);
        CHECK(p == phi->pairing(s, r));
        CHECK((phi->sum(r, s) >= 0) == (p == -1));
        if (s != r && s != phi->neg(r)) CHECK((phi->diff(r, s) >= 0) == (p == 1));
      }
    }
    CHECK(pos * 2 == phi->size());
    CHECK(static_cast<int>(phi->simple().size()) == phi->rank());
  }
}

TEST_CASE("pairing examples") {
  auto a2 = RootSystem::build(Family::A, 2);
  CHECK(a2->pairing(a2->simple()[0], a2->simple()[1]) == -1);
  auto d4 = RootSystem::build(Family::D, 4);
  CHECK(d4->pairing(d4->parse_root("[1,-2]"), d4->parse_root("[1,2]")) == 0);
}

TEST_CASE("angle classes") {
  auto a3 = RootSystem::build(Family::A, 3);
  Root a = a3->parse_root("[1,-2]");
  auto r = angle_class(*a3, a, a3->parse_root("[2,-3]"));
  CHECK(r.kind == Angle::sum_is_root);
  CHECK(a3->format(r.root) == "[1,-3]");
  r = angle_class(*a3, a, a3->parse_root("[1,-3]"));
  CHECK(r.kind == Angle::difference_is_root);
  CHECK(r.root == a3->parse_root("[3,-2]"));
  auto d4 = RootSystem::build(Family::D, 4);
  CHECK(angle_class(*d4, d4->parse_root("[1,-2]"), d4->parse_root("[3,-4]")).kind == Angle::orthogonal);
  CHECK(angle_class(*d4, 0, 0).kind == Angle::equal);
  CHECK(angle_class(*d4, 0, d4->neg(0)).kind == Angle::negative);
}

TEST_CASE("root syntax round trip") {
  for (auto name : {"A3", "D5", "E6"}) {
    auto phi = RootSystem::parse_name(name);
    for (Root r = 0; r < phi->size(); ++r) CHECK(phi->parse_root(phi->format(r)) == r);
  }
  auto a3 = RootSystem::build(Family::A, 3);
  CHECK_THROWS_AS(a3->parse_root("[1,5]"), NoSuchRoot);
  CHECK_THROWS_AS(a3->parse_root("[1,2]"), NoSuchRoot);
  CHECK(a3->parse_root("s[1,1,0]") == a3->parse_root("[1,-3]"));
}

TEST_CASE("z sets") {
  auto d4 = RootSystem::build(Family::D, 4);
  Root a = d4->parse_root("[1,-2]");
  // independent enumeration of +-e_i +- e_j
  int zero = 0, plus = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          int v[4] = {0, 0, 0, 0};
          v[i] = si;
          v[j] = sj;
          int ip = v[0] - v[1];
          if (ip == 0) ++zero;
          if (ip > 0) ++plus;
        }
  auto z = z_sets(*d4, a);
  CHECK(z.zero.count() == zero);
  CHECK(z.plus.count() == plus);
  CHECK(zero == 6);
  CHECK(plus == 9);
  for (auto name : {"A4", "D5", "E6"}) {
    auto phi = RootSystem::parse_name(name);
    for (Root r = 0; r < phi->size(); ++r) {
      auto zs = z_sets(*phi, r);
      CHECK(zs.plus.has(r));
      CHECK(!zs.plus.has(phi->neg(r)));
      CHECK(!zs.zero.has(phi->neg(r)));
      int obtuse = 0;
      for (Root s = 0; s < phi->size(); ++s) obtuse += phi->pairing(r, s) == -1;
      CHECK(zs.plus.count() + zs.zero.count() + 1 + obtuse == phi->size());
    }
  }
}

TEST_CASE("subset classification") {
  auto a2 = RootSystem::build(Family::A, 2);
  auto c = classify_subset(*a2, a2->positives());
  CHECK(c.closed);
  CHECK(c.parabolic);
  CHECK(c.special_part == a2->positives());
  c = classify_subset(*a2, a2->all());
  CHECK(c.parabolic);
  CHECK(c.symmetric);
  CHECK(c.special_part.count() == 0);
  RootSubset s(a2->size());
  Root a1 = a2->simple()[0];
  s.add(a1);
  s.add(a2->neg(a1));
  c = classify_subset(*a2, s);
  CHECK(c.closed);
  CHECK(c.symmetric);
  CHECK(!c.parabolic);
}

TEST_CASE("d operator") {
  auto a2 = RootSystem::build(Family::A, 2);
  Root a1 = a2->simple()[0], a2r = a2->simple()[1];
  RootSubset u(a2->size());
  u.add(a1);
  CHECK(d_operator(*a2, u) == u);
  u.add(a2->sum(a1, a2r));
  auto d = d_operator(*a2, u);
  CHECK(d.count() == 4);
  CHECK(d.has(a2r));
  CHECK(d.has(a2->neg(a2r)));
  auto d4 = RootSystem::build(Family::D, 4);
  CHECK(d_operator(*d4, d4->all()) == d4->all());
  // standard parabolics: drop one simple root from the Levi part
  for (Root drop : d4->simple()) {
    RootSubset p(d4->size());
    int k = static_cast<int>(std::find(d4->simple().begin(), d4->simple().end(), drop) - d4->simple().begin());
    for (Root r = 0; r < d4->size(); ++r)
      if (d4->is_positive(r) || d4->simple_coeffs(r)[k] == 0) p.add(r);
    auto cls = classify_subset(*d4, p);
    REQUIRE(cls.parabolic);
    CHECK(d_operator(*d4, d_operator(*d4, cls.special_part)) == d4->all());
  }
}

TEST_CASE("embeddings") {
  auto d5 = RootSystem::build(Family::D, 5);
  auto e = find_embedding(*d5, Family::A, 4, {d5->parse_root("[1,-2]"), d5->parse_root("[2,-3]")});
  REQUIRE(e.has_value());
  auto a4 = RootSystem::build(Family::A, 4);
  for (Root x = 0; x < a4->size(); ++x)
    for (Root y = 0; y < a4->size(); ++y) CHECK(d5->pairing((*e)[x], (*e)[y]) == a4->pairing(x, y));
  auto d4 = RootSystem::build(Family::D, 4);
  CHECK(!find_embedding(*d4, Family::A, 4, {d4->parse_root("[3,-4]"), d4->parse_root("[3,4]")}).has_value());
  auto id = find_embedding(*a4, Family::A, 4, {a4->simple()[0]});
  REQUIRE(id.has_value());
  for (Root r = 0; r < a4->size(); ++r) CHECK((*id)[r] == r);
}

TEST_CASE("companions") {
  auto a2 = RootSystem::build(Family::A, 2);
  Root a1 = a2->simple()[0];
  CHECK(acute_companion(*a2, a1) == a2->sum(a1, a2->simple()[1]));
  auto d4 = RootSystem::build(Family::D, 4);
  Root b = obtuse_pair(*d4, d4->parse_root("[1,-2]"), d4->parse_root("[3,-4]"));
  CHECK(d4->format(b) == "[2,-3]");
  auto a1s = RootSystem::build(Family::A, 1);
  CHECK_THROWS_AS(acute_companion(*a1s, 0), NoSuchRoot);
}
