#include "doctest.h"
#include "stk/constants.hpp"
#include "stk/error.hpp"

using namespace stk;

namespace {

// independent readout: 3x3 commutator of unipotents computed by hand-rolled products
int a2_commutator_entry() {
  long m1[3][3] = {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  long m2[3][3] = {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}};
  long m3[3][3] = {{1, -1, 0}, {0, 1, 0}, {0, 0, 1}};
  long m4[3][3] = {{1, 0, 0}, {0, 1, -1}, {0, 0, 1}};
  auto mul = [](long (*x)[3], long (*y)[3], long (*z)[3]) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        z[i][j] = 0;
        for (int k = 0; k < 3; ++k) z[i][j] += x[i][k] * y[k][j];
      }
  };
  long t1[3][3], t2[3][3], t3[3][3];
  mul(m1, m2, t1);
  mul(t1, m3, t2);
  mul(t2, m4, t3);
  return static_cast<int>(t3[0][2]);
}

}  // namespace

TEST_CASE("matrix representation preserves the form") {
  for (auto name : {"D4", "D5"}) {
    auto phi = RootSystem::parse_name(name);
    auto rep = MatrixRep::build(phi);
    auto F = rep->form();
    for (Root r = 0; r < phi->size(); ++r) {
      auto g = rep->int_gen(r, 3);
      CHECK(g.transpose() * F * g == F);
      bool upper = true;
      for (const auto& e : rep->pattern(r)) upper = upper && e.row < e.col;
      CHECK(upper == phi->is_positive(r));
    }
  }
  CHECK_THROWS_AS(MatrixRep::build(RootSystem::parse_name("E6")), ConfigError);
}

TEST_CASE("representation constants: A2 examples") {
  auto phi = RootSystem::parse_name("A2");
  auto t = derive_constants(*MatrixRep::build(phi));
  Root a = phi->parse_root("[1,-2]"), b = phi->parse_root("[2,-3]");
  CHECK(t(a, b) == a2_commutator_entry());
  CHECK(t(a, b) == 1);
  CHECK(t(b, a) == -1);
}

TEST_CASE("representation constants verify") {
  for (auto name : {"A3", "A4", "D4", "D5"}) {
    CAPTURE(name);
    auto phi = RootSystem::parse_name(name);
    auto t = derive_constants(*MatrixRep::build(phi));
    auto rep = verify(t);
    CHECK(rep.pass);
    CHECK(rep.pairs > 0);
    CHECK(rep.triples > 0);
  }
  auto d4 = RootSystem::parse_name("D4");
  auto t = derive_constants(*MatrixRep::build(d4));
  int v = t(d4->parse_root("[1,-2]"), d4->parse_root("[2,3]"));
  CHECK((v == 1 || v == -1));
}

TEST_CASE("flipped sign is reported") {
  auto phi = RootSystem::parse_name("A3");
  auto t = derive_constants(*MatrixRep::build(phi));
  Root a = phi->parse_root("[1,-2]"), b = phi->parse_root("[2,-3]");
  t.set(a, b, -t(a, b));
  auto rep = verify(t);
  CHECK(!rep.pass);
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.find("N(a,b) = -N(b,a) fails at ([1,-2], [2,-3])") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("extraspecial constants") {
  for (auto name : {"A2", "A4", "D4", "D5", "E6", "E7", "E8"}) {
    CAPTURE(name);
    auto phi = RootSystem::parse_name(name);
    auto t = extraspecial_constants(phi);
    CHECK(verify(t).pass);
    for (Root a = 0; a < phi->size(); ++a)
      for (Root b = 0; b < phi->size(); ++b) {
        Root s = phi->sum(a, b);
        if (s >= 0) CHECK(t(a, b) == t(b, phi->neg(s)));
      }
  }
  auto phi = RootSystem::parse_name("A2");
  auto rep = derive_constants(*MatrixRep::build(phi));
  auto ex = extraspecial_constants(phi);
  auto c = sign_rescaling(ex, rep);
  REQUIRE(c.has_value());
  CHECK(rescale(ex, *c) == rep);
}

TEST_CASE("rescaling between representation and extraspecial tables") {
  for (auto name : {"A4", "D4", "D5"}) {
    CAPTURE(name);
    auto phi = RootSystem::parse_name(name);
    auto rep = derive_constants(*MatrixRep::build(phi));
    auto ex = extraspecial_constants(phi);
    auto c = sign_rescaling(ex, rep);
    REQUIRE(c.has_value());
    CHECK(rescale(ex, *c) == rep);
  }
}

TEST_CASE("subsystem compatibility") {
  auto d5 = RootSystem::parse_name("D5");
  auto a4 = RootSystem::parse_name("A4");
  auto emb = find_embedding(*d5, Family::A, 4, {});
  REQUIRE(emb.has_value());
  auto big = standard_constants(d5);
  auto sub = standard_constants(a4);
  auto res = check_compatibility(*big, *sub, *emb);
  CHECK((res.equal || res.rescaling.has_value()));
  CHECK(verify(restrict_table(*big, a4, *emb)).pass);
  CHECK(standard_constants(d5) == big);
}

TEST_CASE("dump format") {
  auto phi = RootSystem::parse_name("A2");
  auto d = standard_constants(phi)->dump();
  CHECK(d.find("N([1,-2], [2,-3]) = +1") != std::string::npos);
  CHECK(d.find("N([2,-3], [1,-2]) = -1") != std::string::npos);
}
