// Runs the ten acceptance criteria and prints one line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "stk/constants.hpp"
#include "stk/enumerate.hpp"
#include "stk/error.hpp"
#include "stk/relgrp.hpp"
#include "stk/torsor.hpp"

using namespace stk;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  int checks = 0;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

bool proved(const Word& a, const Word& b) { return equal(a, b, Strategy::symbolic()) == Verdict::proved_equal; }
bool not_refuted(const Word& a, const Word& b, uint64_t seed) {
  return equal(a, b, Strategy::randomized(12, seed)) != Verdict::refuted;
}

Root with_pairing(const RootSystem& phi, Root a, int p, int nth = 0) {
  for (Root b = 0; b < phi.size(); ++b)
    if (b != a && b != phi.neg(a) && phi.pairing(a, b) == p && nth-- == 0) return b;
  return -1;
}

RingElem tpow(const RingPtr& R, const RingElem& t, int k) {
  return k >= 0 ? t.pow(k) : unit_inverse(t).pow(-k);
}

// C1: structure constant identities, exhaustively
void c1(Outcome& o) {
  for (const char* sys : {"A4", "D5", "E6"}) {
    auto phi = RootSystem::parse_name(sys);
    VerifyReport r = verify(*standard_constants(phi));
    o.check(r.pass && r.pairs > 0 && r.triples > 0, std::string(sys) + " table");
    VerifyReport e = verify(extraspecial_constants(phi));
    o.check(e.pass, std::string(sys) + " extraspecial table");
    o.note << sys << ": " << r.pairs << " pairs, " << r.triples << " triples; ";
  }
}

// C2: defining relations symbolically, form preservation
void c2(Outcome& o) {
  for (const char* sys : {"A3", "D4"}) {
    auto ctx = Context::make(sys, Ring::make("a,b", "m,n"));
    auto rels = instantiate_relations(ctx, {});
    int n = 0;
    for (const auto& r : rels) {
      o.check(proved(r.lhs, r.rhs), std::string(sys) + " " + r.tag());
      ++n;
    }
    o.note << sys << ": " << n << " relation instances; ";
  }
  std::mt19937_64 rng(2);
  for (const char* sys : {"D4", "D5"}) {
    auto ctx = Context::make(sys, Ring::make("a", "m"));
    auto& R = ctx->ring;
    std::uniform_int_distribution<int> root(0, ctx->phi->size() - 1), c(-3, 3), k(-2, 2);
    for (int i = 0; i < 50; ++i) {
      Word w(ctx);
      for (int j = 0; j < 8; ++j)
        w *= gen(ctx, root(rng), (R->var("a") * c(rng) + R->var("m") * c(rng)) * R->X().pow(k(rng) + 2) * R->Xinv().pow(2));
      o.check(preserves_form(ctx, eval(w)), std::string(sys) + " form");
    }
  }
  o.note << "100 random words preserve the form";
}

// C3: semisimple relations for every pair of roots
void c3(Outcome& o) {
  for (const char* sys : {"A3", "D4"}) {
    auto R = Ring::make("t,u", "m");
    R->declare(R->var("t").num());
    R->declare(R->var("u").num());
    auto ctx = Context::make(sys, R);
    const auto& phi = *ctx->phi;
    RingElem t = R->var("t"), u = R->var("u");
    int n = 0;
    for (Root a = 0; a < phi.size(); ++a) {
      Word ha = h_elem(ctx, a, t);
      o.check(proved(ha.inverse(), h_elem(ctx, phi.neg(a), t)), "h-inv");
      for (Root b = 0; b < phi.size(); ++b) {
        int p = phi.pairing(b, a);
        RingElem tp = tpow(R, t, p);
        o.check(proved(lconj(ha, gen(ctx, b, u)), gen(ctx, b, tp * u)), "conj-h-x " + phi.format(a) + phi.format(b));
        o.check(proved(lconj(ha, h_elem(ctx, b, u)), h_elem(ctx, b, tp * u) * h_elem(ctx, b, tp).inverse()),
                "conj-h-h " + phi.format(a) + phi.format(b));
        ++n;
      }
    }
    o.note << sys << ": " << n << " pairs; ";
  }
}

// C4: symbols at matrix level and in the coset enumeration over F3; orders
void c4(Outcome& o) {
  {
    auto R = Ring::make("s,t,a", "m");
    R->declare(R->var("s").num());
    R->declare(R->var("t").num());
    auto ctx = Context::make("A2", R);
    Word id = identity(ctx);
    o.check(proved(sym_elem(ctx, 0, R->var("s"), R->var("t")), id), "symbol image");
    o.check(proved(sym_elem(ctx, 0, R->X(), R->one() + R->var("a") * R->var("m")), id), "symbol {X, 1+am} image");
    o.check(proved(ds_elem(ctx, 0, R->var("a"), R->var("m")), id), "Dennis-Stein image");
  }
  auto f2 = EnumHandle::build(Context::make("A2", Ring::make("", "", "F2")));
  o.check(f2->order() == 168, "order over F2");
  auto ctx = Context::make("A2", Ring::make("", "", "F3"));
  auto f3 = EnumHandle::build(ctx);
  o.check(f3->order() == 5616, "order over F3");
  auto& R = ctx->ring;
  std::vector<RingElem> units = {R->one(), R->constant(2)};
  std::vector<RingElem> all = finite_elements(R);
  auto both = [&](const Word& x, const Word& y, const std::string& what) {
    o.check(enum_equal(*f3, x, y), what + " (enumeration)");
    o.check(proved(x, y), what + " (matrix)");
  };
  auto sym = [&](const RingElem& a, const RingElem& b) { return sym_elem(ctx, 0, a, b); };
  int n = 0;
  for (const auto& s : units)
    for (const auto& t : units) {
      // Dennis-Stein from Steinberg and back
      both(sym(s, t), ds_elem(ctx, 0, -s, (R->one() - t) * unit_inverse(s)), "symbol as Dennis-Stein");
      o.check(!enum_equal(*f3, sym(s, t), identity(ctx)) || enum_equal(*f3, sym(t, s), identity(ctx)), "sanity");
      both(sym(s, t), sym(t, s).inverse(), "antisymmetry");
      both(sym(s, t).inverse(), sym(unit_inverse(s), t), "inverse in the first slot");
      both(sym(s, t).inverse(), sym(s, unit_inverse(t)), "inverse in the second slot");
      for (const auto& v : units) both(sym(s, t * v), sym(s, t) * sym(s, v), "bimultiplicativity");
      n += 5;
    }
  for (const auto& a : all)
    for (const auto& b : all) {
      RingElem c = R->one() + a * b;
      if (!a.is_unit() || !c.is_unit()) continue;
      both(ds_elem(ctx, 0, a, b), sym(-a, c), "Dennis-Stein as symbol");
      ++n;
    }
  o.note << "orders " << f2->order() << " and " << f3->order() << "; " << n << " symbol identities";
}

// C5: z- and c-relations in every configuration
void c5(Outcome& o) {
  for (const char* sys : {"A3", "D4"}) {
    auto ctx = Context::make(sys, Ring::make("a,b", "m,n"));
    const auto& phi = *ctx->phi;
    auto& R = ctx->ring;
    RingElem s = R->var("m"), t = R->var("n"), xi = R->var("a"), eta = R->var("b");
    int z[6] = {}, c[5] = {};
    for (Root a = 0; a < phi.size(); ++a)
      for (Root b = 0; b < phi.size(); ++b) {
        int p = phi.pairing(a, b);
        bool distinct = b != a && b != phi.neg(a);
        std::vector<int> zparts, cparts;
        if (b == a) zparts = {1};
        if (distinct && p == -1) zparts = {2, 5}, cparts = {1, 4};
        if (distinct && p == 1) zparts = {3}, cparts = {2};
        if (distinct && p == 0) zparts = {4}, cparts = {3};
        for (int part : zparts) {
          auto d = zrels_decompose(ctx, part, a, b, s, xi, eta);
          o.check(proved(d.lhs, d.rhs_word()), std::string(sys) + " " + d.id);
          ++z[part];
        }
        for (int part : cparts) {
          auto d = crels_decompose(ctx, part, a, b, s, t, xi);
          o.check(proved(d.lhs, d.rhs_word()), std::string(sys) + " " + d.id);
          ++c[part];
        }
      }
    for (int k = 1; k <= 5; ++k) o.check(z[k] > 0, "z part present");
    for (int k = 1; k <= 4; ++k) o.check(c[k] > 0, "c part present");
    o.note << sys << ": z " << z[1] << "/" << z[2] << "/" << z[3] << "/" << z[4] << "/" << z[5] << ", c " << c[1]
           << "/" << c[2] << "/" << c[3] << "/" << c[4] << "; ";
  }
}

// C6: degree-lowering chains, reduce_degree, companion independence
void c6(Outcome& o) {
  {
    auto ctx = Context::make("D4", Ring::make("a,b", "m"));
    const auto& phi = *ctx->phi;
    auto& R = ctx->ring;
    int n = 0;
    for (Root a : {0, 5}) {
      Root g = with_pairing(phi, a, 0);
      for (auto [d, e] : std::vector<std::pair<int, int>>{
               {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {0, 0}, {0, 1}, {0, 2}, {-1, 0}, {-1, 1}, {-2, 2}, {-2, 0}}) {
        auto ch = superfluous_chain(ctx, a, g, R->var("a"), R->var("b"), d, e);
        for (std::size_t i = 0; i + 1 < ch.steps.size(); ++i)
          o.check(proved(ch.steps[i], ch.steps[i + 1]),
                  "chain d=" + std::to_string(d) + " e=" + std::to_string(e) + " step " + std::to_string(i));
        ++n;
      }
    }
    o.note << n << " chains; ";
  }
  for (const char* sys : {"A4", "D5"}) {
    auto ctx = Context::make(sys, Ring::make("a,b", "m"));
    auto& R = ctx->ring;
    std::uniform_int_distribution<int> deg(-1, 4), c(-2, 2);
    for (uint64_t seed = 1; seed <= 32; ++seed) {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> root(0, ctx->phi->size() - 1);
      Word w(ctx);
      for (int i = 0; i < 6; ++i) {
        int d = deg(rng);
        RingElem co = d >= 0 ? (R->var("a") * c(rng) + R->var("b") + R->constant(c(rng))) * R->Xinv().pow(d)
                             : R->var("m") * R->X().pow(-d) * c(rng);
        w *= gen(ctx, root(rng), co);
      }
      Word r0 = reduce_degree(w, 1, 0), r1 = reduce_degree(w, 1, 1);
      bool low = true;
      for (const auto& l : r0.letters()) low = low && degree_of(l) <= 1;
      o.check(low, std::string(sys) + " reduced degree");
      o.check(not_refuted(w, r0, seed), std::string(sys) + " reduce_degree image");
      o.check(not_refuted(r0, r1, seed), std::string(sys) + " companion independence");
    }
  }
  o.note << "32 seeds on A4 and D5";
}

// C7: P0 conjugation decompositions, p-functional, kab split
void c7(Outcome& o) {
  const std::vector<std::pair<std::string, std::vector<GenClass>>> expected = {
      {"eq3-1", {GenClass::P4, GenClass::P1, GenClass::P1}},
      {"eq3-2", {GenClass::P4, GenClass::P1, GenClass::P2}},
      {"eq3-3", {GenClass::P4, GenClass::P1, GenClass::P1}},
      {"eq:zalpha",
       {GenClass::P1, GenClass::P1, GenClass::P2, GenClass::P5, GenClass::P1, GenClass::P2, GenClass::P1, GenClass::P4}}};
  for (const char* sys : {"A3", "D4"}) {
    auto ctx = Context::make(sys, Ring::make("a,b", "m,n"));
    auto& R = ctx->ring;
    ConjData d{R->var("m"), R->var("n") + R->var("m") * R->X(), R->var("a") + R->var("b") * R->X()};
    for (Root a = 0; a < ctx->phi->size(); ++a)
      for (const auto& [id, classes] : expected) {
        auto dec = conj_p0_decompose(ctx, id, a, conj_p0_companion(*ctx->phi, id, a), d);
        std::vector<GenClass> got;
        for (const auto& f : dec.rhs) got.push_back(f.cls);
        o.check(got == classes, std::string(sys) + " " + id + " classes");
        o.check(proved(dec.lhs, dec.rhs_word()), std::string(sys) + " " + id);
      }
  }
  auto ctx = Context::make("D4", Ring::make("a,b", "m,n,k"));
  const auto& phi = *ctx->phi;
  auto& R = ctx->ring;
  RingElem X = R->X(), m = R->var("m"), n = R->var("n"), k = R->var("k"), a = R->var("a"), b = R->var("b");
  Root al = 0, na = phi.neg(al), be = with_pairing(phi, al, 1);
  Root delta = default_delta(phi, al, be);
  o.check(p_functional(ctx, al, {Factor::z(na, X * (m + n * X), a)}) == m, "p example 1");
  o.check(p_functional(ctx, al, {Factor::z(be, X * m, a)}).is_zero(), "p example 2");
  o.check(p_functional(ctx, al, {Factor::z(na, X * m, a), Factor::c(delta, n, X * b), Factor::z(na, X * k, b)}) == m + k,
          "p example 3");
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> root(0, phi.size() - 1), c(-2, 2), kind(0, 4);
  auto random_admissible = [&](int len) {
    std::vector<Factor> out;
    for (int i = 0; i < len; ++i) {
      RingElem f = m * c(rng) + n * X * c(rng);
      RingElem xi = R->constant(c(rng)) + a * c(rng) + b * X * c(rng);
      if (kind(rng) == 0)
        out.push_back(Factor::c(delta, m * c(rng), X * (a + R->constant(c(rng)))));
      else
        out.push_back(Factor::z(root(rng), X * f, xi));
    }
    return out;
  };
  for (int i = 0; i < 20; ++i) {
    auto g = random_admissible(5), h = random_admissible(3);
    auto gh = g;
    gh.insert(gh.end(), h.begin(), h.end());
    o.check(p_functional(ctx, al, gh) == p_functional(ctx, al, g) + p_functional(ctx, al, h), "additivity");
    o.check(p_functional(ctx, al, g) == p_image_value(ctx, al, eval(product(ctx, g))), "p against the image");
  }
  for (int i = 0; i < 100; ++i) {
    auto sp = kab_split(ctx, random_admissible(6), al, be);
    SymMat g0 = eval(product(ctx, sp.g0));
    o.check(p_image_value(ctx, al, g0).is_zero() && p_image_value(ctx, be, g0).is_zero(), "kab residual");
  }
  o.note << "4 decompositions on all roots of A3, D4; 100 kab splits";
}

struct SmapSetup {
  ContextPtr ctx;
  Root al, be;
  RingElem X, a, b, s, r, m, n;
};

SmapSetup smap_setup(const char* sys) {
  auto ctx = Context::make(sys, Ring::make("a,b,s,r", "m,n"));
  auto& R = ctx->ring;
  return {ctx,        0,          with_pairing(*ctx->phi, 0, 1), R->X(),     R->var("a"), R->var("b"),
          R->var("s"), R->var("r"), R->var("m"),                  R->var("n")};
}

// C8: S-map lemmas, symbolic D4 and randomized D5
void c8(Outcome& o) {
  for (const char* sys : {"D4", "D5"}) {
    bool symbolic = std::string(sys) == "D4";
    auto eq = [&](const Word& x, const Word& y) { return symbolic ? proved(x, y) : not_refuted(x, y, 7); };
    SmapSetup S = smap_setup(sys);
    auto& ctx = S.ctx;
    auto& R = ctx->ring;
    const auto& phi = *ctx->phi;
    Root al = S.al, be = S.be, na = phi.neg(al);
    std::string tag = std::string(sys) + " ";
    // multiplicativity
    std::vector<Factor> f1 = {Factor::z(na, S.X * S.m, S.a), Factor::z(be, S.X * S.n, S.b + S.X * S.a)};
    std::vector<Factor> f2 = {Factor::z(na, S.X * S.n, S.b), Factor::z(phi.neg(be), S.X * S.m, S.a)};
    RingElem m1 = p_functional(ctx, al, f1), m2 = p_functional(ctx, al, f2);
    RingElem s2 = S.s * unit_inverse(R->one() + S.s * m1);
    o.check(eq(s_map(ctx, al, S.s, product(ctx, f1) * product(ctx, f2), m1 + m2),
               s_map(ctx, al, S.s, product(ctx, f1), m1) * s_map(ctx, al, s2, product(ctx, f2), m2)),
            tag + "multiplicativity");
    // Tulenbaev chain including the symbol steps
    auto tc = tulenbaev_chain(ctx, al, S.s, S.m);
    for (std::size_t i = 1; i < tc.size(); ++i) o.check(eq(tc[i - 1], tc[i]), tag + "Tulenbaev step " + std::to_string(i));
    // coset of S(a, g) h^-1
    std::vector<Factor> f = {Factor::z(na, S.X * S.m, S.a), Factor::z(be, S.X * S.n, S.b), Factor::x(na, S.n * S.X)};
    RingElem mv = p_functional(ctx, al, f);
    RingElem c = R->one() + S.s * mv;
    Word w = s_map(ctx, al, S.s, product(ctx, f), mv) * h_elem(ctx, al, c).inverse();
    o.check(p_image_value(ctx, al, eval(w)) == mv * unit_inverse(c), tag + "coset shift");
    // sharp
    std::vector<Factor> g = {Factor::z(na, S.X * S.m, S.a), Factor::z(phi.neg(be), S.X * S.n, S.b),
                             Factor::z(phi.neg(phi.diff(al, be)), S.X * S.m, S.r)};
    KabSplit k = kab_split(ctx, g, al, be);
    auto sc = sr_sharp_chain(ctx, al, be, S.s, product(ctx, k.g0), k.m, k.m_prime);
    for (std::size_t i = 1; i < sc.size(); ++i) o.check(eq(sc[i - 1], sc[i]), tag + "sharp step " + std::to_string(i));
    Word sp = sr_sharp_product(ctx, al, be, S.s, product(ctx, g), k.m, k.m_prime);
    o.check(p_image_value(ctx, be, eval(sp)) == k.m_prime * unit_inverse(R->one() + S.s * k.m), tag + "sharp coset");
    // obtuse
    auto oc = sr_obtuse_chain(ctx, al, be, S.s, S.r, S.m, S.n);
    for (std::size_t i = 1; i < oc.size(); ++i) o.check(eq(oc[i - 1], oc[i]), tag + "obtuse step " + std::to_string(i));
    int eps = (*ctx->N)(al, phi.neg(be));
    Word g2 = gen(ctx, phi.neg(be), S.n * S.X) * gen(ctx, na, S.m * S.X);
    Word op = sr_obtuse_product(ctx, al, be, S.s, S.r, g2, S.m, S.n);
    o.check(p_image_value(ctx, al, eval(op)) == (S.m - eps * (S.r * S.n)) * unit_inverse(R->one() + S.s * S.m),
            tag + "obtuse coset");
  }
  o.note << "D4 symbolic, D5 randomized";
}

RingElem rand_a(const ContextPtr& ctx, std::mt19937_64& rng) {
  const auto& R = ctx->ring;
  std::uniform_int_distribution<int> d(0, 8);
  RingElem out = R->constant(d(rng));
  if (R->nil_var() >= 0) out += R->var("eps") * d(rng) + R->var("eps").pow(2) * d(rng);
  return out;
}

RingElem rand_m(const ContextPtr& ctx, std::mt19937_64& rng) {
  const auto& R = ctx->ring;
  std::uniform_int_distribution<int> d(0, 8);
  if (R->nil_var() >= 0) return R->var("eps") * (d(rng) % 3) + R->var("eps").pow(2) * d(rng);
  return R->constant(3 * d(rng));
}

RingElem rand_graded(const ContextPtr& ctx, std::mt19937_64& rng, int d) {
  return d >= 0 ? rand_a(ctx, rng) * ctx->ring->Xinv().pow(d) : rand_m(ctx, rng) * ctx->ring->X().pow(-d);
}

Word rand_b_word(const ContextPtr& ctx, std::mt19937_64& rng, int len, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> root(0, ctx->phi->size() - 1), deg(lo, hi);
  Word w(ctx);
  for (int i = 0; i < len; ++i) w *= gen(ctx, root(rng), rand_graded(ctx, rng, deg(rng)));
  return w;
}

Root pick(const RootSystem& phi, std::mt19937_64& rng, Root a, int pairing) {
  std::vector<Root> c;
  for (Root b = 0; b < phi.size(); ++b)
    if (b != a && b != phi.neg(a) && phi.pairing(a, b) == pairing) c.push_back(b);
  return c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)];
}

// relation lemmas on one triple; coefficient generator is g(degree)
void relation_lemmas(Outcome& o, const ContextPtr& ctx, const Triple& t, std::mt19937_64& rng,
                     const std::function<RingElem(int)>& coeff, const std::string& tag) {
  const auto& phi = *ctx->phi;
  Root a = std::uniform_int_distribution<int>(0, phi.size() - 1)(rng);
  auto rel = [&](const Word& l, const Word& r, const std::string& what) {
    o.check(triple_equiv(act(l, t), act(r, t)), tag + what);
  };
  for (int d : {-2, -1, 0, 1}) {
    RingElem x = coeff(d), y = coeff(d);
    rel(gen(ctx, a, x) * gen(ctx, a, y), gen(ctx, a, x + y), "R1_" + std::to_string(d));
  }
  for (int d : {-2, -1, 0}) {
    for (int p : {1, 0}) {
      Root b = pick(phi, rng, a, p);
      rel(comm(gen(ctx, a, coeff(d)), gen(ctx, b, coeff(1))), identity(ctx), (p ? "R3angle_" : "R3perp_") + std::to_string(d));
    }
  }
  for (int d : {-2, -1, 0}) {
    Root b = pick(phi, rng, a, -1);
    RingElem x = coeff(d), y = coeff(1);
    rel(comm(gen(ctx, a, x), gen(ctx, b, y)), gen(ctx, phi.sum(a, b), x * y * (*ctx->N)(a, b)),
        "R2_" + std::to_string(d));
  }
  Root b = pick(phi, rng, a, 1);
  rel(comm(gen(ctx, a, coeff(1)), gen(ctx, b, coeff(1))), identity(ctx), "R3angle_1,1");
}

// C9: torsor relation lemmas, action properties, the Dennis-Stein remark
void c9(Outcome& o) {
  int triples = 0;
  for (auto [sys, base] : {std::pair{"D4", "Z9"}, std::pair{"A4", "F3[eps]/eps^3"}}) {
    auto ctx = Context::make(sys, Ring::make("", "", base));
    std::mt19937_64 rng(29);
    for (int i = 0; i < 25; ++i) {
      Triple t = act(rand_b_word(ctx, rng, 8), base_triple(ctx));
      relation_lemmas(o, ctx, t, rng, [&](int d) { return rand_graded(ctx, rng, d); }, std::string(sys) + " ");
      ++triples;
      // action properties
      Word w = rand_b_word(ctx, rng, 6);
      o.check(act(w, t).G == eval(w) * t.G, "g-component equivariance");
      Word h1 = rand_b_word(ctx, rng, 4, 0, 2), h = rand_b_word(ctx, rng, 4, 0, 2);
      RingElem u = ctx->ring->one() + rand_m(ctx, rng);
      o.check(triple_equiv(act(h1, from_vt({identity(ctx), h, u})), from_vt({identity(ctx), h1 * h, u})),
              "negative-part action");
      TripleT tt = to_vt(t);
      o.check(triple_equiv(from_vt(tt), t), "translation round trip");
      RingElem a = rand_a(ctx, rng), m = rand_m(ctx, rng);
      Root r = std::uniform_int_distribution<int>(0, ctx->phi->size() - 1)(rng);
      Word ds = ds_elem(ctx, r, a, m).inverse() * ds_elem(ctx, r, a * ctx->ring->Xinv(), m * ctx->ring->X());
      o.check(triple_equiv(act(ds, base_triple(ctx)),
                           Triple::make(identity(ctx), identity(ctx), ctx->ring->one() + a * m)),
              "Dennis-Stein remark");
    }
  }
  // one symbolic instance of each relation lemma
  auto ctx = Context::make("D4", Ring::make("a,b", "m,n"));
  auto& R = ctx->ring;
  RingElem X = R->X(), Xi = R->Xinv();
  Triple t = act(gen(ctx, 3, R->var("a") * Xi) * gen(ctx, 14, R->var("n") * X) * gen(ctx, 7, R->var("b")),
                 base_triple(ctx));
  std::mt19937_64 rng(31);
  int var = 0;
  relation_lemmas(o, ctx, t, rng,
                  [&](int d) {
                    ++var;
                    RingElem av = R->var(var % 2 ? "a" : "b"), mv = R->var(var % 2 ? "m" : "n");
                    return d >= 0 ? av * Xi.pow(d) : mv * X.pow(-d);
                  },
                  "symbolic D4 ");
  auto sa = R->var("a"), sm = R->var("m");
  Word ds = ds_elem(ctx, 0, sa, sm).inverse() * ds_elem(ctx, 0, sa * Xi, sm * X);
  o.check(triple_equiv(act(ds, base_triple(ctx)), Triple::make(identity(ctx), identity(ctx), R->one() + sa * sm)),
          "symbolic Dennis-Stein remark");
  o.note << triples << " random triples plus a symbolic D4 triple";
}

// C10: factorization over B and the pullback square
void c10(Outcome& o) {
  int fac = 0, pb = 0, refused = 0;
  for (const char* sys : {"D4", "D5"}) {
    auto ctx = Context::make(sys, Ring::make("", "", "Z9"));
    auto& R = ctx->ring;
    const auto& phi = *ctx->phi;
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
      BFactorization f = factorize_b(rand_b_word(ctx, rng, 8));
      o.check(f.ok(), std::string(sys) + " factorization certificate");
      ++fac;
    }
    std::uniform_int_distribution<int> root(0, phi.size() - 1);
    for (int i = 0; i < 50; ++i) {
      Word g0(ctx);
      for (int j = 0; j < 6; ++j) g0 *= gen(ctx, root(rng), rand_a(ctx, rng));
      Root a = root(rng), b = pick(phi, rng, a, -1);
      RingElem x = rand_a(ctx, rng), y = rand_a(ctx, rng);
      int n = (*ctx->N)(a, b);
      // trivial-image tails over A[X] and over A[X^-1]
      Word tp = comm(gen(ctx, a, x * R->X()), gen(ctx, b, y)) * gen(ctx, phi.sum(a, b), -(n * (x * y * R->X())));
      Word tm = comm(gen(ctx, a, x * R->Xinv()), gen(ctx, b, y)) * gen(ctx, phi.sum(a, b), -(n * (x * y * R->Xinv())));
      Word gp = g0 * tp, gm = tm * g0;
      PullbackResult r = pullback_check(gp, gm);
      o.check(r.ok && r.constant && eval(r.g0) == eval(g0), std::string(sys) + " pullback");
      ++pb;
      bool threw = false;
      try {
        pullback_check(gp, gm * gen(ctx, a, R->X().pow(0) * R->Xinv()));
      } catch (const ImageMismatch&) {
        threw = true;
      }
      o.check(threw, "mismatched pair refused");
      refused += threw;
    }
  }
  o.note << fac << " factorizations, " << pb << " pullbacks, " << refused << " mismatches refused";
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    double limit_s;
    void (*run)(Outcome&);
  };
  const Criterion all[] = {
      {"C1", "structure constants", 10, c1},        {"C2", "defining relations", 60, c2},
      {"C3", "semisimple relations", 60, c3},       {"C4", "symbols and orders", 120, c4},
      {"C5", "z- and c-relations", 120, c5},        {"C6", "graded presentation", 120, c6},
      {"C7", "P0 decompositions", 120, c7},         {"C8", "S-map lemmas", 180, c8},
      {"C9", "torsor relations", 600, c9},          {"C10", "factorization and pullback", 600, c10},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = s <= c.limit_s;
    bool ok = o.pass && in_time;
    failed += !ok;
    std::printf("%-4s %s  %-28s %8.2fs (limit %4.0fs)  %d checks  %s%s\n", c.id, ok ? "PASS" : "FAIL", c.name, s,
                c.limit_s, o.checks, in_time ? "" : "over time; ", o.note.str().c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
