#include "stk/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "stk/constants.hpp"
#include "stk/dsl.hpp"
#include "stk/enumerate.hpp"
#include "stk/gauss.hpp"
#include "stk/error.hpp"
#include "stk/relgrp.hpp"
#include "stk/torsor.hpp"

namespace stk {

using nlohmann::json;

namespace {

std::string str_field(const json& j, const char* key, const std::string& dflt = "") {
  if (!j.contains(key)) return dflt;
  if (!j.at(key).is_string()) throw ConfigError(std::string("field '") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

std::string req(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
  return str_field(j, key);
}

std::vector<std::string> names(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  const json& v = j.at(key);
  if (v.is_string()) {
    std::vector<std::string> out;
    std::stringstream ss(v.get<std::string>());
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) out.push_back(item);
    return out;
  }
  return v.get<std::vector<std::string>>();
}

struct Runner {
  const Suite& suite;
  ContextPtr ctx;
  EnumHandlePtr enm;
  uint64_t seed;

  Strategy strategy() const {
    if (suite.oracle.strategy == "randomized") return Strategy::randomized(suite.oracle.seeds, seed);
    if (suite.oracle.strategy == "symbolic") return Strategy::symbolic();
    return {Strategy::Kind::automatic, suite.oracle.seeds, seed};
  }

  Word word(const json& b, const char* key) const {
    Word w = parse_word(ctx, req(b, key));
    if (!suite.ring.laurent)
      for (const auto& l : w.letters())
        if (!l.is_diag() && !l.coeff.is_zero() && l.coeff.min_x() < 0)
          throw ConfigError("X^-1 used in a polynomial-ring suite");
    return w;
  }
  RingElem elem(const json& b, const char* key, const char* dflt = "0") const {
    return parse_ring(ctx->ring, str_field(b, key, dflt));
  }
  Root root(const json& b, const char* key) const { return ctx->phi->parse_root(req(b, key)); }
  Root root_or(const json& b, const char* key, Root dflt) const { return b.contains(key) ? root(b, key) : dflt; }
  RootSubset subset(const json& b, const char* key) const {
    RootSubset out(ctx->phi->size());
    for (const auto& r : names(b, key)) out.add(ctx->phi->parse_root(r));
    return out;
  }

  // "x[1,-2](f)", "z[1,-2](f, xi)", "c[1,-2](s, t)"
  Factor factor(const std::string& text) const {
    auto open = text.find('('), close = text.rfind(')');
    if (text.size() < 4 || open == std::string::npos || close != text.size() - 1)
      throw ConfigError("bad factor '" + text + "'");
    std::string head = text.substr(0, open), args = text.substr(open + 1, close - open - 1);
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : args) {
      depth += ch == '(' ? 1 : ch == ')' ? -1 : 0;
      if (ch == ',' && depth == 0) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
    char shape = head[0];
    Root r = ctx->phi->parse_root(head.substr(1));
    auto arg = [&](std::size_t i) { return parse_ring(ctx->ring, parts.at(i)); };
    if (shape == 'x' && parts.size() == 1) return Factor::x(r, arg(0));
    if (shape == 'z' && parts.size() == 2) return Factor::z(r, arg(0), arg(1));
    if (shape == 'c' && parts.size() == 2) return Factor::c(r, arg(0), arg(1));
    throw ConfigError("bad factor '" + text + "'");
  }
  std::vector<Factor> factors(const json& b, const char* key) const {
    if (!b.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
    std::vector<Factor> out;
    for (const auto& f : b.at(key)) out.push_back(factor(f.get<std::string>()));
    return out;
  }

  // verdict from a matrix comparison, plus the enumeration oracle when asked for
  void compare(const Word& lhs, const Word& rhs, CaseResult& r) const {
    const std::string& mode = suite.oracle.mode;
    bool matrix_ok = true;
    if (mode != "enum") {
      Verdict v = equal(lhs, rhs, strategy());
      matrix_ok = v != Verdict::refuted;
      r.details = "matrix: " + verdict_str(v);
      r.level = "image";
    }
    bool enum_ok = true;
    if (mode != "matrix") {
      enum_ok = enum_equal(*enm, lhs, rhs);
      r.details += std::string(r.details.empty() ? "" : "; ") + "enumeration: " + (enum_ok ? "equal" : "different");
      if (enum_ok) r.level = "steinberg";
    }
    r.verdict = matrix_ok && enum_ok ? "pass" : "refuted";
  }

  void equality(const SuiteCase& c, CaseResult& r) const { compare(word(c.body, "lhs"), word(c.body, "rhs"), r); }

  void membership(const SuiteCase& c, CaseResult& r) const {
    std::string p = req(c.body, "predicate");
    SymMat m = eval(c.body.contains("lhs") ? word(c.body, "lhs") : product(ctx, factors(c.body, "factors")));
    bool ok;
    if (p == "entries_in_B") {
      ok = stk::membership(m, Predicate::entries_in_B);
    } else if (p == "constant_in_X") {
      ok = stk::membership(m, Predicate::constant_in_X);
    } else if (p == "identity_mod_M") {
      ok = stk::membership(m, Predicate::identity_mod_M);
    } else if (p == "p_value") {
      RingElem got = p_image_value(ctx, root(c.body, "root"), m);
      RingElem want = elem(c.body, "value");
      ok = got == want;
      r.details = "p-value " + got.str();
    } else if (p == "p_functional") {
      Root a = root(c.body, "root");
      RingElem got = p_functional(ctx, a, factors(c.body, "factors"));
      ok = got == elem(c.body, "value") && got == p_image_value(ctx, a, m);
      r.details = "p-value " + got.str();
    } else if (p == "s_coset") {
      // S(a, g) h^-1(1 + am) has p-value m / (1 + am)
      Root a = root(c.body, "root");
      auto g = factors(c.body, "factors");
      RingElem mv = p_functional(ctx, a, g), s = elem(c.body, "a");
      RingElem u = ctx->ring->one() + s * mv;
      Word w = s_map(ctx, a, s, product(ctx, g), mv) * h_elem(ctx, a, u).inverse();
      RingElem got = p_image_value(ctx, a, eval(w));
      ok = got == mv * unit_inverse(u);
      r.details = "p-value " + got.str();
    } else {
      throw ConfigError("unknown predicate '" + p + "'");
    }
    r.level = "image";
    r.verdict = ok ? "pass" : "refuted";
    if (r.details.empty()) r.details = p;
  }

  void decomposition(const SuiteCase& c, CaseResult& r) const {
    const json& b = c.body;
    const auto& phi = *ctx->phi;
    std::string op = req(b, "op");
    Root a = root(b, "alpha");
    Decomposition d;
    if (op == "zrels" || op == "crels") {
      int part = b.at("part").get<int>();
      Root be = root_or(b, "beta", op == "zrels" ? zrels_companion(phi, part, a) : crels_companion(phi, part, a));
      d = op == "zrels" ? zrels_decompose(ctx, part, a, be, elem(b, "s"), elem(b, "xi"), elem(b, "eta"))
                        : crels_decompose(ctx, part, a, be, elem(b, "s"), elem(b, "t"), elem(b, "xi"));
    } else if (op == "conj_p0") {
      std::string which = req(b, "which");
      Root be = root_or(b, "beta", conj_p0_companion(phi, which, a));
      d = conj_p0_decompose(ctx, which, a, be, {elem(b, "m"), elem(b, "f"), elem(b, "xi")});
    } else if (op == "gauss") {
      Word w = word(b, "lhs");
      compare(w, elementary_factor(ctx, eval(w)), r);
      return;
    } else if (op == "kdecomp1") {
      auto zs = factors(b, "factors");
      KDecomp k = kdecomp1(ctx, zs);
      compare(product(ctx, zs), k.xm_part * k.comm_part * k.base_part, r);
      r.details += "; base part constant: ";
      bool constant = stk::membership(eval(k.base_part), Predicate::constant_in_X);
      r.details += constant ? "yes" : "no";
      if (!constant) r.verdict = "refuted";
      return;
    } else if (op == "kab_split") {
      Root be = root(b, "beta");
      auto g = factors(b, "factors");
      KabSplit k = kab_split(ctx, g, a, be);
      SymMat g0 = eval(product(ctx, k.g0));
      bool zero = p_image_value(ctx, a, g0).is_zero() && p_image_value(ctx, be, g0).is_zero();
      Word tail = gen(ctx, phi.neg(a), k.m * ctx->ring->X()) * gen(ctx, phi.neg(be), k.m_prime * ctx->ring->X());
      compare(product(ctx, g), product(ctx, k.g0) * tail, r);
      r.details += "; m = " + k.m.str() + ", m' = " + k.m_prime.str() + "; residual p-values " + (zero ? "0" : "nonzero");
      if (!zero) r.verdict = "refuted";
      return;
    } else if (op == "classify") {
      bool k_family = b.contains("beta");
      Root be = k_family ? root(b, "beta") : -1;
      Root delta = k_family ? root_or(b, "delta", default_delta(phi, a, be)) : -1;
      std::string got;
      for (const auto& f : factors(b, "factors"))
        got += (got.empty() ? "" : ",") + class_str(k_family ? classify_k(ctx, a, be, delta, f) : classify_p(ctx, a, f));
      std::string want;
      for (const auto& s : b.at("classes")) want += (want.empty() ? "" : ",") + s.get<std::string>();
      r.level = "image";
      r.verdict = got == want ? "pass" : "refuted";
      r.details = "classes " + got + (got == want ? "" : " (expected " + want + ")");
      return;
    } else if (op == "s_mult") {
      auto g1 = factors(b, "factors"), g2 = factors(b, "factors2");
      RingElem s = elem(b, "a"), m1 = p_functional(ctx, a, g1), m2 = p_functional(ctx, a, g2);
      RingElem s2 = s * unit_inverse(ctx->ring->one() + s * m1);
      compare(s_map(ctx, a, s, product(ctx, g1) * product(ctx, g2), m1 + m2),
              s_map(ctx, a, s, product(ctx, g1), m1) * s_map(ctx, a, s2, product(ctx, g2), m2), r);
      return;
    } else {
      throw ConfigError("unknown decomposition '" + op + "'");
    }
    compare(d.lhs, d.rhs_word(), r);
    std::string classes;
    for (const auto& f : d.rhs) classes += (classes.empty() ? "" : ",") + class_str(f.cls);
    r.details += "; id " + d.id + "; classes " + classes;
    if (b.contains("classes") && r.verdict == "pass") {
      std::string want;
      for (const auto& s : b.at("classes")) want += (want.empty() ? "" : ",") + s.get<std::string>();
      if (want != classes) {
        r.verdict = "refuted";
        r.details += " (expected " + want + ")";
      }
    }
  }

  void chain(const SuiteCase& c, CaseResult& r) const {
    const json& b = c.body;
    std::string op = req(b, "op");
    Root a = op == "reduce_degree" ? -1 : root(b, "alpha");
    std::vector<Word> steps;
    if (op == "tulenbaev") {
      steps = tulenbaev_chain(ctx, a, elem(b, "a"), elem(b, "m"));
    } else if (op == "sr_sharp") {
      steps = sr_sharp_chain(ctx, a, root(b, "beta"), elem(b, "a"), parse_word(ctx, str_field(b, "g0", "1")),
                             elem(b, "m"), elem(b, "mp"));
    } else if (op == "sr_obtuse") {
      steps = sr_obtuse_chain(ctx, a, root(b, "beta"), elem(b, "a"), elem(b, "b"), elem(b, "m"), elem(b, "mp"));
    } else if (op == "superfluous") {
      steps = superfluous_chain(ctx, a, root(b, "gamma"), elem(b, "a"), elem(b, "b"), b.at("d").get<int>(),
                                b.at("e").get<int>())
                  .steps;
    } else if (op == "reduce_degree") {
      // input, rewrite with the first acute companion, rewrite with the second
      Word w = word(b, "lhs");
      int n = b.value("n", 1);
      steps = {w, reduce_degree(w, n, 0), reduce_degree(w, n, 1)};
    } else {
      throw ConfigError("unknown chain '" + op + "'");
    }
    r.verdict = "pass";
    r.level = "image";
    for (std::size_t i = 1; i < steps.size(); ++i) {
      Verdict v = equal(steps[i - 1], steps[i], strategy());
      if (v == Verdict::refuted) {
        r.verdict = "refuted";
        r.details = "step " + std::to_string(i) + " differs from step " + std::to_string(i - 1);
        return;
      }
    }
    r.details = std::to_string(steps.size()) + " steps equal";
  }

  void torsor(const SuiteCase& c, CaseResult& r) const {
    const json& b = c.body;
    std::string op = req(b, "op");
    r.level = "image";
    Triple start = act(parse_word(ctx, str_field(b, "start", "1")), base_triple(ctx));
    bool ok;
    if (op == "relation") {
      ok = triple_equiv(act(word(b, "lhs"), start), act(word(b, "rhs"), start));
    } else if (op == "class") {
      const json& t = b.at("expect");
      Triple want = Triple::make(parse_word(ctx, str_field(t, "g", "1")), parse_word(ctx, str_field(t, "h", "1")),
                                 elem(t, "u", "1"));
      ok = triple_equiv(act(word(b, "lhs"), start), want);
    } else if (op == "factorize") {
      BFactorization f = factorize_b(word(b, "lhs"));
      ok = f.ok();
      r.details = "p " + std::to_string(f.p.size()) + " letters, h " + std::to_string(f.h.size()) + " letters, u " +
                  f.u.str();
    } else if (op == "pullback") {
      bool want_ok = str_field(b, "expect", "ok") == "ok";
      try {
        PullbackResult p = pullback_check(word(b, "plus"), word(b, "minus"));
        ok = want_ok && p.ok && p.constant;
        r.details = "g0 = " + print_word(p.g0);
      } catch (const ImageMismatch& e) {
        ok = !want_ok;
        r.details = std::string("mismatch: ") + e.what();
      }
    } else if (op == "act_relative") {
      auto p1 = factors(b, "factors");
      TripleT tt = to_vt(start);
      TripleT moved = act_relative(p1, tt);
      ok = triple_equiv(from_vt(moved), from_vt({product(ctx, p1) * tt.p, tt.h, tt.u}));
    } else if (op == "translation") {
      ok = triple_equiv(from_vt(to_vt(start)), start);
    } else {
      throw ConfigError("unknown torsor operation '" + op + "'");
    }
    r.verdict = ok ? "pass" : "refuted";
  }

  void constants(const SuiteCase& c, CaseResult& r) const {
    std::string src = str_field(c.body, "source", "rep");
    ConstantTable t = src == "extraspecial" ? extraspecial_constants(ctx->phi) : *standard_constants(ctx->phi);
    VerifyReport v = verify(t);
    r.level = "image";
    r.verdict = v.pass ? "pass" : "refuted";
    r.details = std::to_string(v.pairs) + " pairs, " + std::to_string(v.triples) + " triples";
  }

  void order(const SuiteCase& c, CaseResult& r) const {
    auto h = enm ? enm : EnumHandle::build(ctx);
    int64_t want = c.body.at("expect").get<int64_t>();
    r.level = "steinberg";
    r.verdict = h->order() == want ? "pass" : "refuted";
    r.details = "order " + std::to_string(h->order());
  }

  void roots(const SuiteCase& c, CaseResult& r) const {
    const json& b = c.body;
    const auto& phi = *ctx->phi;
    std::string op = req(b, "op");
    const json& e = b.at("expect");
    bool ok;
    if (op == "z_sets") {
      ZSets z = z_sets(phi, root(b, "alpha"));
      ok = z.plus.count() == e.at("plus").get<int>() && z.zero.count() == e.at("zero").get<int>();
      r.details = "plus " + std::to_string(z.plus.count()) + ", zero " + std::to_string(z.zero.count());
    } else if (op == "classify") {
      SubsetClass k = classify_subset(phi, b.contains("roots") ? subset(b, "roots") : phi.positives());
      ok = k.closed == e.value("closed", k.closed) && k.parabolic == e.value("parabolic", k.parabolic) &&
           k.symmetric == e.value("symmetric", k.symmetric) && k.special == e.value("special", k.special);
      r.details = std::string("closed ") + (k.closed ? "1" : "0") + ", parabolic " + (k.parabolic ? "1" : "0") +
                  ", symmetric " + (k.symmetric ? "1" : "0") + ", special " + (k.special ? "1" : "0");
    } else if (op == "d_operator") {
      RootSubset d = b.contains("roots") ? subset(b, "roots") : phi.positives();
      for (int i = b.value("iterations", 1); i > 0; --i) d = d_operator(phi, d);
      ok = d.count() == e.get<int>();
      r.details = "size " + std::to_string(d.count());
    } else if (op == "embedding") {
      auto target = RootSystem::parse_name(req(b, "target"));
      std::vector<Root> must;
      for (const auto& n : names(b, "must_contain")) must.push_back(phi.parse_root(n));
      bool found = find_embedding(phi, target->family(), target->rank(), must).has_value();
      ok = found == e.get<bool>();
      r.details = found ? "embedding found" : "no embedding";
    } else {
      throw ConfigError("unknown roots operation '" + op + "'");
    }
    r.level = "image";
    r.verdict = ok ? "pass" : "refuted";
  }

  // pairs (r, s) with r - s in the ideal; both projections are ring maps
  void ring(const SuiteCase& c, CaseResult& r) const {
    const json& b = c.body;
    std::string tag = str_field(b, "ideal", "M_laurent");
    IdealTag t = tag == "M_poly"    ? IdealTag::M_poly
                 : tag == "XM_poly"  ? IdealTag::XM_poly
                 : tag == "X2M_poly" ? IdealTag::X2M_poly
                 : tag == "M_laurent" ? IdealTag::M_laurent
                                      : throw ConfigError("unknown ideal '" + tag + "'");
    std::string op = req(b, "op");
    bool ok;
    if (op == "in_ideal") {
      bool got = in_ideal(elem(b, "x"), t);
      ok = got == b.at("expect").get<bool>();
      r.details = got ? "member" : "not a member";
    } else if (op == "double") {
      bool want_valid = str_field(b, "expect", "valid") == "valid";
      RingElem x = elem(b, "r"), y = elem(b, "s");
      try {
        DoubleElem d = make_double(x, y, t);
        DoubleElem sq = d * d + delta(x, t);
        ok = want_valid && p0(sq) == x * x + x && p1(sq) == y * y + x;
        r.details = "valid pair";
      } catch (const CongruenceViolation& e) {
        ok = !want_valid;
        r.details = std::string("violation: ") + e.what();
      }
    } else {
      throw ConfigError("unknown ring operation '" + op + "'");
    }
    r.level = "image";
    r.verdict = ok ? "pass" : "refuted";
  }

  CaseResult run(const SuiteCase& c) const {
    CaseResult r;
    r.id = c.id;
    auto t0 = std::chrono::steady_clock::now();
    try {
      if (c.level == "steinberg" && suite.oracle.mode == "matrix") {
        r.verdict = "skipped";
        r.details = "steinberg level needs the enumeration oracle";
      } else if (c.kind == "equality") {
        equality(c, r);
      } else if (c.kind == "membership") {
        membership(c, r);
      } else if (c.kind == "decomposition") {
        decomposition(c, r);
      } else if (c.kind == "chain") {
        chain(c, r);
      } else if (c.kind == "torsor") {
        torsor(c, r);
      } else if (c.kind == "constants") {
        constants(c, r);
      } else if (c.kind == "order") {
        order(c, r);
      } else if (c.kind == "ring") {
        ring(c, r);
      } else if (c.kind == "roots") {
        roots(c, r);
      } else {
        throw ConfigError("unknown case kind '" + c.kind + "'");
      }
    } catch (const std::exception& e) {
      r.verdict = "error";
      r.details = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
};

}  // namespace

ContextPtr make_context(const std::string& system, const RingSpec& spec) {
  RingPtr ring = Ring::make(spec);
  for (const auto& d : spec.denominators) {
    RingElem e = parse_ring(ring, d);
    if (e.has_den()) throw ConfigError("denominator must be a polynomial: " + d);
    ring->declare(e.num());
  }
  return Context::make(system, ring);
}

Suite parse_suite(const json& j) {
  if (!j.is_object()) throw ConfigError("suite must be a JSON object");
  if (str_field(j, "schema") != kSuiteSchema) throw ConfigError("unsupported schema, expected stk-suite/1");
  Suite s;
  s.name = str_field(j, "name", "suite");
  const json& sys = j.at("system");
  s.system = sys.is_string() ? sys.get<std::string>() : req(sys, "family") + std::to_string(sys.at("rank").get<int>());
  const json& ring = j.at("ring");
  s.ring.a_vars = names(ring, "a_vars");
  s.ring.m_vars = names(ring, "m_vars");
  s.ring.laurent = ring.value("laurent", true);
  s.ring.denominators = names(ring, "denominators");
  s.ring.base = BaseSpec::parse(str_field(ring, "base", "Z"));
  if (j.contains("oracle")) {
    const json& o = j.at("oracle");
    s.oracle.mode = str_field(o, "mode", "matrix");
    s.oracle.strategy = str_field(o, "strategy", "symbolic");
    s.oracle.seeds = o.value("seeds", 12);
  }
  if (s.oracle.mode != "matrix" && s.oracle.mode != "enum" && s.oracle.mode != "both")
    throw ConfigError("oracle mode must be matrix, enum or both");
  std::vector<std::string> ids;
  for (const auto& c : j.at("cases")) {
    SuiteCase sc;
    sc.id = req(c, "id");
    sc.kind = req(c, "kind");
    sc.paper_ref = str_field(c, "paper_ref");
    sc.level = str_field(c, "level", "image");
    sc.body = c;
    ids.push_back(sc.id);
    s.cases.push_back(std::move(sc));
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw ConfigError("duplicate case ids");
  return s;
}

Suite load_suite(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return parse_suite(j);
}

int Report::count(const std::string& verdict) const {
  return static_cast<int>(
      std::count_if(cases.begin(), cases.end(), [&](const CaseResult& c) { return c.verdict == verdict; }));
}

int Report::exit_code() const {
  if (count("error")) return 2;
  return count("refuted") ? 1 : 0;
}

Report run_suite(const Suite& s, const RunOptions& opt) {
  Runner run{s, make_context(s.system, s.ring), nullptr, opt.seed};
  if (s.oracle.mode != "matrix") run.enm = EnumHandle::build(run.ctx);
  Report rep;
  rep.suite = s.name;
  rep.seed = opt.seed;
  rep.cases.resize(s.cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < s.cases.size();) rep.cases[i] = run.run(s.cases[i]);
  };
  int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(s.cases.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(rep.cases.begin(), rep.cases.end(), [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
  return rep;
}

std::string report_jsonl(const Report& r, bool timing) {
  std::string out;
  for (const auto& c : r.cases) {
    json j = {{"id", c.id}, {"verdict", c.verdict}, {"level", c.level}, {"details", c.details}};
    if (timing) j["elapsed_ms"] = c.elapsed_ms;
    out += j.dump() + "\n";
  }
  json sum = {{"schema", kSuiteSchema},
              {"suite", r.suite},
              {"seed", r.seed},
              {"pass", r.count("pass")},
              {"refuted", r.count("refuted")},
              {"error", r.count("error")},
              {"skipped", r.count("skipped")}};
  out += sum.dump() + "\n";
  return out;
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  for (const auto& c : r.cases)
    os << c.verdict << "  " << c.id << "  [" << (c.level.empty() ? "-" : c.level) << "]  " << c.details << "\n";
  os << r.suite << ": " << r.count("pass") << " pass, " << r.count("refuted") << " refuted, " << r.count("error")
     << " error, " << r.count("skipped") << " skipped\n";
  return os.str();
}

}  // namespace stk
