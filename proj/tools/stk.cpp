#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stk/constants.hpp"
#include "stk/dsl.hpp"
#include "stk/enumerate.hpp"
#include "stk/error.hpp"
#include "stk/suite.hpp"
#include "stk/torsor.hpp"

using namespace stk;
using nlohmann::json;

namespace {

struct Common {
  std::string system = "A2";
  std::string base = "Z";
  std::string a_vars;
  std::string m_vars;
  bool as_json = false;
  uint64_t seed = 1;

  ContextPtr ctx() const { return Context::make(system, Ring::make(a_vars, m_vars, base)); }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--system", c.system, "root system, e.g. A3, D4, E6");
  app->add_option("--ring", c.base, "base ring: Z, Z9, F3, F3[eps]/eps^3");
  app->add_option("--a-vars", c.a_vars, "comma-separated A-variables");
  app->add_option("--m-vars", c.m_vars, "comma-separated variables of the maximal ideal");
  app->add_flag("--json", c.as_json, "machine-readable output");
  app->add_option("--seed", c.seed, "seed for randomized oracles (default STK_SEED or 1)");
}

json matrix_json(const SymMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.n; ++i) {
    json row = json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

Strategy strategy_of(const std::string& s, const Common& c) {
  if (s == "symbolic") return Strategy::symbolic();
  if (s == "randomized") return Strategy::randomized(12, c.seed);
  return {Strategy::Kind::automatic, 12, c.seed};
}

int emit(const Common& c, const json& j, const std::string& text) {
  if (c.as_json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stk: Steinberg group word and torsor toolkit"};
  app.require_subcommand(1);
  Common c;
  if (const char* env = std::getenv("STK_SEED")) c.seed = std::strtoull(env, nullptr, 10);

  std::string expr, lhs, rhs, start = "1", strategy = "auto", source = "rep", plus, minus;
  bool use_enum = false, timing = false;
  int jobs = 1;
  std::vector<std::string> paths;

  auto* eval_cmd = app.add_subcommand("eval", "print the matrix image of a word");
  add_common(eval_cmd, c);
  eval_cmd->add_option("--expr", expr)->required();

  auto* check_cmd = app.add_subcommand("check", "compare two words");
  add_common(check_cmd, c);
  check_cmd->add_option("--lhs", lhs)->required();
  check_cmd->add_option("--rhs", rhs)->required();
  check_cmd->add_option("--strategy", strategy, "symbolic, randomized or auto");
  check_cmd->add_flag("--enum", use_enum, "also compare in the coset-enumeration oracle");

  auto* suite_cmd = app.add_subcommand("suite", "run suite files");
  add_common(suite_cmd, c);
  suite_cmd->add_option("paths", paths)->required();
  suite_cmd->add_option("--jobs", jobs, "worker threads");
  suite_cmd->add_flag("--timing", timing, "include elapsed_ms in JSON output");

  auto* const_cmd = app.add_subcommand("constants", "structure constant table");
  add_common(const_cmd, c);
  const_cmd->add_option("--source", source, "rep or extraspecial")->check(CLI::IsMember({"rep", "extraspecial"}));

  auto* tc_cmd = app.add_subcommand("tc", "order of St(phi, k) by coset enumeration");
  add_common(tc_cmd, c);

  auto* act_cmd = app.add_subcommand("act", "act with a word over B on a triple");
  add_common(act_cmd, c);
  act_cmd->add_option("--expr", expr)->required();
  act_cmd->add_option("--start", start, "word over B whose action on (1,1,1) gives the starting triple");

  auto* fac_cmd = app.add_subcommand("factorize", "split a word over B into A[X]-relative and A[X^-1] parts");
  add_common(fac_cmd, c);
  fac_cmd->add_option("--expr", expr)->required();

  auto* pb_cmd = app.add_subcommand("pullback", "recover a constant word from g+ over A[X] and g- over A[X^-1]");
  add_common(pb_cmd, c);
  pb_cmd->add_option("--plus", plus)->required();
  pb_cmd->add_option("--minus", minus)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval_cmd) {
      auto ctx = c.ctx();
      Word w = parse_word(ctx, expr);
      if (!ctx->rep) throw ConfigError("no matrix representation for " + c.system);
      SymMat m = eval(w);
      return emit(c, {{"word", print_word(w)}, {"letters", w.size()}, {"matrix", matrix_json(m)}},
                  std::to_string(w.size()) + " letters\n" + matrix_dump(m) + "\n");
    }
    if (*check_cmd) {
      auto ctx = c.ctx();
      Word a = parse_word(ctx, lhs), b = parse_word(ctx, rhs);
      Verdict v = equal(a, b, strategy_of(strategy, c));
      json j = {{"matrix", verdict_str(v)}};
      bool refuted = v == Verdict::refuted;
      std::string text = "matrix: " + verdict_str(v) + "\n";
      if (use_enum) {
        bool eq = enum_equal(*EnumHandle::build(ctx), a, b);
        j["enumeration"] = eq ? "equal" : "different";
        text += std::string("enumeration: ") + (eq ? "equal" : "different") + "\n";
        refuted = refuted || !eq;
      }
      j["verdict"] = refuted ? "refuted" : "pass";
      emit(c, j, text + (refuted ? "refuted\n" : "pass\n"));
      return refuted ? 1 : 0;
    }
    if (*suite_cmd) {
      int code = 0;
      for (const auto& p : paths) {
        Report r = run_suite(load_suite(p), {c.seed, jobs, timing});
        std::cout << (c.as_json ? report_jsonl(r, timing) : report_text(r));
        code = std::max(code, r.exit_code());
      }
      return code;
    }
    if (*const_cmd) {
      auto phi = RootSystem::parse_name(c.system);
      ConstantTable t = source == "extraspecial" ? extraspecial_constants(phi) : *standard_constants(phi);
      VerifyReport v = verify(t);
      json j = {{"system", c.system}, {"source", source}, {"verified", v.pass}, {"table", t.dump()}};
      emit(c, j, t.dump() + (v.pass ? "identities: ok\n" : "identities: violated\n"));
      return v.pass ? 0 : 1;
    }
    if (*tc_cmd) {
      auto h = EnumHandle::build(c.ctx());
      return emit(c, {{"order", h->order()}, {"cosets_defined", h->cosets_defined()}},
                  "order " + std::to_string(h->order()) + "\n");
    }
    if (*act_cmd) {
      auto ctx = c.ctx();
      Triple t = act(parse_word(ctx, expr), act(parse_word(ctx, start), base_triple(ctx)));
      TripleT tt = to_vt(t);
      json j = {{"g", print_word(t.g)}, {"h", print_word(t.h)}, {"u", t.u.str()},
                {"p_image", matrix_json(eval(tt.p))}};
      return emit(c, j,
                  "g = " + print_word(t.g) + "\nh = " + print_word(t.h) + "\nu = " + t.u.str() + "\np = \n" +
                      matrix_dump(eval(tt.p)) + "\n");
    }
    if (*fac_cmd) {
      auto ctx = c.ctx();
      BFactorization f = factorize_b(parse_word(ctx, expr));
      json cert = {{"p_polynomial", f.p_polynomial}, {"p_relative", f.p_relative}, {"h_negative", f.h_negative},
                   {"product_matches", f.product_matches}, {"u_congruent", f.u_congruent}};
      json j = {{"p", print_word(f.p)}, {"h", print_word(f.h)}, {"u", f.u.str()}, {"certificate", cert},
                {"ok", f.ok()}};
      std::string text = "p = " + print_word(f.p) + "\nh = " + print_word(f.h) + "\nu = " + f.u.str() +
                         "\ncertificate: " + (f.ok() ? "ok" : "failed " + cert.dump()) + "\n";
      emit(c, j, text);
      return f.ok() ? 0 : 1;
    }
    if (*pb_cmd) {
      auto ctx = c.ctx();
      PullbackResult r = pullback_check(parse_word(ctx, plus), parse_word(ctx, minus));
      json j = {{"g0", print_word(r.g0)}, {"constant", r.constant}, {"ok", r.ok}};
      std::string text = "g0 = " + print_word(r.g0) + "\n" + (r.ok ? "ok\n" : "residual:\n" + matrix_dump(r.residual) + "\n");
      emit(c, j, text);
      return r.ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    if (c.as_json)
      std::cout << json{{"error", e.what()}}.dump() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
