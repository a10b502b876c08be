#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "stk/error.hpp"
#include "stk/suite.hpp"

using namespace stk;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path kSuites = fs::path(STK_SOURCE_DIR) / "suites";

std::vector<fs::path> suite_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(kSuites))
    if (e.path().extension() == ".json" && e.path().filename() != "manifest.json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

json read_json(const fs::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

std::vector<std::string> refs_of(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto b = item.find_first_not_of(' '), e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

TEST_CASE("bundled suites parse and cover the manifest") {
  json manifest = read_json(kSuites / "manifest.json");
  std::set<std::string> items, used;
  for (const auto& [k, v] : manifest.at("items").items()) items.insert(k);
  REQUIRE(!items.empty());
  auto files = suite_files();
  REQUIRE(files.size() > 5);
  std::set<std::string> names;
  for (const auto& f : files) {
    Suite s = load_suite(f.string());
    CHECK(names.insert(s.name).second);
    for (const auto& c : s.cases) {
      INFO(f.filename().string() << " " << c.id);
      auto refs = refs_of(c.paper_ref);
      CHECK(!refs.empty());
      for (const auto& r : refs) {
        CHECK(items.count(r) == 1);
        used.insert(r);
      }
    }
  }
  for (const auto& k : items) {
    INFO("manifest item without a case: " << k);
    CHECK(used.count(k) == 1);
  }
}

TEST_CASE("suite schema errors") {
  json good = {{"schema", "stk-suite/1"},
               {"system", {{"family", "A"}, {"rank", 2}}},
               {"ring", {{"a_vars", "a"}}},
               {"cases", json::array({{{"id", "x"}, {"kind", "equality"}, {"lhs", "x[1,-2](a)"}, {"rhs", "1"}}})}};
  CHECK(parse_suite(good).system == "A2");
  json dup = good;
  dup["cases"].push_back(dup["cases"][0]);
  CHECK_THROWS_AS(parse_suite(dup), ConfigError);
  json bad = good;
  bad["schema"] = "stk-suite/2";
  CHECK_THROWS_AS(parse_suite(bad), ConfigError);
  json mode = good;
  mode["oracle"] = {{"mode", "telepathy"}};
  CHECK_THROWS_AS(parse_suite(mode), ConfigError);
}

TEST_CASE("verdicts and exit codes") {
  json j = {{"schema", "stk-suite/1"},
            {"system", "A3"},
            {"ring", {{"a_vars", "a,b"}, {"laurent", false}}},
            {"cases", json::array({
                          {{"id", "good"}, {"kind", "equality"}, {"lhs", "comm(x[1,-2](a), x[2,-3](b))"}, {"rhs", "x[1,-3](a*b)"}},
                          {{"id", "corrupt"}, {"kind", "equality"}, {"lhs", "comm(x[1,-2](a), x[2,-3](b))"}, {"rhs", "x[1,-3](a)"}},
                      })}};
  Report r = run_suite(parse_suite(j));
  CHECK(r.count("pass") == 1);
  CHECK(r.count("refuted") == 1);
  CHECK(r.exit_code() == 1);
  j["cases"].push_back({{"id", "laurent"}, {"kind", "equality"}, {"lhs", "x[1,-2](a*X^-1)"}, {"rhs", "1"}});
  j["cases"].push_back({{"id", "skip"}, {"kind", "equality"}, {"level", "steinberg"}, {"lhs", "1"}, {"rhs", "1"}});
  r = run_suite(parse_suite(j));
  CHECK(r.count("error") == 1);
  CHECK(r.count("skipped") == 1);
  CHECK(r.exit_code() == 2);
  CHECK(r.cases.front().id == "corrupt");
}

TEST_CASE("reports are byte-stable and independent of the worker count") {
  Suite s = load_suite((kSuites / "torsor-relations.json").string());
  std::string one = report_jsonl(run_suite(s, {7, 1, false}), false);
  std::string four = report_jsonl(run_suite(s, {7, 4, false}), false);
  CHECK(one == four);
  CHECK(one.find("elapsed_ms") == std::string::npos);
  CHECK(report_jsonl(run_suite(s, {7, 2, true}), true).find("elapsed_ms") != std::string::npos);
}

TEST_CASE("bundled z-relation and torsor suites pass") {
  for (const char* name : {"relative.json", "torsor-relations.json"}) {
    Report r = run_suite(load_suite((kSuites / name).string()), {1, 4, false});
    INFO(report_text(r));
    CHECK(r.exit_code() == 0);
    CHECK(r.count("pass") == static_cast<int>(r.cases.size()));
  }
}
