#include <doctest.h>

#include <algorithm>

#include "swlab/report.hpp"
#include "swlab/verify.hpp"

using namespace swlab;

namespace {

const SuiteOutcome& find(const std::vector<SuiteOutcome>& all, const std::string& name, Int p, int f) {
  const auto it = std::find_if(all.begin(), all.end(), [&](const SuiteOutcome& o) {
    return o.check == name && o.p == p && o.f == f;
  });
  REQUIRE(it != all.end());
  return *it;
}

}  // namespace

TEST_CASE("sweep domains") {
  const auto mus = deep_weights(Params(7, 2));
  CHECK(mus.size() == 16);
  CHECK(mus.front() == parse_weight("2,0;2,0", 2));
  CHECK(mus[1] == parse_weight("2,0;3,0", 2));
  CHECK(generic_params(Params(5, 1)).empty());
  CHECK(generic_params(Params(7, 1)).size() == 4);
  const auto strict = strictly_generic_params(Params(7, 2));
  CHECK(strict.size() < generic_params(Params(7, 2)).size());
}

TEST_CASE("the suite passes at f = 1") {
  SuiteConfig cfg;
  cfg.p_list = {5, 7, 11};
  cfg.f_list = {1};
  cfg.cases = 1000;
  const auto out = run_suite(cfg);
  for (const auto& o : out) {
    INFO(o.check << " p=" << o.p << ": " << o.counterexample);
    CHECK(o.passed);
  }
  CHECK(all_passed(out));
  CHECK(find(out, "classical_f1", 7, 1).cases == 4);
}

TEST_CASE("at f = 2 only the concrete-criterion D0 sweep fails") {
  SuiteConfig cfg;
  cfg.p_list = {7};
  cfg.f_list = {2};
  cfg.cases = 1000;
  const auto out = run_suite(cfg);
  for (const auto& o : out) {
    INFO(o.check << ": " << o.counterexample);
    CHECK(o.passed == (o.check != "d0_multiplicity_one"));
  }
  const auto& d0 = find(out, "d0_multiplicity_one", 7, 2);
  CHECK(d0.counterexample.find("not 1-deep") != std::string::npos);
  CHECK(find(out, "d0_multiplicity_one_strict", 7, 2).cases > 0);
  CHECK(std::none_of(out.begin(), out.end(), [](const SuiteOutcome& o) { return o.check == "classical_f1"; }));
}

TEST_CASE("sampled checks are determined by the seed") {
  SuiteConfig cfg;
  cfg.cases = 300;
  cfg.seed = 11;
  const Params p(5, 3);
  const auto a = check_filtration_closure(p, cfg);
  const auto b = check_filtration_closure(p, cfg);
  CHECK(a.passed);
  CHECK(a.cases == 300);
  CHECK(suite_table({a}) == suite_table({b}));
  CHECK(check_pdot_action(p, cfg).passed);
}

TEST_CASE("exhaustive filtration sweep at f = 2") {
  const auto o = check_filtration_closure(Params(5, 2), SuiteConfig{});
  CHECK(o.passed);
  CHECK(o.cases > 100);
}

TEST_CASE("suite rendering") {
  std::vector<SuiteOutcome> rows{{"injectivity", 5, 1, true, 3, ""}, {"symmetry", 7, 2, false, 9, "w=ee mu=..."}};
  const auto table = suite_table(rows);
  CHECK(table.find("FAIL  w=ee mu=...") != std::string::npos);
  const auto j = suite_json(rows);
  CHECK(j["all_passed"] == false);
  CHECK(j["outcomes"][1]["counterexample"] == "w=ee mu=...");
  CHECK_FALSE(j["outcomes"][0].contains("counterexample"));
}
