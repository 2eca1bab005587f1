#include <doctest.h>

#include <array>
#include <cstdio>
#include <set>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& binary, const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(binary) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Run swlab(const std::string& args, bool merge_stderr = false) { return run(SWLAB_CLI, args, merge_stderr); }

}  // namespace

TEST_CASE("graph") {
  const auto r = swlab("graph --p 7 --f 1 --mu 4,0 --radius 1 --format json");
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["vertices"].size() == 3);
  CHECK(j["edges"].size() == 2);
  CHECK(j["vertices"][1]["r"] == json::array({3}));

  CHECK(json::parse(swlab("graph --p 7 --f 1 --mu 4,0 --radius 0").out)["vertices"].size() == 1);
  CHECK(swlab("graph --p 7 --f 1 --mu \"4;0\" --radius 1").status == 2);
  CHECK(swlab("graph --p 7 --f 1 --mu 0,0 --radius 1").status == 2);
  CHECK(swlab("graph --p 9 --f 1 --mu 4,0").status == 2);
  const auto dot = swlab("graph --p 7 --f 1 --mu 4,0 --radius 1 --format dot");
  CHECK(dot.status == 0);
  CHECK(dot.out.rfind("graph extension_graph {", 0) == 0);
}

TEST_CASE("weights") {
  const auto s = swlab("weights --p 7 --f 1 --w s --mu 4,0");
  REQUIRE(s.status == 0);
  const auto js = json::parse(s.out);
  CHECK(js["w_question"].size() == 2);
  CHECK(js["one_generic"] == true);
  CHECK(js["presentations"][1]["lambda"] == "1,-3");

  const auto je = json::parse(swlab("weights --p 7 --f 1 --w e --mu 4,0").out);
  int shared = 0;
  for (const auto& a : je["w_question"]) {
    for (const auto& b : js["w_question"]) shared += a == b;
  }
  CHECK(shared == 1);

  const auto bad = swlab("weights --p 5 --f 2 --w ee --mu \"2,0;2,0\"", true);
  CHECK(bad.status == 2);
  CHECK(bad.out.find("not 1-generic") != std::string::npos);
  CHECK(swlab("weights --p 7 --f 1 --w x --mu 4,0").status == 2);
}

TEST_CASE("envelope") {
  const auto r = swlab("envelope --p 7 --f 1 --mu 4,0");
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  std::size_t labels = 0;
  for (const auto& piece : j["graded"]) labels += piece["labels"].size();
  CHECK(labels == 4);
  CHECK(j["total_dim"] == 14);
  CHECK(j["assumptions"] == json::array({"mu_minus_eta_1_deep", "V_J_exact"}));

  const auto j2 = json::parse(swlab("envelope --p 5 --f 2 --mu \"3,0;2,0\"").out);
  labels = 0;
  for (const auto& piece : j2["graded"]) labels += piece["labels"].size();
  CHECK(labels == 16);
  CHECK(j2["total_dim"] == 100);

  CHECK(swlab("envelope --p 7 --f 1 --mu 2,1").status == 2);
  CHECK(swlab("envelope --p 7 --f 1 --mu 4,0 --format dot").status == 2);
}

TEST_CASE("d0") {
  const auto r = swlab("d0 --p 7 --f 1 --w s --mu 4,0");
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["constituent_count"] == 4);
  CHECK(j["multiplicity_free"] == true);
  CHECK(j["checks"]["radical_disjoint"] == true);
  CHECK(j["checks"]["upperbound_consistent"] == true);
  CHECK(j["assumptions"] == json::array({"V_J_exact"}));

  const auto f2 = json::parse(swlab("d0 --p 5 --f 2 --w es --mu \"2,0;3,0\"").out);
  CHECK(f2["constituent_count"] == 16);
  CHECK(f2["multiplicity_free"] == true);

  // all pairings p-2: rejected as not 1-generic
  CHECK(swlab("d0 --p 5 --f 2 --w ss --mu \"3,0;3,0\"").status == 2);
  // accepted by the concrete criterion, but a recentred presentation is not 1-deep
  const auto deep = swlab("d0 --p 7 --f 2 --w ee --mu \"5,0;3,0\"", true);
  CHECK(deep.status == 1);
  CHECK(deep.out.find("not 1-deep") != std::string::npos);

  const auto dot = swlab("d0 --p 7 --f 1 --w s --mu 4,0 --format dot");
  CHECK(dot.status == 0);
  CHECK(dot.out.rfind("digraph d0 {", 0) == 0);
}

TEST_CASE("d0 under a central twist") {
  const auto a = json::parse(swlab("d0 --p 5 --f 2 --w es --mu \"2,0;3,0\"").out);
  const auto b = json::parse(swlab("d0 --p 5 --f 2 --w es --mu \"3,1;3,0\"").out);
  std::set<int> steps;
  for (std::size_t i = 0; i < a["blocks"].size(); ++i) {
    for (std::size_t k = 0; k < a["blocks"][i]["constituents"].size(); ++k) {
      const auto& x = a["blocks"][i]["constituents"][k];
      const auto& y = b["blocks"][i]["constituents"][k];
      CHECK(x["r"] == y["r"]);
      steps.insert((y["d"].get<int>() - x["d"].get<int>() + 24) % 24);
    }
  }
  CHECK(steps.size() == 1);
  CHECK(a["multiplicity_free"] == b["multiplicity_free"]);
}

TEST_CASE("verify") {
  const auto ok = swlab("verify --p 5,7 --f 1");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out == swlab("verify --p 5,7 --f 1").out);

  const auto j = json::parse(swlab("verify --p 7 --f 1 --format json").out);
  CHECK(j["all_passed"] == true);

  CHECK(swlab("verify --p 4 --f 1").status == 2);
}

TEST_CASE("verify catches the p-dot sign fault") {
  const auto r = run(SWLAB_FAULTY_CLI, "verify --p 7 --f 1 --format json");
  CHECK(r.status == 1);
  const auto j = json::parse(r.out);
  bool injectivity_failed = false;
  for (const auto& row : j["outcomes"]) {
    if (row["check"] == "injectivity" && row["passed"] == false) {
      injectivity_failed = !row["counterexample"].get<std::string>().empty();
    }
  }
  CHECK(injectivity_failed);
}

TEST_CASE("usage errors") {
  CHECK(swlab("").status == 2);
  CHECK(swlab("frobnicate").status == 2);
  CHECK(swlab("graph --p 7").status == 2);
  CHECK(swlab("--help").status == 0);
}
