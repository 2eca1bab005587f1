#include <doctest.h>

#include <algorithm>
#include <set>

#include "swlab/d0.hpp"
#include "swlab/verify.hpp"

using namespace swlab;

namespace {

TameParam make(Int p, const std::string& w, const std::string& mu) {
  const int f = static_cast<int>(w.size());
  return TameParam(Params(p, f), parse_weyl(w, f), parse_weight(mu, f));
}

std::vector<SerreWeightClass> block_classes(const D0SigmaReport& b) {
  std::vector<SerreWeightClass> out;
  for (const auto& c : b.constituents) out.push_back(c.cls);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("f = 1 irreducible block") {
  const auto t = make(7, "s", "4,0");
  const auto b = d0_sigma(t, 0);
  REQUIRE(b.constituents.size() == 2);
  CHECK(b.constituents[0].J == JSet{});
  CHECK(b.constituents[0].cls == SerreWeightClass{{3}, 0});
  CHECK(b.constituents[0].layer == 0);
  CHECK(b.constituents[1].J == JSet{1, 0});
  CHECK(b.constituents[1].cls == SerreWeightClass{{1}, 4});
  CHECK(b.constituents[1].layer == 1);
  CHECK(b.constituents[1].dual_layer == 0);
  CHECK(b.cosocle == SerreWeightClass{{3}, 0});

  const auto other = d0_sigma(t, 1);
  CHECK(other.lambda == parse_weight("1,-3", 1));
  CHECK(other.cosocle == SerreWeightClass{{3}, 3});
  CHECK(block_classes(other) == std::vector<SerreWeightClass>{{{1}, 1}, {{3}, 3}});
}

TEST_CASE("f = 1 full report") {
  for (const char* w : {"e", "s"}) {
    const auto rep = d0_full(make(7, w, "4,0"));
    CHECK(rep.blocks.size() == 2);
    CHECK(rep.all_constituents.size() == 4);
    CHECK(rep.multiplicity_free);
    CHECK(radical_disjointness_check(rep));
    CHECK(upperbound_consistency(rep));
  }
}

TEST_CASE("block structure") {
  for (const auto& t : strictly_generic_params(Params(7, 3))) {
    const auto rep = d0_full(t);
    for (const auto& b : rep.blocks) {
      REQUIRE(b.constituents.size() == 8);
      CHECK(b.constituents.front().cls == b.sigma);
      int by_layer[4] = {0, 0, 0, 0};
      for (const auto& c : b.constituents) {
        ++by_layer[c.layer];
        CHECK((c.J.plus & ~b.w_sigma.flags()) == 0u);
        CHECK((c.J.minus & b.w_sigma.flags()) == 0u);
      }
      CHECK(by_layer[0] == 1);
      CHECK(by_layer[1] == 3);
      CHECK(by_layer[2] == 3);
      CHECK(by_layer[3] == 1);
    }
    std::vector<SerreWeightClass> cosocles;
    for (const auto& b : rep.blocks) cosocles.push_back(b.cosocle);
    std::sort(cosocles.begin(), cosocles.end());
    CHECK(cosocles == w_question(t));
  }
}

TEST_CASE("multiplicity one on strictly generic parameters") {
  for (Int p : {5, 7, 11}) {
    for (int f : {1, 2, 3}) {
      for (const auto& t : strictly_generic_params(Params(p, f))) {
        const auto rep = d0_full(t);
        CHECK(rep.multiplicity_free);
        CHECK(rep.all_constituents.size() == (std::size_t{1} << (2 * f)));
        CHECK(radical_disjointness_check(rep));
        CHECK(upperbound_consistency(rep));
      }
    }
  }
}

TEST_CASE("presentation independence at f = 2") {
  for (const auto& t : strictly_generic_params(Params(7, 2))) {
    const auto rep = d0_full(t);
    for (const auto& b : rep.blocks) {
      for (std::uint32_t via = 0; via < 4; ++via) CHECK(block_via_presentation(t, b.label, via) == block_classes(b));
    }
  }
}

TEST_CASE("central twist shifts every constituent by the same amount") {
  const auto t = strictly_generic_params(Params(7, 2)).front();
  const TameParam shifted(t.params(), t.w(), t.mu() + Weight::central(2, 0));
  const auto a = d0_full(t);
  const auto b = d0_full(shifted);
  std::set<Int> steps;
  for (std::size_t i = 0; i < a.blocks.size(); ++i) {
    for (std::size_t j = 0; j < a.blocks[i].constituents.size(); ++j) {
      const auto& x = a.blocks[i].constituents[j].cls;
      const auto& y = b.blocks[i].constituents[j].cls;
      CHECK(x.r == y.r);
      steps.insert((y.d - x.d + 48) % 48);
    }
  }
  CHECK(steps == std::set<Int>{1});
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(d0_full(make(5, "ee", "2,0;2,0")), Error);
  CHECK_THROWS_AS(d0_sigma(make(7, "s", "4,0"), 2), Error);
  try {
    d0_full(make(7, "ee", "5,0;3,0"));
    FAIL("expected a presentation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PresentationError);
  }
}

TEST_CASE("report checks on synthetic reports") {
  const auto t = make(7, "s", "4,0");
  auto rep = d0_full(t);

  const D0Report empty = assemble_d0(t, {});
  CHECK(radical_disjointness_check(empty));
  CHECK(upperbound_consistency(empty));
  CHECK(empty.multiplicity_free);

  // a cosocle copied into layer 1 of the other block
  auto blocks = rep.blocks;
  blocks[1].constituents[1].cls = blocks[0].cosocle;
  const D0Report broken = assemble_d0(t, blocks);
  CHECK_FALSE(broken.multiplicity_free);
  CHECK_FALSE(radical_disjointness_check(broken));
  CHECK_FALSE(upperbound_consistency(broken));

  // a block repeating its own cosocle
  blocks = rep.blocks;
  blocks[0].constituents[1].cls = blocks[0].cosocle;
  CHECK_FALSE(upperbound_consistency(assemble_d0(t, blocks)));
}
