#include <doctest.h>

#include <set>

#include "swlab/lattice.hpp"

using namespace swlab;

namespace {

Weight W(const std::string& s, int f) { return parse_weight(s, f); }

ExtAffineElement element(const std::string& translation, const std::string& weyl, int f) {
  return {W(translation, f), parse_weyl(weyl, f)};
}

}  // namespace

TEST_CASE("params reject small or composite characteristics") {
  CHECK_THROWS_AS(Params(4, 1), Error);
  CHECK_THROWS_AS(Params(3, 1), Error);
  CHECK_THROWS_AS(Params(7, 0), Error);
  const Params p(5, 2);
  CHECK(p.q() == 25);
  CHECK(p.modulus() == 24);
  CHECK(p.p_power(1) == 5);
}

TEST_CASE("pairing") {
  CHECK(pairing(Weight::eta(3), 2) == 1);
  CHECK(pairing(W("4,0", 1), 0) == 4);
  CHECK(pairing(W("0,0;0,0", 2), 1) == 0);
}

TEST_CASE("frobenius shifts coordinates forward") {
  CHECK(frobenius(W("3,1", 1)) == W("3,1", 1));
  CHECK(frobenius(W("1,0;0,0", 2)) == W("0,0;1,0", 2));
  Weight w = W("1,2;3,4;5,6", 3);
  Weight x = w;
  for (int i = 0; i < 3; ++i) x = frobenius(x);
  CHECK(x == w);
  CHECK(frobenius_inverse(frobenius(w)) == w);
}

TEST_CASE("p-dot action") {
  const Params p7(7, 1);
  CHECK(p_dot(p7, ExtAffineElement::identity(1), W("4,0", 1)) == W("4,0", 1));
  CHECK(p_dot(p7, element("0,-1", "s", 1), W("4,0", 1)) == W("-1,-2", 1));

  const Params p5(5, 2);
  const auto g = element("1,0;0,2", "se", 2);
  const auto h = element("-1,3;2,2", "ss", 2);
  const Weight w = W("7,-3;2,9", 2);
  CHECK(p_dot(p5, g * h, w) == p_dot(p5, g, p_dot(p5, h, w)));
  CHECK(p_dot(p5, g.inverse(), p_dot(p5, g, w)) == w);
  CHECK((g * g.inverse()) == ExtAffineElement::identity(2));
}

TEST_CASE("depth and genericity predicates") {
  const Params p7(7, 1);
  CHECK(is_deep(p7, W("3,0", 1), 1));
  CHECK(is_deep(p7, W("1,0", 1), 1));
  CHECK_FALSE(is_deep(p7, W("1,0", 1), 2));
  // pairings of w + eta are (5, 3)
  CHECK_FALSE(is_deep(Params(5, 2), W("4,0;2,0", 2), 0));

  CHECK(is_generic_char(p7, W("4,0", 1)));
  CHECK(is_generic_char(Params(5, 1), W("2,0", 1)));
  CHECK_FALSE(is_generic_char(Params(5, 1), W("4,0", 1)));
  CHECK_FALSE(is_generic_char(p7, W("1,0", 1)));

  CHECK(is_regular(p7, W("5,0", 1)));
  CHECK_FALSE(is_regular(p7, W("6,0", 1)));
  CHECK(is_regular(p7, W("0,0", 1)));
  CHECK_FALSE(is_regular(Params(5, 2), W("4,0;2,0", 2)));
}

TEST_CASE("serre classes") {
  const Params p7(7, 1);
  CHECK(serre_class(p7, W("3,0", 1)) == SerreWeightClass{{3}, 0});
  CHECK(serre_class(p7, W("-1,-2", 1)) == SerreWeightClass{{1}, 4});
  CHECK(serre_class(p7, W("5,4", 1)) == SerreWeightClass{{1}, 4});
  CHECK(serre_class(Params(5, 2), W("3,1;2,0", 2)) == SerreWeightClass{{2, 2}, 1});
  CHECK_THROWS_AS(serre_class(p7, W("0,1", 1)), Error);
  CHECK_THROWS_WITH_AS(serre_class(p7, W("7,0", 1)), "weight 7,0 is not p-restricted", Error);

  // X^0 = (p - pi)(1,1) is invisible to the class
  const Params p5(5, 2);
  const Weight w = W("3,1;2,0", 2);
  const Weight shift = 5 * Weight::central(2, 0) - Weight::central(2, 1);
  CHECK(quotient_class(p5, w + shift) == quotient_class(p5, w));
}

TEST_CASE("lift is a section of the class map") {
  const Params p(7, 2);
  for (Int r0 = 0; r0 < 7; ++r0) {
    for (Int d = 0; d < p.modulus(); d += 5) {
      const SerreWeightClass c{{r0, 6 - r0}, d};
      CHECK(serre_class(p, lift(p, c)) == c);
    }
  }
}

TEST_CASE("dimensions") {
  CHECK(dim_serre({{0, 0, 0}, 5}) == 1);
  CHECK(dim_serre({{6}, 0}) == 7);
  CHECK(dim_serre({{3}, 2}) == 4);
}

TEST_CASE("herzig reflection") {
  const Params p7(7, 1);
  const SerreWeightClass c{{3}, 0};
  CHECK(herzig_reflect(p7, c) == SerreWeightClass{{2}, 3});
  CHECK(herzig_reflect_inverse(p7, herzig_reflect(p7, c)) == c);
  CHECK_THROWS_AS(herzig_reflect(p7, {{6}, 0}), Error);

  // a bijection on regular classes
  for (const Params& params : {Params(5, 1), Params(7, 1), Params(5, 2)}) {
    std::set<SerreWeightClass> images;
    std::size_t count = 0;
    const int f = params.f();
    const Int side = params.p() - 1;
    Int total = 1;
    for (int i = 0; i < f; ++i) total *= side;
    for (Int idx = 0; idx < total; ++idx) {
      std::vector<Int> r;
      Int rest = idx;
      for (int i = 0; i < f; ++i) {
        r.push_back(rest % side);
        rest /= side;
      }
      for (Int d = 0; d < params.modulus(); ++d) {
        const SerreWeightClass x{r, d};
        const SerreWeightClass y = herzig_reflect(params, x);
        CHECK(is_regular(params, y));
        images.insert(y);
        ++count;
      }
    }
    CHECK(images.size() == count);
  }
}

TEST_CASE("herzig reflection squares to a central shift, not the identity") {
  const Params p7(7, 1);
  const SerreWeightClass c{{3}, 0};
  const SerreWeightClass twice = herzig_reflect(p7, herzig_reflect(p7, c));
  CHECK(twice.r == c.r);
  CHECK(twice.d != c.d);
}

TEST_CASE("base alcove stabilisers") {
  CHECK(stabilizes_base_alcove(ExtAffineElement::identity(2)));
  CHECK(stabilizes_base_alcove(element("0,-1", "s", 1)));
  CHECK_FALSE(stabilizes_base_alcove(element("1,0", "e", 1)));
}

TEST_CASE("weyl elements") {
  const WeylElement s = parse_weyl("se", 2);
  CHECK(s.flag(0));
  CHECK_FALSE(s.flag(1));
  CHECK((s * s) == WeylElement::identity(2));
  CHECK(s.act(W("3,1;2,0", 2)) == W("1,3;2,0", 2));
  CHECK(s.act(LambdaWElement({2, -1})) == LambdaWElement({-2, -1}));
  CHECK(format_weyl(WeylElement::longest(3)) == "sss");
  CHECK_THROWS_AS(parse_weyl("sx", 2), Error);
  CHECK_THROWS_AS(parse_weyl("s", 2), Error);
}

TEST_CASE("text encodings") {
  CHECK(format_weight(W("3,1;2,0", 2)) == "3,1;2,0");
  CHECK(W("-1,-2", 1) == Weight({{-1, -2}}));
  CHECK_THROWS_AS(W("4;0", 1), Error);
  CHECK_THROWS_AS(W("4,0,1", 1), Error);
  CHECK_THROWS_AS(W("a,0", 1), Error);
  CHECK_THROWS_AS(W("4,0", 2), Error);
  CHECK(format_class({{3, 1}, 4}) == "r=[3,1], d=4");
}
