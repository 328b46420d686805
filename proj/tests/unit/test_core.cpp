#include <doctest.h>

#include <random>

#include "mwcomb/core.hpp"

using namespace mwcomb;

namespace {
HalfInt h(int twice) { return HalfInt::from_twice(twice); }
}

TEST_CASE("half-integer parsing and printing") {
  CHECK(HalfInt::parse("3/2") == h(3));
  CHECK(HalfInt::parse("-1/2") == h(-1));
  CHECK(HalfInt::parse("+2") == HalfInt::of(2));
  CHECK(HalfInt::parse("4/1") == HalfInt::of(4));
  CHECK(h(-3).str() == "-3/2");
  CHECK(HalfInt::of(-2).str() == "-2");
  CHECK_THROWS_AS(HalfInt::parse("1/3"), ValidationError);
  CHECK_THROWS_AS(HalfInt::parse("x"), ValidationError);
  CHECK_THROWS_AS(HalfInt::parse(""), ValidationError);
  CHECK(h(-3).floor() == -2);
  CHECK(h(3).floor() == 1);
}

TEST_CASE("segments keep their orientation") {
  Segment s("rho", HalfInt::of(-1), HalfInt::of(1));
  CHECK_FALSE(s.decreasing());
  CHECK(s.length() == 3);
  CHECK(s.normalized().start == HalfInt::of(1));
  CHECK_THROWS_AS(Segment("rho", h(1), HalfInt::of(0)), ValidationError);
  auto el = segment_elements(s);
  REQUIRE(el.size() == 3);
  CHECK(el.front() == HalfInt::of(-1));
}

TEST_CASE("multisegment text form") {
  auto m = Multisegment::parse("{[0..2], [1/2..-1/2]sigma}");
  CHECK(m.str() == "{[2..0]rho, [1/2..-1/2]sigma}");
  CHECK(m.degree() == 5);
  CHECK(Multisegment::parse("{}").empty());
  CHECK_THROWS_AS(Multisegment::parse("[1..0]"), ValidationError);
  CHECK_THROWS_AS(Multisegment::parse("{[1..0}"), ValidationError);
  CHECK_THROWS_AS(Multisegment::parse("{[1..1/2]}"), ValidationError);
}

TEST_CASE("dual of small multisegments") {
  CHECK(mw_dual(Multisegment::parse("{[2..0]rho}")).str() == "{[2..2]rho, [1..1]rho, [0..0]rho}");
  CHECK(mw_dual(Multisegment::parse("{[0..0]}")).str() == "{[0..0]rho}");
  auto lad = Multisegment::parse("{[1/2..-3/2], [3/2..-1/2]}");
  CHECK(mw_dual(lad) == Multisegment::parse("{[3/2..1/2], [1/2..-1/2], [-1/2..-3/2]}"));
  CHECK(mw_dual(Multisegment()).empty());
}

TEST_CASE("dual is an involution preserving support") {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    std::vector<Segment> segs;
    int k = static_cast<int>(rng() % 12);
    for (int s = 0; s < k; ++s) {
      HalfInt e = HalfInt::of(static_cast<int>(rng() % 7) - 3);
      segs.emplace_back(rng() % 2 ? "rho" : "sigma", e + static_cast<int>(rng() % 4), e);
    }
    Multisegment m(segs);
    CHECK(mw_dual(mw_dual(m)) == m);
    CHECK(support(mw_dual(m)) == support(m));
  }
}
