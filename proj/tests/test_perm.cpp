#include <doctest.h>

#include "helpers.hpp"
#include "rloops/perm.hpp"

using namespace rloops;

TEST_CASE("parse and format round trip") {
  for (const char* c : {"()", "(1,2)", "(1,3)(2,4)", "(1,5,7,6,8)", "(1,2,3,4)(5,6,7,8)"})
    CHECK(format_cycles(parse_cycles(c, 8)) == c);
  CHECK(format_cycles(parse_cycles("(2,1)", 3)) == "(1,2)");
  CHECK(parse_cycles("(1 2 3)", 3) == parse_cycles("(1,2,3)", 3));
}

TEST_CASE("composition applies the left factor first") {
  const Perm a = parse_cycles("(1,2)", 3);
  const Perm b = parse_cycles("(1,3)", 3);
  // 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
  CHECK(a * b == parse_cycles("(1,2,3)", 3));
  CHECK(b * a == parse_cycles("(1,3,2)", 3));
  CHECK(testing::images(a * b) == testing::then(testing::images(a), testing::images(b)));
}

TEST_CASE("inverse, conjugate and commutator against plain arithmetic") {
  rloops::SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point> ia(6), ib(6);
    for (Point i = 0; i < 6; ++i) ia[i] = ib[i] = i;
    for (std::size_t i = 6; i > 1; --i) {
      std::swap(ia[i - 1], ia[rng.below(i)]);
      std::swap(ib[i - 1], ib[rng.below(i)]);
    }
    const Perm a(ia), b(ib);
    CHECK((a * a.inverse()).is_identity());
    const auto inv = [](const testing::Img& p) {
      testing::Img r(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<Point>(i);
      return r;
    };
    CHECK(testing::images(conjugate(a, b)) == testing::then(testing::then(inv(ib), ia), ib));
    CHECK(testing::images(commutator(a, b)) ==
          testing::then(testing::then(testing::then(inv(ia), inv(ib)), ia), ib));
  }
}

TEST_CASE("malformed cycles are input errors") {
  CHECK_THROWS_AS(parse_cycles("(1,4)", 3), InputError);
  CHECK_THROWS_AS(parse_cycles("(1,1)", 3), InputError);
  // cycles must be disjoint
  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 3), InputError);
  CHECK_THROWS_AS(parse_cycles("(1,2", 3), InputError);
  CHECK_THROWS_AS(parse_cycles("(0,1)", 3), InputError);
  CHECK_THROWS_AS(parse_cycles("()(1,2)x", 3), InputError);
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0}), InputError);
}
