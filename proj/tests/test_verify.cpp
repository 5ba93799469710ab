#include <doctest.h>

#include <algorithm>

#include "rloops/error.hpp"
#include "rloops/verify.hpp"

using namespace rloops;

TEST_CASE("suites are sorted and unique") {
  const auto& suites = verification_suites();
  CHECK(suites.size() == 19);
  CHECK(std::is_sorted(suites.begin(), suites.end(), [](const Suite& a, const Suite& b) { return a.anchor < b.anchor; }));
  CHECK(std::adjacent_find(suites.begin(), suites.end(), [](const Suite& a, const Suite& b) {
          return a.anchor == b.anchor;
        }) == suites.end());
}

TEST_CASE("filtering") {
  const auto v = run_verification(VerifyOptions{}, {"sym8-example", "alt4-example"});
  REQUIRE(v.size() == 2);
  CHECK(v[0].anchor == "alt4-example");
  CHECK(v[1].anchor == "sym8-example");
  CHECK(v[0].status == Status::pass);
  CHECK(v[1].status == Status::pass);
  CHECK_THROWS_AS(run_verification(VerifyOptions{}, {"no-such-suite"}), InputError);
}

TEST_CASE("sampled suite is reproducible") {
  VerifyOptions o;
  o.alt5_samples = 60;
  o.seed = 5;
  const auto a = run_verification(o, {"solvable-generating-alt5-sampled"});
  const auto b = run_verification(o, {"solvable-generating-alt5-sampled"});
  CHECK(a[0].witness == b[0].witness);
  CHECK(a[0].status == Status::pass);
}
