#include <doctest.h>

#include "helpers.hpp"
#include "rloops/center.hpp"
#include "rloops/fixtures.hpp"
#include "rloops/transversal.hpp"

using namespace rloops;
namespace fx = rloops::fixtures;

namespace {

Perm cyc(const char* c, std::size_t n) { return parse_cycles(c, n); }

// x∘y by scanning: the representative r with r·(x·y)^-1 in H.
RightLoop naive_induced(const PermGroup& h, const std::vector<Perm>& reps) {
  const std::size_t n = reps.size();
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Perm xy = reps[x] * reps[y];
      std::size_t hits = 0;
      for (Elem r = 0; r < n; ++r)
        if (h.contains(xy * reps[r].inverse())) {
          rows[x][y] = r;
          ++hits;
        }
      REQUIRE(hits == 1);
    }
  return RightLoop::from_table(rows);
}

TransversalDefect defect_of(std::shared_ptr<const GroupPair> pair, const std::vector<Perm>& reps) {
  try {
    Transversal::from_reps(pair, reps);
  } catch (const TransversalError& e) {
    return e.defect();
  }
  FAIL("transversal accepted");
  return TransversalDefect::not_in_group;
}

}  // namespace

TEST_CASE("RL3 from Sym(3)") {
  const Transversal t = fx::rl3_transversal();
  CHECK(t.loop() == fx::rl3());
  CHECK(t.loop() == naive_induced(t.pair().subgroup(), t.reps()));
  CHECK(t.generating());
  // (13)(23) = (132) under left-to-right; (13)∘(23) lies in its coset
  const Elem a = t.element_of(cyc("(1,3)", 3));
  const Elem b = t.element_of(cyc("(2,3)", 3));
  CHECK(cocycle(t, a, b) == cyc("(1,2)", 3));
  for (Elem y = 0; y < 3; ++y) CHECK(cocycle(t, 0, y).is_identity());
  for (const Perm& h : t.pair().subgroup().elements())
    for (Elem x = 0; x < 3; ++x) CHECK(t.pair().subgroup().contains(t.rep(theta(t, x, h)) * (t.rep(x) * h).inverse()));
}

TEST_CASE("induced loop matches the naive construction on every D4 transversal") {
  for (const auto& pair : fx::d4_core_free_pairs())
    for (const auto& choice : search_choices(*pair, SearchSpec{})) {
      const Transversal t = Transversal::from_choice(pair, choice);
      CHECK(t.loop() == naive_induced(pair->subgroup(), t.reps()));
      CHECK(check_torsion_action_agreement(t).status == Status::pass);
    }
}

TEST_CASE("transversal defects") {
  const auto pair = fx::rl3_transversal().pair_ptr();
  const Perm e = Perm::identity(3);
  CHECK(defect_of(pair, {e, cyc("(1,3)", 3), cyc("(1,2,3)", 3)}) == TransversalDefect::duplicate_coset);
  CHECK(defect_of(pair, {e, cyc("(1,3)", 3)}) == TransversalDefect::missing_coset);
  CHECK(defect_of(pair, {cyc("(1,2)", 3), cyc("(1,3)", 3), cyc("(2,3)", 3)}) ==
        TransversalDefect::non_identity_rep_for_h);
  const auto a4 = fx::alt4_example().pair;
  CHECK(defect_of(a4, {Perm::identity(4), cyc("(1,2)", 4)}) == TransversalDefect::not_in_group);
}

TEST_CASE("representative order does not matter") {
  const auto ex = fx::alt4_example();
  std::vector<Perm> reversed(ex.reps.rbegin(), ex.reps.rend());
  CHECK(Transversal::from_reps(ex.pair, reversed).loop() == ex.transversal().loop());
}

TEST_CASE("generating flag against a plain closure") {
  const auto pair = fx::rl3_transversal().pair_ptr();
  std::size_t generating = 0;
  for (const auto& choice : search_choices(*pair, SearchSpec{})) {
    const Transversal t = Transversal::from_choice(pair, choice);
    std::vector<testing::Img> gens;
    for (const Perm& p : t.reps()) gens.push_back(testing::images(p));
    const bool expect = testing::closure(gens).size() == 6;
    CHECK(t.generating() == expect);
    generating += expect;
  }
  // {e,(123),(132)} is the only non-generating transversal
  CHECK(generating == 3);
}

TEST_CASE("embedding into the coset action") {
  CHECK(verify_embedding(fx::rl3_transversal()).status == Status::pass);
  CHECK(verify_embedding(fx::alt4_example().transversal()).status == Status::pass);
  CHECK(verify_embedding(fx::sym8_example().transversal()).status == Status::pass);
  CHECK(verify_embedding(fx::sym8_nilpotent_transversal()).status == Status::pass);
  // A3 inside S3 is not generating
  const auto pair = fx::rl3_transversal().pair_ptr();
  const Transversal a3 = Transversal::from_reps(pair, {Perm::identity(3), cyc("(1,2,3)", 3), cyc("(1,3,2)", 3)});
  CHECK_FALSE(a3.generating());
  CHECK(verify_embedding(a3).status == Status::inconclusive);
}

TEST_CASE("quotient by a normal overgroup") {
  const Transversal t = fx::alt4_example().transversal();
  CHECK(check_quotient_by_normal_overgroup(t, fx::klein_four()).status == Status::pass);
  CHECK(check_quotient_by_normal_overgroup(t, t.pair().group()).status == Status::pass);
  // a normal subgroup missing H does not satisfy the precondition
  CHECK(check_quotient_by_normal_overgroup(t, PermGroup::trivial(4)).status == Status::inconclusive);
}

TEST_CASE("theta congruence") {
  const Transversal rl3 = fx::rl3_transversal();
  CHECK(theta_congruence(rl3).is_full());
  const Transversal a4 = fx::alt4_example().transversal();
  const Congruence u = theta_congruence(a4);
  for (const Perm& h : a4.pair().subgroup().elements())
    for (Elem x = 0; x < a4.size(); ++x) CHECK(u.related(x, theta(a4, x, h)));
  CHECK(check_theta_closed_congruence(a4, u).status == Status::pass);
  CHECK(check_theta_closed_congruence(a4, Congruence::diagonal(6)).status == Status::inconclusive);
}

TEST_CASE("splitmix64 reference values") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);
  SplitMix64 r2(1);
  for (int i = 0; i < 1000; ++i) CHECK(r2.below(7) < 7);
}

TEST_CASE("search stream") {
  const auto pair = fx::rl3_transversal().pair_ptr();
  const auto choices = search_choices(*pair, SearchSpec{});
  REQUIRE(choices.size() == 4);
  // odometer, last coset fastest
  CHECK(choices[0] == std::vector<std::uint32_t>{0, 0, 0});
  CHECK(choices[1] == std::vector<std::uint32_t>{0, 0, 1});
  CHECK(choices[2] == std::vector<std::uint32_t>{0, 1, 0});
  CHECK(choices[3] == std::vector<std::uint32_t>{0, 1, 1});

  CHECK(transversal_count(*fx::alt5_cyclic_pair()) == 48828125);
  CHECK_THROWS_AS(search_choices(*fx::alt5_cyclic_pair(), SearchSpec{}), CapExceeded);

  SearchSpec sampled;
  sampled.mode = SearchMode::sampled;
  sampled.samples = 50;
  sampled.seed = 99;
  CHECK(search_choices(*fx::alt5_cyclic_pair(), sampled) == search_choices(*fx::alt5_cyclic_pair(), sampled));
  sampled.seed = 100;
  const auto other = search_choices(*fx::alt5_cyclic_pair(), sampled);
  sampled.seed = 99;
  CHECK(other != search_choices(*fx::alt5_cyclic_pair(), sampled));
}

TEST_CASE("search predicates") {
  for (const auto& pair : fx::sym3_order_two_pairs()) {
    SearchSpec spec;
    spec.predicates.generating = true;
    spec.predicates.solvable = true;
    const SearchOutcome out = search_transversals(pair, spec);
    CHECK(out.examined == 4);
    CHECK(out.matches.empty());
  }
  for (const auto& pair : fx::d4_core_free_pairs()) {
    SearchSpec spec;
    spec.analyze_center = true;
    const SearchOutcome all = search_transversals(pair, spec);
    CHECK(all.examined == 8);
    CHECK(all.matches.size() == 8);
    spec.predicates.nilpotent = true;
    for (const auto& m : search_transversals(pair, spec).matches) {
      CHECK(*m.nilpotent);
      CHECK_FALSE(m.generating);
    }
  }
}

TEST_CASE("serial and parallel search agree") {
  SearchSpec spec;
  spec.mode = SearchMode::sampled;
  spec.samples = 300;
  spec.seed = 4;
  spec.analyze_center = true;
  const auto pair = fx::alt5_cyclic_pair();
  spec.exec = Exec::serial;
  const SearchOutcome a = search_transversals(pair, spec);
  spec.exec = Exec::parallel;
  const SearchOutcome b = search_transversals(pair, spec);
  REQUIRE(a.matches.size() == b.matches.size());
  for (std::size_t i = 0; i < a.matches.size(); ++i) {
    CHECK(a.matches[i].ordinal == b.matches[i].ordinal);
    CHECK(a.matches[i].reps == b.matches[i].reps);
    CHECK(a.matches[i].solvable == b.matches[i].solvable);
    CHECK(a.matches[i].center_size == b.matches[i].center_size);
  }
}

TEST_CASE("theorem checks on fixtures") {
  CHECK(check_solvable_generating_transversals(fx::alt4_example().pair, SearchSpec{}).status == Status::pass);
  for (const auto& p : fx::sym3_order_two_pairs())
    CHECK(check_solvable_generating_transversals(p, SearchSpec{}).status == Status::pass);
  CHECK(check_nilpotent_transversal_corollaries(fx::sym8_nilpotent_transversal()).status == Status::pass);
  CHECK(check_nilpotent_transversal_corollaries(fx::alt4_example().transversal()).status == Status::inconclusive);
  // class three: the class-two statements do not apply
  CHECK(check_class_two_centers(fx::sym8_example().pair, SearchSpec{}).status == Status::inconclusive);
}
