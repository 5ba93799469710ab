#include <doctest.h>

#include "helpers.hpp"
#include "rloops/congruence.hpp"
#include "rloops/fixtures.hpp"
#include "rloops/oracle.hpp"

using namespace rloops;
namespace fx = rloops::fixtures;

TEST_CASE("partition counts are Bell numbers") {
  CHECK(oracle::all_partitions(1).size() == 1);
  CHECK(oracle::all_partitions(3).size() == 5);
  CHECK(oracle::all_partitions(4).size() == 15);
  CHECK(oracle::all_partitions(6).size() == 203);
}

TEST_CASE("congruence labels are canonical") {
  const Congruence c = Congruence::from_labels(std::vector<Elem>{5, 5, 2, 5});
  CHECK(std::vector<Elem>(c.labels().begin(), c.labels().end()) == std::vector<Elem>{0, 0, 1, 0});
  CHECK(c.num_classes() == 2);
  CHECK(c.identity_class() == ElemSet{0, 1, 3});
  CHECK(Congruence::diagonal(4).refines(c));
  CHECK(c.refines(Congruence::full(4)));
  CHECK_FALSE(c.refines(Congruence::diagonal(4)));
}

TEST_CASE("lattice matches brute force on small loops") {
  std::vector<RightLoop> loops = enumerate_right_loops(3);
  for (auto& s : enumerate_right_loops(4)) loops.push_back(s);
  rloops::SplitMix64 rng(5);
  for (int i = 0; i < 10; ++i) loops.push_back(testing::random_right_loop(6, rng));
  for (const auto& s : loops) {
    const auto lattice = all_congruences(s);
    CHECK(lattice.congruences == oracle::all_congruences_naive(s));
    for (const auto& c : lattice.congruences) CHECK(is_congruence(s, c));
  }
}

TEST_CASE("known lattices") {
  CHECK(all_congruences(RightLoop::cyclic(4)).size() == 3);
  CHECK(all_congruences(RightLoop::from_group(fx::klein_four())).size() == 5);
  CHECK(all_congruences(RightLoop::from_group(fx::sym3())).size() == 3);
  CHECK(all_congruences(fx::rl3()).size() == 2);
}

TEST_CASE("principal congruence is the least congruence relating the pair") {
  rloops::SplitMix64 rng(9);
  for (int t = 0; t < 10; ++t) {
    const RightLoop s = testing::random_right_loop(5, rng);
    const auto all = oracle::all_congruences_naive(s);
    for (Elem a = 0; a < 5; ++a)
      for (Elem b = a + 1; b < 5; ++b) {
        const Congruence p = principal_congruence(s, a, b);
        CHECK(p.related(a, b));
        for (const auto& c : all)
          if (c.related(a, b)) CHECK(p.refines(c));
      }
  }
}

TEST_CASE("join and meet agree with the lattice order") {
  const RightLoop s = RightLoop::from_group(fx::dihedral8());
  const auto lat = all_congruences(s);
  const std::size_t n = lat.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Congruence& a = lat.congruences[i];
      const Congruence& b = lat.congruences[j];
      const Congruence& jn = lat.congruences[lat.join_table[i * n + j]];
      const Congruence& mt = lat.congruences[lat.meet_table[i * n + j]];
      CHECK(jn == join(s, a, b));
      CHECK(mt == meet(a, b));
      CHECK(a.refines(jn));
      CHECK(mt.refines(b));
    }
}

TEST_CASE("invariant subloops round trip") {
  const RightLoop s = fx::alt4_example().transversal().loop();
  for (const auto& t : invariant_subloops(s)) {
    CHECK(is_invariant_subloop(s, t));
    CHECK(invariant_from_congruence(require_invariant(s, t)) == t);
  }
  // a subloop is invariant exactly when it is the identity class of some congruence
  const auto invariant = invariant_subloops(s);
  std::size_t rejected = 0;
  for (Elem x = 1; x < s.order(); ++x) {
    const ElemSet t{0, x};
    if (!is_subloop(s, t)) continue;
    bool is_class = false;
    for (const auto& c : oracle::all_congruences_naive(s)) is_class = is_class || c.identity_class() == t;
    CHECK(congruence_from_invariant(s, t).has_value() == is_class);
    if (!is_class) {
      ++rejected;
      CHECK_THROWS_AS(require_invariant(s, t), InputError);
    }
  }
  CHECK(rejected == 0);
  // in RL3 the subloop {0,1} is not the class of any congruence
  CHECK(is_subloop(fx::rl3(), {0, 1}));
  CHECK_FALSE(congruence_from_invariant(fx::rl3(), {0, 1}).has_value());
  CHECK_THROWS_AS(require_invariant(fx::rl3(), {0, 1}), InputError);
}

TEST_CASE("quotients") {
  const RightLoop c4 = RightLoop::cyclic(4);
  const Congruence half = Congruence::from_labels(std::vector<Elem>{0, 1, 0, 1});
  const Quotient q = quotient_loop(c4, half);
  CHECK(q.loop == RightLoop::cyclic(2));
  CHECK(q.projection.map == std::vector<Elem>{0, 1, 0, 1});
  CHECK_THROWS_AS(quotient_loop(c4, Congruence::from_labels(std::vector<Elem>{0, 0, 1, 1})), std::logic_error);
}

TEST_CASE("smallest group and abelian congruences") {
  CHECK(smallest_group_congruence(fx::rl3()).is_full());
  CHECK(smallest_group_congruence(RightLoop::from_group(fx::sym3())).is_diagonal());
  const Congruence ab = smallest_abelian_congruence(RightLoop::from_group(fx::sym3()));
  CHECK(ab.num_classes() == 2);
  CHECK(oracle::quotient_is_abelian_group(RightLoop::from_group(fx::sym3()), ab));

  const RightLoop s = fx::alt4_example().transversal().loop();
  const Congruence g = smallest_group_congruence(s);
  CHECK(oracle::quotient_is_group(s, g));
  CHECK(oracle::minimum_group_congruence(s) == g);
  CHECK(oracle::minimum_abelian_congruence(s) == smallest_abelian_congruence(s));
}

TEST_CASE("derived series of loops") {
  const LoopDerivedSeries a4 = derived_series_loop(fx::alt4_example().transversal().loop());
  CHECK(a4.solvable);
  CHECK(a4.terms.size() == 3);
  CHECK(a4.terms[1].size() == 2);
  const LoopDerivedSeries rl3 = derived_series_loop(fx::rl3());
  CHECK_FALSE(rl3.solvable);
  CHECK(derived_subloop(fx::rl3()) == ElemSet{0, 1, 2});
}

TEST_CASE("torsion homomorphism orders") {
  const RightLoop s = fx::alt4_example().transversal().loop();
  for (const auto& c : all_congruences(s).congruences) {
    const TorsionHom th = torsion_hom(s, c);
    CHECK(th.source.order() == th.kernel.order() * th.target.order());
    CHECK(th.images.size() == th.source.order());
  }
}

TEST_CASE("correspondence theorem on group quotients") {
  const RightLoop s = RightLoop::from_group(fx::dihedral8());
  for (const auto& c : all_congruences(s).congruences) {
    const Quotient q = quotient_loop(s, c);
    CHECK(correspondence_check(q.projection));
    for (const auto& u : invariant_subloops(q.loop))
      CHECK(image_invariant(q.projection, preimage_invariant(q.projection, u)) == u);
  }
}
