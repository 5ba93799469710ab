#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "rloops/center.hpp"
#include "rloops/fixtures.hpp"
#include "rloops/oracle.hpp"

using namespace rloops;
namespace fx = rloops::fixtures;

namespace {

std::vector<RightLoop> census() {
  std::vector<RightLoop> out = enumerate_right_loops(3);
  for (auto& s : enumerate_right_loops(4)) out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("pair algebra layout") {
  const RightLoop s = RightLoop::cyclic(4);
  const Congruence beta = Congruence::from_labels(std::vector<Elem>{0, 1, 0, 1});
  const PairAlgebra pa(s, beta);
  CHECK(pa.size() == 8);
  CHECK(pa.pair(0) == std::pair<Elem, Elem>{0, 0});
  CHECK(pa.pair(1) == std::pair<Elem, Elem>{0, 2});
  CHECK_FALSE(pa.index_of(0, 1).has_value());
  for (Elem i = 0; i < pa.size(); ++i) {
    const auto [x, y] = pa.pair(i);
    CHECK(pa.index_of(x, y) == i);
    for (Elem j = 0; j < pa.size(); ++j) {
      const auto [u, v] = pa.pair(j);
      CHECK(pa.pair(pa.loop().op(i, j)) == std::pair<Elem, Elem>{s.op(x, u), s.op(y, v)});
    }
  }
}

TEST_CASE("diagonal is always centralized by the full congruence") {
  for (const auto& s : census()) CHECK(is_centralized(s, Congruence::diagonal(s.order()), Congruence::full(s.order())));
  CHECK(is_centralized(fx::rl3(), Congruence::diagonal(3), Congruence::full(3)));
}

TEST_CASE("generated relation agrees with exhaustive search on random loops") {
  rloops::SplitMix64 rng(21);
  for (int t = 0; t < 12; ++t) {
    const RightLoop s = testing::random_right_loop(5, rng);
    const Congruence full = Congruence::full(5);
    for (const auto& beta : oracle::all_congruences_naive(s)) {
      const CentralityResult r = check_centralized(s, beta, full);
      CHECK(r.centralized == oracle::find_centering_congruence(s, beta, full).exists);
      if (!r.centralized) CHECK_FALSE(r.witness.empty());
    }
  }
}

TEST_CASE("oracle witnesses satisfy the conditions") {
  const RightLoop s = RightLoop::from_group(fx::klein_four());
  const Congruence full = Congruence::full(4);
  for (const auto& beta : oracle::all_congruences_naive(s)) {
    const auto found = oracle::find_centering_congruence(s, beta, full);
    REQUIRE(found.exists);
    const PairAlgebra pa(s, beta);
    CHECK(check_centering_conditions(pa, full, Congruence::from_labels(*found.witness)).centralized);
  }
}

TEST_CASE("centers of groups are group centers") {
  for (const auto& [name, g] : fx::small_groups()) {
    CAPTURE(name);
    const RightLoop s = RightLoop::from_group(g);
    ElemSet expect;
    for (Elem x = 0; x < s.order(); ++x) {
      bool central = true;
      for (Elem y = 0; y < s.order(); ++y) central = central && s.op(x, y) == s.op(y, x);
      if (central) expect.push_back(x);
    }
    CHECK(center_set(s) == expect);
    CHECK(center_set(s, kDefaultCenterCap, Exec::serial) == expect);
  }
}

TEST_CASE("center of the census: only groups have a nontrivial center") {
  std::size_t nontrivial = 0;
  for (const auto& s : enumerate_right_loops(4)) {
    const ElemSet z = center_set(s);
    if (z.size() > 1) {
      ++nontrivial;
      CHECK(testing::associative(s));
    }
  }
  CHECK(nontrivial == 4);
}

TEST_CASE("center is a commuting, associating subloop") {
  rloops::SplitMix64 rng(33);
  std::vector<RightLoop> loops{fx::sym8_nilpotent_transversal().loop(), fx::alt4_example().transversal().loop()};
  for (int t = 0; t < 10; ++t) loops.push_back(testing::random_right_loop(6, rng));
  for (const auto& s : loops) {
    const ElemSet z = center_set(s);
    CHECK(is_subloop(s, z));
    for (Elem a : z)
      for (Elem x = 0; x < s.order(); ++x) {
        CHECK(s.op(a, x) == s.op(x, a));
        for (Elem y = 0; y < s.order(); ++y) {
          CHECK(s.op(s.op(a, x), y) == s.op(a, s.op(x, y)));
          CHECK(s.op(s.op(x, a), y) == s.op(x, s.op(a, y)));
          CHECK(s.op(s.op(x, y), a) == s.op(x, s.op(y, a)));
        }
      }
  }
}

TEST_CASE("example loops have trivial center") {
  CHECK(center_set(fx::rl3()) == ElemSet{0});
  CHECK(center_set(fx::alt4_example().transversal().loop()) == ElemSet{0});
  CHECK(center_set(fx::sym8_example().transversal().loop()) == ElemSet{0});
}

TEST_CASE("upper central series") {
  const CentralSeries d4 = upper_central_series(RightLoop::from_group(fx::dihedral8()));
  REQUIRE(d4.terms.size() == 3);
  CHECK(d4.terms[1].size() == 2);
  CHECK(d4.terms[2].size() == 8);
  CHECK(d4.nilpotency_class == 2);

  const CentralSeries s3 = upper_central_series(RightLoop::from_group(fx::sym3()));
  CHECK_FALSE(s3.nilpotent);
  CHECK(s3.terms.size() == 1);

  const RightLoop nil = fx::sym8_nilpotent_transversal().loop();
  CHECK(is_nilpotent(nil));
  CHECK_FALSE(testing::associative(nil));
  CHECK(check_nilpotent_implies_solvable(nil).status == Status::pass);
  CHECK(check_nilpotent_implies_solvable(fx::rl3()).status == Status::inconclusive);
}

TEST_CASE("eta is an injective homomorphism") {
  const RightLoop s = fx::sym8_nilpotent_transversal().loop();
  const EtaEmbedding e = eta_embedding(s);
  CHECK(e.factors + 1 == e.zeta.num_classes());
  std::set<std::vector<Elem>> images;
  for (std::size_t i = 0; i < e.kernel.order(); ++i) {
    const Perm& h = e.kernel.element(i);
    REQUIRE(e.eta[i].size() == e.class_reps.size());
    for (std::size_t j = 0; j < e.class_reps.size(); ++j) {
      const Elem z = e.eta[i][j];
      CHECK(std::binary_search(e.center.begin(), e.center.end(), z));
      CHECK(h(e.class_reps[j]) == s.op(z, e.class_reps[j]));
    }
    images.insert(e.eta[i]);
  }
  CHECK(images.size() == e.kernel.order());
}

TEST_CASE("kernel series needs a nilpotent loop") {
  CHECK_THROWS_AS(kernel_series(fx::rl3()), PreconditionNotMet);
  const KernelSeries ks = kernel_series(fx::sym8_nilpotent_transversal().loop());
  CHECK(ks.torsion_solvable);
  CHECK(ks.kernels.size() == *ks.series.nilpotency_class);
  for (std::size_t j = 0; j + 1 < ks.kernels.size(); ++j) CHECK(ks.kernels[j].is_subgroup_of(ks.kernels[j + 1]));
}
