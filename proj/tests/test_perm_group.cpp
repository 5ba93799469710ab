#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "rloops/fixtures.hpp"
#include "rloops/perm_group.hpp"

using namespace rloops;
namespace fx = rloops::fixtures;

namespace {

std::size_t naive_order(const PermGroup& g) {
  std::vector<testing::Img> gens;
  for (const Perm& p : g.generators()) gens.push_back(testing::images(p));
  if (gens.empty()) return 1;
  return testing::closure(gens).size();
}

}  // namespace

TEST_CASE("group orders agree with a plain closure") {
  const std::map<std::string, std::pair<PermGroup, std::size_t>> cases{
      {"S3", {fx::sym3(), 6}},         {"A4", {fx::alt4(), 12}}, {"A5", {fx::alt5(), 60}},
      {"D4", {fx::dihedral8(), 8}},    {"Q8", {fx::quaternion8(), 8}},
      {"V4", {fx::klein_four(), 4}},   {"sym8", {fx::sym8_example_group(), 32}},
  };
  for (const auto& [name, c] : cases) {
    CAPTURE(name);
    CHECK(c.first.order() == c.second);
    CHECK(naive_order(c.first) == c.second);
    CHECK(c.first.element(0).is_identity());
  }
}

TEST_CASE("order cap") {
  const PermGroup a5 = fx::alt5();
  const auto gens = a5.generators();
  CHECK_THROWS_AS(PermGroup::generate(5, gens, 59), CapExceeded);
  CHECK(PermGroup::generate(5, gens, 60).order() == 60);
}

TEST_CASE("from_elements rejects non-closed sets") {
  CHECK_THROWS_AS(PermGroup::from_elements(3, {Perm::identity(3), parse_cycles("(1,2,3)", 3)}), InputError);
}

TEST_CASE("cosets partition the group with H first") {
  const PermGroup g = fx::alt4();
  const PermGroup h = fx::subgroup_generated(g, {"(1,2)(3,4)"});
  const CosetDecomposition cd = right_cosets(g, h);
  REQUIRE(cd.size() == 6);
  std::vector<int> seen(g.order(), 0);
  for (std::size_t i = 0; i < cd.size(); ++i) {
    CHECK(cd.coset(i).size() == 2);
    for (auto e : cd.coset(i)) {
      ++seen[e];
      CHECK(cd.coset_of(g.element(e)) == i);
      // same right coset: rep * e^-1 in H
      CHECK(h.contains(cd.rep(i) * g.element(e).inverse()));
    }
  }
  for (int s : seen) CHECK(s == 1);
  CHECK(cd.rep(0).is_identity());
}

TEST_CASE("center, derived series, normalizer") {
  CHECK(center(fx::dihedral8()).order() == 2);
  CHECK(center(fx::quaternion8()).order() == 2);
  CHECK(center(fx::sym3()).order() == 1);
  CHECK(center(fx::alt4()).order() == 1);
  CHECK(center(fx::sym8_example_group()).order() == 2);

  auto orders = [](const PermGroup& g) {
    std::vector<std::size_t> o;
    for (const auto& t : derived_series(g).terms) o.push_back(t.order());
    return o;
  };
  CHECK(orders(fx::alt4()) == std::vector<std::size_t>{12, 4, 1});
  CHECK(orders(fx::sym3()) == std::vector<std::size_t>{6, 3, 1});
  CHECK(derived_series(fx::alt4()).solvable);
  CHECK_FALSE(derived_series(fx::alt5()).solvable);
  CHECK(derived_subgroup(fx::alt5()).order() == 60);

  const PermGroup g = fx::alt4();
  const PermGroup h = fx::subgroup_generated(g, {"(1,2)(3,4)"});
  CHECK(normalizer(g, h) == fx::klein_four());
  CHECK(is_normal(g, fx::klein_four()));
  CHECK_FALSE(is_normal(g, h));
}

TEST_CASE("nilpotency class and p-groups") {
  CHECK(nilpotency_class(fx::dihedral8()) == 2);
  CHECK(nilpotency_class(fx::quaternion8()) == 2);
  CHECK(nilpotency_class(fx::klein_four()) == 1);
  CHECK_FALSE(nilpotency_class(fx::sym3()).has_value());
  // lower central series 32 > 4 > 2 > 1
  CHECK(nilpotency_class(fx::sym8_example_group()) == 3);
  CHECK(p_group_prime(fx::dihedral8()) == 2);
  CHECK(p_group_prime(fx::cyclic_group(9)) == 3);
  CHECK_FALSE(p_group_prime(fx::sym3()).has_value());
}

TEST_CASE("core and core-freeness") {
  const PermGroup d4 = fx::dihedral8();
  for (const auto& pair : fx::d4_core_free_pairs()) CHECK(core(d4, pair->subgroup()).core_free);
  CHECK(fx::d4_core_free_pairs().size() == 4);
  // the central involution is never core-free
  const PermGroup z = center(d4);
  CHECK(core(d4, z).core == z);
  CHECK_FALSE(core(d4, z).core_free);
}

TEST_CASE("subgroup lattice sizes and Frattini subgroups") {
  CHECK(all_subgroups(fx::sym3()).size() == 6);
  CHECK(all_subgroups(fx::dihedral8()).size() == 10);
  CHECK(all_subgroups(fx::alt4()).size() == 10);
  CHECK(all_subgroups(fx::quaternion8()).size() == 6);
  CHECK(frattini(fx::dihedral8()) == center(fx::dihedral8()));
  CHECK(frattini(fx::quaternion8()).order() == 2);
  CHECK(frattini(fx::klein_four()).is_trivial());
  CHECK(frattini(fx::sym8_example_group()).order() == 8);
}

TEST_CASE("coset action is a homomorphism with kernel the core") {
  const PermGroup g = fx::alt4();
  const PermGroup h = fx::subgroup_generated(g, {"(1,2)(3,4)"});
  const GroupHom act = coset_action(g, h);
  CHECK(act.is_homomorphism());
  CHECK(act.kernel().is_trivial());
  CHECK(act.image().order() == 12);

  const PermGroup v4 = fx::klein_four();
  const GroupHom act2 = coset_action(g, v4);
  CHECK(act2.kernel() == v4);
  CHECK(act2.image().order() == 3);
  CHECK(quotient_group(g, v4).order() == 3);
}
