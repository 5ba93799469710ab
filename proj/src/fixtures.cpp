#include "rloops/fixtures.hpp"

namespace rloops::fixtures {

namespace {

PermGroup gen(std::size_t degree, std::initializer_list<std::string_view> cycles) {
  std::vector<Perm> g;
  for (auto c : cycles) g.push_back(parse_cycles(c, degree));
  return PermGroup::generate(degree, g);
}

}  // namespace

Perm rtl_element(std::string_view cycles, std::size_t degree) { return parse_cycles(cycles, degree).inverse(); }

std::vector<Perm> rtl_elements(const std::vector<std::string>& cycles, std::size_t degree) {
  std::vector<Perm> out;
  for (const auto& c : cycles) out.push_back(rtl_element(c, degree));
  return out;
}

PermGroup cyclic_group(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return PermGroup::generate(n, std::vector<Perm>{Perm(img)});
}

PermGroup klein_four() { return gen(4, {"(1,2)(3,4)", "(1,3)(2,4)"}); }
PermGroup sym3() { return gen(3, {"(1,2)", "(1,2,3)"}); }
PermGroup dihedral8() { return gen(4, {"(1,2,3,4)", "(1,3)"}); }
PermGroup quaternion8() { return gen(8, {"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"}); }
PermGroup alt4() { return gen(4, {"(1,2,3)", "(2,3,4)"}); }
PermGroup alt5() { return gen(5, {"(1,2,3)", "(1,2,3,4,5)"}); }

std::vector<NamedGroup> small_groups() {
  return {{"C4", cyclic_group(4)}, {"C2xC2", klein_four()}, {"S3", sym3()}, {"D4", dihedral8()},
          {"Q8", quaternion8()}};
}

std::shared_ptr<const GroupPair> make_pair(const PermGroup& g, const PermGroup& h) {
  return std::make_shared<const GroupPair>(g, h);
}

PermGroup subgroup_generated(const PermGroup& g, const std::vector<std::string>& cycles) {
  std::vector<Perm> gens;
  for (const auto& c : cycles) gens.push_back(parse_cycles(c, g.degree()));
  PermGroup h = PermGroup::generate(g.degree(), gens);
  if (!h.is_subgroup_of(g)) throw InputError("generators are not in the group");
  return h;
}

PermGroup stabilizer(const PermGroup& g, Point p) {
  std::vector<Perm> fix;
  for (const Perm& x : g.elements())
    if (x(p) == p) fix.push_back(x);
  return PermGroup::from_elements(g.degree(), std::move(fix));
}

RightLoop rl3() { return RightLoop::from_table({{0, 1, 2}, {1, 0, 1}, {2, 2, 0}}); }

Transversal rl3_transversal() {
  const PermGroup g = sym3();
  auto pair = make_pair(g, subgroup_generated(g, {"(1,2)"}));
  return Transversal::from_reps(pair, {Perm::identity(3), parse_cycles("(1,3)", 3), parse_cycles("(2,3)", 3)});
}

ExampleTransversal alt4_example() {
  const PermGroup g = alt4();
  auto pair = make_pair(g, subgroup_generated(g, {"(1,2)(3,4)"}));
  return {pair, rtl_elements({"()", "(1,3)(2,4)", "(1,2,3)", "(1,3,2)", "(2,3,4)", "(1,3,4)"}, 4)};
}

PermGroup sym8_example_group() {
  std::vector<Perm> gens = rtl_elements({"(1,3)(2,4)(5,7,6,8)", "(1,4)(2,3)(5,8,6,7)", "(1,5)(2,6)(3,7)(4,8)"}, 8);
  return PermGroup::generate(8, gens);
}

ExampleTransversal sym8_example() {
  const PermGroup g = sym8_example_group();
  auto pair = make_pair(g, stabilizer(g, 0));
  return {pair, rtl_elements({"()", "(1,2)(3,4)", "(1,3)(2,4)(5,7,6,8)", "(1,4)(2,3)(5,8,6,7)",
                              "(1,5)(2,6)(3,7)(4,8)", "(1,6)(2,5)(3,8)(4,7)", "(1,7)(2,8)(3,6,4,5)",
                              "(1,8)(2,7)(3,5,4,6)"},
                             8)};
}

std::vector<std::shared_ptr<const GroupPair>> sym3_order_two_pairs() {
  const PermGroup g = sym3();
  std::vector<std::shared_ptr<const GroupPair>> out;
  for (const char* t : {"(1,2)", "(1,3)", "(2,3)"}) out.push_back(make_pair(g, subgroup_generated(g, {t})));
  return out;
}

std::vector<std::shared_ptr<const GroupPair>> d4_core_free_pairs() {
  const PermGroup g = dihedral8();
  std::vector<std::shared_ptr<const GroupPair>> out;
  for (const Perm& x : g.elements()) {
    if (x.is_identity() || !(x * x).is_identity()) continue;
    auto pair = make_pair(g, PermGroup::generate(g.degree(), std::vector<Perm>{x}));
    if (pair->core_free()) out.push_back(std::move(pair));
  }
  return out;
}

Transversal sym8_nilpotent_transversal() {
  const std::vector<std::string> reps{"()",
                                      "(1,2)(3,4)(5,6)(7,8)",
                                      "(1,3)(2,4)(5,7,6,8)",
                                      "(1,4)(2,3)(5,8,6,7)",
                                      "(1,5)(2,6)(3,7)(4,8)",
                                      "(1,6)(2,5)(3,8)(4,7)",
                                      "(1,7,2,8)(3,5)(4,6)",
                                      "(1,8,2,7)(3,6)(4,5)"};
  std::vector<Perm> perms;
  for (const auto& r : reps) perms.push_back(parse_cycles(r, 8));
  return Transversal::from_reps(sym8_example().pair, perms);
}

std::shared_ptr<const GroupPair> alt5_cyclic_pair() {
  const PermGroup g = alt5();
  return make_pair(g, subgroup_generated(g, {"(1,2,3,4,5)"}));
}

}  // namespace rloops::fixtures
