#pragma once

// Built-in groups, subgroups and transversals used by the verification suite,
// the tests and the CLI.

#include <memory>
#include <string>
#include <vector>

#include "rloops/perm_group.hpp"
#include "rloops/right_loop.hpp"
#include "rloops/transversal.hpp"

namespace rloops::fixtures {

/// Elements written for right-to-left composition (apply the right factor
/// first). Inversion turns them into the same elements under this library's
/// left-to-right product, so subgroups and their cosets are preserved.
Perm rtl_element(std::string_view cycles, std::size_t degree);
std::vector<Perm> rtl_elements(const std::vector<std::string>& cycles, std::size_t degree);

PermGroup cyclic_group(std::size_t n);
PermGroup klein_four();
PermGroup sym3();
PermGroup dihedral8();    // ⟨(1,2,3,4), (1,3)⟩
PermGroup quaternion8();  // regular representation on 8 points
PermGroup alt4();
PermGroup alt5();

struct NamedGroup {
  std::string name;
  PermGroup group;
};
/// C4, C2×C2, S3, D4, Q8.
std::vector<NamedGroup> small_groups();

/// Order-3 right loop induced by {(), (1,3), (2,3)} for H = ⟨(1,2)⟩ in Sym(3).
RightLoop rl3();
Transversal rl3_transversal();

struct ExampleTransversal {
  std::shared_ptr<const GroupPair> pair;
  std::vector<Perm> reps;  // already converted to left-to-right composition
  Transversal transversal() const { return Transversal::from_reps(pair, reps); }
};

/// Alt(4), H = {I, (1,2)(3,4)}, S of size 6.
ExampleTransversal alt4_example();
/// The order-32 subgroup of Sym(8), H = stabilizer of point 1, S of size 8.
ExampleTransversal sym8_example();
PermGroup sym8_example_group();
/// A nilpotent generating transversal for the same group and subgroup.
Transversal sym8_nilpotent_transversal();

/// The subgroups of order 2 in Sym(3).
std::vector<std::shared_ptr<const GroupPair>> sym3_order_two_pairs();
/// Core-free subgroups of order 2 in D4.
std::vector<std::shared_ptr<const GroupPair>> d4_core_free_pairs();
/// Alt(5) with H = ⟨(1,2,3,4,5)⟩.
std::shared_ptr<const GroupPair> alt5_cyclic_pair();

std::shared_ptr<const GroupPair> make_pair(const PermGroup& g, const PermGroup& h);
PermGroup subgroup_generated(const PermGroup& g, const std::vector<std::string>& cycles);
/// Stabilizer of a 0-based point.
PermGroup stabilizer(const PermGroup& g, Point p);

}  // namespace rloops::fixtures
