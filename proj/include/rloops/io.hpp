#pragma once

#include <istream>
#include <string>
#include <vector>

#include "rloops/perm_group.hpp"
#include "rloops/right_loop.hpp"

namespace rloops {

/// Group description:
///
///     # comment
///     degree 4
///     gen (1,2,3)
///     gen (2,3,4)
///
/// Cycles are 1-based. Errors name the offending line.
struct GroupSpec {
  std::size_t degree = 0;
  std::vector<Perm> generators;
};

GroupSpec parse_group_spec(std::istream& in);
GroupSpec read_group_file(const std::string& path);
PermGroup group_from_spec(const GroupSpec& spec);

/// Right loop description: `order N` followed by N rows of N 0-based entries.
RightLoop parse_loop(std::istream& in);
RightLoop read_loop_file(const std::string& path);

/// One cycle-notation element per line, `id` for the identity, `#` comments.
std::vector<Perm> parse_element_list(std::istream& in, std::size_t degree);
std::vector<Perm> read_element_file(const std::string& path, std::size_t degree);

}  // namespace rloops
