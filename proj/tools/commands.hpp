#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace rloops::cli {

struct SubgroupArgs {
  std::vector<std::string> gens;   // 1-based cycles
  std::optional<std::size_t> stabilizer;  // 1-based point
  bool given() const { return !gens.empty() || stabilizer.has_value(); }
};

struct GroupInfoArgs {
  std::string group_file;
  SubgroupArgs subgroup;
};

struct LoopAnalyzeArgs {
  std::string loop_file;
};

struct TransArgs {
  std::string group_file;
  SubgroupArgs subgroup;
  std::vector<std::string> reps;
  std::string reps_file;
  std::string convention = "ltr";
};

struct SearchArgs {
  std::string group_file;
  SubgroupArgs subgroup;
  bool exhaustive = false;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  bool generating = false;
  bool solvable = false;
  bool nilpotent = false;
  bool not_nilpotent = false;
  std::size_t cap = 0;  // 0: library default
};

struct VerifyArgs {
  std::vector<std::string> only;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
};

Report group_info(const GroupInfoArgs& args);
Report loop_analyze(const LoopAnalyzeArgs& args);
Report trans_analyze(const TransArgs& args);
Report trans_search(const SearchArgs& args);
Report verify_paper(const VerifyArgs& args);

}  // namespace rloops::cli
