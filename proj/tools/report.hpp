#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rloops/verdict.hpp"

namespace rloops::cli {

using Json = nlohmann::ordered_json;

struct Report {
  std::string kind;  // group, loop, transversal, search, verify
  Json subject = Json::object();
  Json facts = Json::object();
  std::vector<Verdict> verdicts;
  std::optional<std::uint64_t> seed;
  std::optional<double> timing_ms;

  bool all_passed() const;
  Json to_json() const;
  /// Human-readable rendering: facts as `key: value`, then one line per verdict.
  std::string to_text() const;
};

}  // namespace rloops::cli
