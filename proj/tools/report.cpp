#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace rloops::cli {

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(std::ostringstream& out, const Json& facts, const std::string& indent) {
  for (const auto& [key, value] : facts.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      render(out, value, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << indent << key << ":\n";
      for (const auto& item : value) out << indent << "  - " << item.dump() << '\n';
    } else {
      out << indent << key << ": " << scalar(value) << '\n';
    }
  }
}

}  // namespace

bool Report::all_passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.status != Status::fail; });
}

Json Report::to_json() const {
  Json j;
  j["schema"] = 1;
  j["subject"] = subject;
  j["subject"]["kind"] = kind;
  j["facts"] = facts;
  j["verdicts"] = Json::array();
  for (const auto& v : verdicts)
    j["verdicts"].push_back({{"anchor", v.anchor}, {"status", std::string(to_string(v.status))}, {"witness", v.witness}});
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  if (timing_ms) j["timing_ms"] = *timing_ms;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  render(out, subject, "");
  render(out, facts, "");
  if (!verdicts.empty()) {
    std::size_t width = 0;
    for (const auto& v : verdicts) width = std::max(width, v.anchor.size());
    out << '\n';
    for (const auto& v : verdicts) {
      out << (v.status == Status::pass ? "PASS " : v.status == Status::fail ? "FAIL " : "INCO ") << v.anchor
          << std::string(width - v.anchor.size() + 2, ' ') << v.witness << '\n';
    }
  }
  if (seed) out << "seed: " << *seed << '\n';
  if (timing_ms) out << "time: " << *timing_ms << " ms\n";
  return out.str();
}

}  // namespace rloops::cli
