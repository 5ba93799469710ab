#pragma once

#include <string>
#include <string_view>

namespace rloops {

enum class Status { pass, fail, inconclusive };

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

/// Outcome of one mechanical check. `witness` explains a failure or an
/// inconclusive precondition; for passes it summarizes what was covered.
struct Verdict {
  std::string anchor;
  Status status = Status::pass;
  std::string witness;

  bool passed() const { return status == Status::pass; }

  static Verdict pass(std::string anchor, std::string note = {}) {
    return {std::move(anchor), Status::pass, std::move(note)};
  }
  static Verdict fail(std::string anchor, std::string witness) {
    return {std::move(anchor), Status::fail, std::move(witness)};
  }
  static Verdict inconclusive(std::string anchor, std::string why) {
    return {std::move(anchor), Status::inconclusive, std::move(why)};
  }
};

}  // namespace rloops
