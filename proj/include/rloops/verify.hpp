#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rloops/verdict.hpp"

namespace rloops {

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t alt5_samples = 500;
};

struct Suite {
  std::string anchor;
  std::string summary;
  std::function<Verdict(const VerifyOptions&)> run;
};

/// Every built-in suite, sorted by anchor.
const std::vector<Suite>& verification_suites();

/// Runs the selected suites (all when `only` is empty) in anchor order. An
/// unknown anchor is an InputError. Exceptions escaping a suite become
/// failing verdicts carrying the exception text.
std::vector<Verdict> run_verification(const VerifyOptions& options, const std::vector<std::string>& only = {});

}  // namespace rloops
