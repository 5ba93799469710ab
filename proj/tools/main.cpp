#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "rloops/error.hpp"
#include "rloops/perm_group.hpp"

namespace {

using namespace rloops;
using namespace rloops::cli;

enum Exit { ok = 0, verification_failed = 1, input_error = 2, cap_exceeded = 3 };

struct Output {
  std::string json_path;
  bool no_timing = false;
};

void add_subgroup_flags(CLI::App* cmd, SubgroupArgs& sub) {
  cmd->add_option("--subgroup-gens", sub.gens, "subgroup generator in 1-based cycle notation (repeatable)");
  cmd->add_option("--stabilizer", sub.stabilizer, "subgroup = stabilizer of this 1-based point");
}

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--json", out.json_path, "write the JSON report to FILE ('-' for stdout)");
  cmd->add_flag("--no-timing", out.no_timing, "omit the timing field");
}

void apply_order_cap() {
  const char* env = std::getenv("RL_MAX_ORDER");
  if (!env) return;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) throw InputError(std::string("RL_MAX_ORDER is not a positive integer: ") + env);
  set_order_cap(static_cast<std::size_t>(v));
}

int emit(Report report, const Output& out, double ms) {
  if (!out.no_timing) report.timing_ms = ms;
  if (out.json_path == "-") {
    std::cout << report.to_json().dump(2) << '\n';
  } else {
    std::cout << report.to_text();
    if (!out.json_path.empty()) {
      std::ofstream f(out.json_path);
      if (!f) throw InputError("cannot write " + out.json_path);
      f << report.to_json().dump(2) << '\n';
    }
  }
  return report.all_passed() ? ok : verification_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Right loops from right transversals"};
  app.require_subcommand(1);

  Output out;
  GroupInfoArgs group_args;
  LoopAnalyzeArgs loop_args;
  TransArgs trans_args;
  SearchArgs search_args;
  VerifyArgs verify_args;

  auto* group = app.add_subcommand("group", "permutation groups")->require_subcommand(1);
  auto* group_info_cmd = group->add_subcommand("info", "order, series, center, and subgroup data");
  group_info_cmd->add_option("file", group_args.group_file, ".grp file")->required();
  add_subgroup_flags(group_info_cmd, group_args.subgroup);
  add_output_flags(group_info_cmd, out);

  auto* loop = app.add_subcommand("loop", "right loops")->require_subcommand(1);
  auto* loop_cmd = loop->add_subcommand("analyze", "validate and analyze a Cayley table");
  loop_cmd->add_option("file", loop_args.loop_file, ".rloop file")->required();
  add_output_flags(loop_cmd, out);

  auto* trans = app.add_subcommand("trans", "right transversals")->require_subcommand(1);
  auto* trans_cmd = trans->add_subcommand("analyze", "analyze one transversal");
  trans_cmd->add_option("file", trans_args.group_file, ".grp file")->required();
  add_subgroup_flags(trans_cmd, trans_args.subgroup);
  trans_cmd->add_option("--reps", trans_args.reps, "representative in cycle notation, 'id' for the identity (repeatable)");
  trans_cmd->add_option("--reps-file", trans_args.reps_file, "one representative per line");
  trans_cmd->add_option("--reps-convention", trans_args.convention,
                        "ltr: products apply the left factor first; rtl: right factor first")
      ->check(CLI::IsMember({"ltr", "rtl"}));
  add_output_flags(trans_cmd, out);

  auto* search_cmd = trans->add_subcommand("search", "enumerate or sample transversals");
  search_cmd->add_option("file", search_args.group_file, ".grp file")->required();
  add_subgroup_flags(search_cmd, search_args.subgroup);
  search_cmd->add_flag("--exhaustive", search_args.exhaustive, "every transversal (default)");
  search_cmd->add_option("--samples", search_args.samples, "number of seeded random transversals");
  search_cmd->add_option("--seed", search_args.seed, "64-bit sampling seed");
  search_cmd->add_option("--cap", search_args.cap, "largest exhaustive search allowed");
  search_cmd->add_flag("--generating", search_args.generating, "keep generating transversals");
  search_cmd->add_flag("--solvable", search_args.solvable, "keep solvable loops");
  search_cmd->add_flag("--nilpotent", search_args.nilpotent, "keep nilpotent loops");
  search_cmd->add_flag("--not-nilpotent", search_args.not_nilpotent, "keep non-nilpotent loops");
  add_output_flags(search_cmd, out);

  auto* verify = app.add_subcommand("verify", "built-in verification suites")->require_subcommand(1);
  auto* paper_cmd = verify->add_subcommand("paper", "run every suite and print the pass/fail matrix");
  paper_cmd->add_option("--only", verify_args.only, "run only this suite (repeatable)");
  paper_cmd->add_option("--seed", verify_args.seed, "seed for the sampled suites");
  paper_cmd->add_option("--samples", verify_args.samples, "Alt(5) sample count");
  add_output_flags(paper_cmd, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  try {
    apply_order_cap();
    const auto t0 = std::chrono::steady_clock::now();
    Report report;
    if (*group_info_cmd) report = group_info(group_args);
    else if (*loop_cmd) report = loop_analyze(loop_args);
    else if (*trans_cmd) report = trans_analyze(trans_args);
    else if (*search_cmd) report = trans_search(search_args);
    else report = verify_paper(verify_args);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return emit(std::move(report), out, ms);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::cap_exceeded: return cap_exceeded;
      case ErrorKind::theorem_violation: return verification_failed;
      default: return input_error;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return input_error;
  }
}
