// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance            every criterion
//   acceptance 4 10       selected criteria
//
// Exit status is 0 iff every selected criterion passes.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>

#include "rloops/center.hpp"
#include "rloops/congruence.hpp"
#include "rloops/fixtures.hpp"
#include "rloops/oracle.hpp"
#include "rloops/transversal.hpp"
#include "rloops/verify.hpp"

using namespace rloops;
namespace fx = rloops::fixtures;

namespace {

// Every algebraic comparison below is exact equality; only the time budgets
// carry a tolerance.
constexpr double kBudget1 = 1.0;     // seconds
constexpr double kBudget2 = 5.0;
constexpr double kBudget3 = 1.0;
constexpr double kBudget4 = 60.0;
constexpr double kBudget5 = 10.0;
constexpr double kBudget6 = 120.0;
constexpr double kBudget7 = 5.0;
constexpr double kBudget8 = 30.0;
constexpr double kBudget9 = 60.0;
constexpr double kBudget10 = 1.0;
constexpr double kBudget11 = 300.0;
constexpr std::size_t kAlt5Samples = 500;
constexpr std::uint64_t kSeed = 1;

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (failures_) s << ", " << failures_ << " failed, first: " << first_;
    return s.str();
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string first_;
};

std::string set_str(const ElemSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::vector<RightLoop> census() {
  std::vector<RightLoop> out = enumerate_right_loops(3);
  for (auto& s : enumerate_right_loops(4)) out.push_back(std::move(s));
  return out;
}

ElemSet group_indices(const PermGroup& g, const PermGroup& sub) {
  ElemSet out;
  for (const Perm& x : sub.elements()) out.push_back(static_cast<Elem>(*g.index_of(x)));
  std::sort(out.begin(), out.end());
  return out;
}

// image of the coset action on loop indices equals G_SS, H goes onto G_S
void embedding_checks(Tally& t, const Transversal& tr) {
  const GroupHom act = coset_action(tr.pair().group(), tr.pair().subgroup(), tr.reps());
  const RightLoop& s = tr.loop();
  t.check(act.image() == gss_group(s).group, "coset-action image != G_SS");
  std::vector<Perm> himg;
  for (const Perm& h : tr.pair().subgroup().elements()) himg.push_back(act(h));
  t.check(PermGroup::generate(s.order(), himg) == group_torsion(s), "image of H != G_S");
}

std::string c1(Tally& t) {
  const auto ex = fx::alt4_example();
  const Transversal tr = ex.transversal();
  const RightLoop& s = tr.loop();
  t.check(tr.pair().core_free(), "H not core-free");
  t.check(tr.generating(), "S not generating");
  t.check(gss_group(s).group.order() == 12, "|G_SS| != 12");
  t.check(group_torsion(s).order() == 2, "|G_S| != 2");
  embedding_checks(t, tr);
  t.check(center_set(s) == ElemSet{0}, "Z(S) != {I}");
  t.check(derived_series_loop(s).solvable, "S not solvable");
  t.check(!is_nilpotent(s), "S nilpotent");
  const ElemSet sn = tr.elements_in(normalizer(tr.pair().group(), tr.pair().subgroup()));
  const auto cong = congruence_from_invariant(s, sn);
  t.check(cong.has_value(), "S∩N_G(H) not invariant");
  if (cong) t.check(loops_isomorphic(quotient_loop(s, *cong).loop, RightLoop::cyclic(3)).has_value(), "quotient not C3");
  return "";
}

std::string c2(Tally& t) {
  const Transversal tr = fx::sym8_example().transversal();
  const PermGroup& g = tr.pair().group();
  const RightLoop& s = tr.loop();
  const PermGroup z = center(g);
  t.check(z.order() == 2 && z.contains(parse_cycles("(1,2)(3,4)(5,6)(7,8)", 8)), "Z(G) differs");
  const ElemSet sn = tr.elements_in(normalizer(g, tr.pair().subgroup()));
  t.check(sn == ElemSet{0, tr.element_of(parse_cycles("(1,2)(3,4)", 8))}, "S∩N_G(H) = " + set_str(sn));
  t.check(center_set(s) == ElemSet{0}, "Z(S) != {I}");
  t.check(s.order() == 8, "|S| != 8");
  t.check(!is_nilpotent(s), "S nilpotent");
  t.check(tr.generating() && tr.pair().core_free(), "not generating/core-free");
  embedding_checks(t, tr);
  return "|G| = " + std::to_string(g.order()) + ", |H| = " + std::to_string(tr.pair().subgroup().order());
}

std::string c3(Tally& t) {
  std::size_t n = 0;
  for (const auto& pair : fx::sym3_order_two_pairs())
    for (const auto& choice : search_choices(*pair, SearchSpec{})) {
      const Transversal tr = Transversal::from_choice(pair, choice);
      ++n;
      t.check(!(tr.generating() && derived_series_loop(tr.loop()).solvable), "solvable generating transversal found");
    }
  t.check(n == 12, "expected 12 transversals");
  return std::to_string(n) + " transversals";
}

std::string c4(Tally& t) {
  SearchSpec spec;
  spec.mode = SearchMode::sampled;
  spec.samples = kAlt5Samples;
  spec.seed = kSeed;
  std::size_t generating = 0;
  for_each_candidate(fx::alt5_cyclic_pair(), spec, [&](const Transversal&, const CandidateSummary& c) {
    if (!c.generating) return;
    ++generating;
    t.check(!c.solvable, "generating sample " + std::to_string(c.ordinal) + " is solvable");
  });
  std::vector<std::shared_ptr<const GroupPair>> pairs{fx::alt4_example().pair};
  for (auto& p : fx::sym3_order_two_pairs()) pairs.push_back(p);
  for (auto& p : fx::d4_core_free_pairs()) pairs.push_back(p);
  std::string notes;
  for (const auto& p : pairs) {
    const Verdict v = check_solvable_generating_transversals(p, SearchSpec{});
    t.check(v.status == Status::pass, v.witness);
  }
  return std::to_string(generating) + "/" + std::to_string(kAlt5Samples) +
         " samples generating; identities checked on generating candidates of A4, S3, D4";
}

std::string c5(Tally& t) {
  const auto loops = census();
  t.check(loops.size() == 220, "census size");
  for (const auto& s : loops) {
    t.check(oracle::minimum_group_congruence(s) == smallest_group_congruence(s), "group congruence");
    t.check(oracle::minimum_abelian_congruence(s) == smallest_abelian_congruence(s), "abelian congruence");
  }
  return std::to_string(loops.size()) + " loops";
}

std::string c6(Tally& t) {
  std::size_t pairs = 0;
  for (const auto& s : census()) {
    const Congruence full = Congruence::full(s.order());
    for (const auto& beta : oracle::all_congruences_naive(s)) {
      ++pairs;
      t.check(is_centralized(s, beta, full) == oracle::find_centering_congruence(s, beta, full).exists,
              "beta " + beta.to_string());
    }
  }
  return std::to_string(pairs) + " (loop, β) pairs";
}

std::string c7(Tally& t) {
  for (const auto& [name, g] : fx::small_groups()) {
    const RightLoop s = RightLoop::from_group(g);
    t.check(group_torsion(s).is_trivial(), name + ": G_S");
    std::vector<ElemSet> gd;
    for (const auto& term : derived_series(g).terms) {
      const ElemSet e = group_indices(g, term);
      if (gd.empty() || gd.back() != e) gd.push_back(e);
    }
    t.check(derived_series_loop(s).terms == gd, name + ": derived series");
    t.check(center_set(s) == group_indices(g, center(g)), name + ": center");
    t.check(nilpotency_class(s) == nilpotency_class(g), name + ": class");
    if (nilpotency_class(g)) t.check(check_nilpotent_implies_solvable(s).status == Status::pass, name + ": chain");
  }
  return "C4, C2xC2, S3, D4, Q8";
}

std::string c8(Tally& t) {
  std::vector<RightLoop> loops;
  for (const auto& s : enumerate_right_loops(4))
    if (center_set(s).size() > 1) loops.push_back(s);
  const std::size_t centered = loops.size();
  for (const auto& pair : fx::d4_core_free_pairs())
    for (const auto& choice : search_choices(*pair, SearchSpec{})) {
      const Transversal tr = Transversal::from_choice(pair, choice);
      if (is_nilpotent(tr.loop())) loops.push_back(tr.loop());
    }
  loops.push_back(fx::sym8_nilpotent_transversal().loop());
  for (const auto& s : loops) {
    const EtaEmbedding e = eta_embedding(s);
    std::set<std::vector<Elem>> images(e.eta.begin(), e.eta.end());
    t.check(images.size() == e.kernel.order(), "η not injective");
    if (is_nilpotent(s)) {
      const KernelSeries ks = kernel_series(s);
      t.check(ks.torsion_solvable == derived_series(group_torsion(s)).solvable, "G_S solvability");
    }
  }
  return std::to_string(centered) + " order-4 loops with nontrivial center, " + std::to_string(loops.size() - centered) +
         " nilpotent transversal loops";
}

std::string c9(Tally& t) {
  const Transversal a4 = fx::alt4_example().transversal();
  t.check(check_quotient_by_normal_overgroup(a4, fx::klein_four()).status == Status::pass, "A4, N = V4");
  const auto u = congruence_from_invariant(a4.loop(), a4.elements_in(fx::klein_four()));
  t.check(u && check_theta_closed_congruence(a4, *u).status == Status::pass, "A4, U from S∩V4");
  std::size_t normals = 0;
  for (const auto& pair : fx::d4_core_free_pairs()) {
    std::vector<PermGroup> ns;
    for (const auto& n : all_subgroups(pair->group()))
      if (n.order() < pair->group().order() && pair->subgroup().is_subgroup_of(n) && is_normal(pair->group(), n))
        ns.push_back(n);
    t.check(!ns.empty(), "D4: no proper normal overgroup (would be inconclusive)");
    normals += ns.size();
    for (const auto& choice : search_choices(*pair, SearchSpec{})) {
      const Transversal tr = Transversal::from_choice(pair, choice);
      for (const auto& n : ns) t.check(check_quotient_by_normal_overgroup(tr, n).status == Status::pass, "D4 quotient");
      t.check(check_theta_closed_congruence(tr, theta_congruence(tr)).status == Status::pass, "D4 θ-congruence");
    }
  }
  return std::to_string(normals) + " (H, N) pairs on D4";
}

std::string c10(Tally& t) {
  std::size_t lem3_bad = 0, lem4_bad = 0, total = 0;
  std::string example;
  for (const auto& pair : fx::d4_core_free_pairs()) {
    const PermGroup& g = pair->group();
    const PermGroup z = center(g);
    const PermGroup phi = frattini(g);
    for (const auto& choice : search_choices(*pair, SearchSpec{})) {
      const Transversal tr = Transversal::from_choice(pair, choice);
      ++total;
      const ElemSet zs = tr.elements_in(z);
      const ElemSet zl = center_set(tr.loop());
      if (zs != zl) {
        ++lem3_bad;
        if (example.empty()) {
          example = "H = <" + format_cycles(pair->subgroup().generators()[0]) + ">, S = {";
          for (std::size_t i = 0; i < tr.size(); ++i) example += (i ? ", " : "") + format_cycles(tr.rep(i));
          example += "}: Z(G)∩S = " + set_str(zs) + ", Z(S) = " + set_str(zl);
        }
      }
      t.check(zs == zl, "Z(G)∩S = Z(S)");
      if (tr.generating()) {
        ElemSet both;
        for (Elem x : zs)
          if (phi.contains(tr.rep(x))) both.push_back(x);
        if (both != ElemSet{0}) ++lem4_bad;
        t.check(both == ElemSet{0}, "Z(G)∩Φ(G)∩S = {1}");
      }
    }
  }
  return std::to_string(total) + " transversals; Z(G)∩S != Z(S) on " + std::to_string(lem3_bad) +
         ", Z(G)∩Φ(G)∩S != {1} on " + std::to_string(lem4_bad) + " generating ones" +
         (example.empty() ? "" : "; e.g. " + example);
}

std::string run_cli() {
  const std::string cmd = std::string(RLOOPS_CLI) + " verify paper --json - --no-timing --seed " + std::to_string(kSeed);
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return {};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}

std::string c11(Tally& t) {
  const std::string a = run_cli();
  const std::string b = run_cli();
  t.check(!a.empty() && a.find("\"schema\": 1") != std::string::npos, "CLI produced no report");
  t.check(a == b, "outputs differ");
  return std::to_string(a.size()) + " bytes, identical";
}

struct Criterion {
  int id;
  const char* title;
  double budget;
  std::function<std::string(Tally&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "Alt(4) transversal example", kBudget1, c1},
      {2, "Sym(8) transversal example", kBudget2, c2},
      {3, "Sym(3) has no solvable generating transversal", kBudget3, c3},
      {4, "Alt(5) sampled contrapositive and proof identities", kBudget4, c4},
      {5, "minimality of group and abelian congruences", kBudget5, c5},
      {6, "centering relation vs exhaustive search", kBudget6, c6},
      {7, "group table consistency", kBudget7, c7},
      {8, "center-kernel embedding and kernel series", kBudget8, c8},
      {9, "quotients by normal overgroups and θ-closed congruences", kBudget9, c9},
      {10, "class-two center identities on D4", kBudget10, c10},
      {11, "deterministic verify report", kBudget11, c11},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));

  bool all = true;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    Tally t;
    std::string note;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      note = c.run(t);
    } catch (const std::exception& e) {
      t.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    t.check(secs < c.budget, "over time budget");
    const bool ok = t.ok();
    all = all && ok;
    std::printf("%s criterion %2d: %s [exact, %.3fs of %.0fs] %s%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, secs,
                c.budget, t.summary().c_str(), note.empty() ? "" : "; ", note.c_str());
  }
  return all ? 0 : 1;
}
