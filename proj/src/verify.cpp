#include "rloops/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rloops/center.hpp"
#include "rloops/congruence.hpp"
#include "rloops/error.hpp"
#include "rloops/fixtures.hpp"
#include "rloops/oracle.hpp"
#include "rloops/transversal.hpp"

namespace rloops {

namespace {

namespace fx = fixtures;

// Collects failures inside a suite; the first one becomes the witness.
class Checker {
 public:
  explicit Checker(std::string anchor) : anchor_(std::move(anchor)) {}

  bool expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    return ok;
  }
  void absorb(const Verdict& v, const std::string& context) {
    ++checks_;
    if (v.status == Status::fail && first_failure_.empty()) first_failure_ = context + ": " + v.witness;
    if (v.status == Status::inconclusive && inconclusive_.empty()) inconclusive_ = context + ": " + v.witness;
  }
  void note(const std::string& s) { notes_.push_back(s); }

  Verdict verdict() const {
    if (!first_failure_.empty()) return Verdict::fail(anchor_, first_failure_);
    if (!inconclusive_.empty()) return Verdict::inconclusive(anchor_, inconclusive_);
    std::string w = std::to_string(checks_) + " checks";
    for (const auto& n : notes_) w += "; " + n;
    return Verdict::pass(anchor_, w);
  }

 private:
  std::string anchor_;
  std::size_t checks_ = 0;
  std::string first_failure_;
  std::string inconclusive_;
  std::vector<std::string> notes_;
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

std::vector<Transversal> all_transversals(const std::shared_ptr<const GroupPair>& pair) {
  std::vector<Transversal> out;
  for (const auto& c : search_choices(*pair, SearchSpec{})) out.push_back(Transversal::from_choice(pair, c));
  return out;
}

std::vector<std::shared_ptr<const GroupPair>> solvable_fixture_pairs() {
  std::vector<std::shared_ptr<const GroupPair>> out{fx::alt4_example().pair};
  for (auto& p : fx::sym3_order_two_pairs()) out.push_back(p);
  for (auto& p : fx::d4_core_free_pairs()) out.push_back(p);
  return out;
}

std::vector<PermGroup> normal_overgroups(const PermGroup& g, const PermGroup& h) {
  std::vector<PermGroup> out;
  for (const auto& n : all_subgroups(g))
    if (n.order() < g.order() && h.is_subgroup_of(n) && is_normal(g, n)) out.push_back(n);
  return out;
}

// Loops whose center, nilpotency and torsion kernels are exercised.
std::vector<std::pair<std::string, RightLoop>> nilpotent_samples() {
  std::vector<std::pair<std::string, RightLoop>> out;
  for (const auto& [name, g] : fx::small_groups())
    if (nilpotency_class(g)) out.emplace_back(name, RightLoop::from_group(g));
  const Transversal t = fx::sym8_nilpotent_transversal();
  out.emplace_back("sym8-group nilpotent transversal", t.loop());
  return out;
}

// ---------------------------------------------------------------------------

Verdict alt4_example(const VerifyOptions&) {
  Checker c("alt4-example");
  const auto ex = fx::alt4_example();
  const Transversal t = ex.transversal();
  const RightLoop& s = t.loop();
  c.expect(t.pair().core_free(), "H is not core-free");
  c.expect(t.generating(), "S does not generate Alt(4)");
  const Verdict emb = verify_embedding(t);
  c.absorb(emb, "embedding");
  c.expect(gss_group(s).group.order() == 12, "|G_SS| != 12");
  c.expect(group_torsion(s).order() == 2, "|G_S| != 2");
  const ElemSet z = center_set(s);
  c.expect(z == ElemSet{0}, "Z(S) = " + set_str(z));
  c.expect(derived_series_loop(s).solvable, "S is not solvable");
  c.expect(!is_nilpotent(s), "S is nilpotent");

  const PermGroup& g = t.pair().group();
  const PermGroup ng = normalizer(g, t.pair().subgroup());
  const ElemSet sn = t.elements_in(ng);
  const ElemSet expected{t.element_of(fx::rtl_element("()", 4)), t.element_of(fx::rtl_element("(1,3)(2,4)", 4))};
  c.expect(sn == expected, "S ∩ N_G(H) = " + set_str(sn));
  c.expect(std::includes(sn.begin(), sn.end(), z.begin(), z.end()), "Z(S) is not inside S ∩ N_G(H)");

  const Elem a = t.element_of(fx::rtl_element("(1,3)(2,4)", 4));
  const Elem b = t.element_of(fx::rtl_element("(1,3,4)", 4));
  c.expect(s.op(a, b) != s.op(b, a), "(1,3)(2,4) and (1,3,4) commute in S");

  // The invariant-subloop route and the normal-subgroup route.
  const auto cong = congruence_from_invariant(s, sn);
  if (c.expect(cong.has_value(), "S ∩ N_G(H) is not an invariant subloop")) {
    const Quotient q = quotient_loop(s, *cong);
    c.expect(loops_isomorphic(q.loop, RightLoop::cyclic(3)).has_value(), "S/(S ∩ N_G(H)) is not cyclic of order 3");
  }
  const PermGroup v4 = fx::klein_four();
  c.absorb(check_quotient_by_normal_overgroup(t, v4), "N = V4");
  c.note(std::string("N_G(H) ") + (is_normal(g, ng) ? "is" : "is not") + " normal in Alt(4)");
  c.note(emb.witness);
  return c.verdict();
}

Verdict sym8_example(const VerifyOptions&) {
  Checker c("sym8-example");
  const auto ex = fx::sym8_example();
  const Transversal t = ex.transversal();
  const RightLoop& s = t.loop();
  const PermGroup& g = t.pair().group();
  const PermGroup& h = t.pair().subgroup();
  const PermGroup zg = center(g);
  const std::vector<Perm> expected_center{Perm::identity(8), parse_cycles("(1,2)(3,4)(5,6)(7,8)", 8)};
  c.expect(std::vector<Perm>(zg.elements().begin(), zg.elements().end()) == expected_center, "Z(G) differs");
  const PermGroup ng = normalizer(g, h);
  std::vector<Perm> hz;
  for (const Perm& x : h.elements())
    for (const Perm& y : zg.elements()) hz.push_back(x * y);
  c.expect(ng == PermGroup::generate(8, hz), "N_G(H) != H Z(G)");
  const ElemSet sn = t.elements_in(ng);
  const ElemSet expected{0, t.element_of(parse_cycles("(1,2)(3,4)", 8))};
  c.expect(sn == expected, "S ∩ N_G(H) = " + set_str(sn));
  const ElemSet z = center_set(s);
  c.expect(z == ElemSet{0}, "Z(S) = " + set_str(z));
  c.expect(s.order() == 8, "|S| != 8");
  c.expect(!is_nilpotent(s), "S is nilpotent");
  c.expect(h.order() == 4, "|H| != 4");
  c.expect(t.pair().core_free(), "H is not core-free");
  c.expect(t.generating(), "S does not generate G");
  const Elem a = t.element_of(parse_cycles("(1,2)(3,4)", 8));
  const Elem b = t.element_of(parse_cycles("(1,5)(2,6)(3,7)(4,8)", 8));
  c.expect(s.op(a, b) != s.op(b, a), "(1,2)(3,4) and (1,5)(2,6)(3,7)(4,8) commute in S");
  const Verdict emb = verify_embedding(t);
  c.absorb(emb, "embedding");
  c.note("|G| = " + std::to_string(g.order()) + ", |H| = " + std::to_string(h.order()));
  return c.verdict();
}

Verdict sym3_remark(const VerifyOptions&) {
  Checker c("sym3-no-solvable-generating-transversal");
  std::size_t examined = 0;
  for (const auto& pair : fx::sym3_order_two_pairs()) {
    SearchSpec spec;
    spec.predicates.generating = true;
    spec.predicates.solvable = true;
    const SearchOutcome out = search_transversals(pair, spec);
    examined += out.examined;
    c.expect(out.examined == 4, "expected 4 transversals per subgroup");
    c.expect(out.matches.empty(), "found a solvable generating transversal of " + format_cycles(pair->subgroup().generators()[0]));
  }
  c.expect(derived_series(fx::sym3()).solvable, "Sym(3) is not solvable");
  c.note(std::to_string(examined) + " transversals, none generating and solvable");
  return c.verdict();
}

Verdict alt5_sampled(const VerifyOptions& o) {
  Checker c("solvable-generating-alt5-sampled");
  SearchSpec spec;
  spec.mode = SearchMode::sampled;
  spec.samples = o.alt5_samples;
  spec.seed = o.seed;
  const auto pair = fx::alt5_cyclic_pair();
  c.absorb(check_solvable_generating_transversals(pair, spec), "Alt(5)");
  std::size_t generating = 0;
  for_each_candidate(pair, spec, [&](const Transversal&, const CandidateSummary& sum) {
    if (!sum.generating) return;
    ++generating;
    c.expect(!sum.solvable, "candidate " + std::to_string(sum.ordinal) + " is generating and solvable");
  });
  c.note(std::to_string(generating) + " of " + std::to_string(spec.samples) + " samples generating, none solvable");
  return c.verdict();
}

Verdict proof_identities(const VerifyOptions&) {
  Checker c("solvable-generating-identities");
  for (const auto& pair : solvable_fixture_pairs()) {
    const Verdict v = check_solvable_generating_transversals(pair, SearchSpec{});
    c.absorb(v, "|G| = " + std::to_string(pair->group().order()) + ", H = <" +
                    format_cycles(pair->subgroup().generators()[0]) + ">");
  }
  return c.verdict();
}

Verdict group_minimality(const VerifyOptions&) {
  Checker c("group-quotient-minimality");
  std::size_t i = 0;
  for (const auto& s : census()) {
    const auto brute = oracle::minimum_group_congruence(s);
    c.expect(brute.has_value() && *brute == smallest_group_congruence(s),
             "census loop " + std::to_string(i) + " of order " + std::to_string(s.order()));
    ++i;
  }
  return c.verdict();
}

Verdict abelian_minimality(const VerifyOptions&) {
  Checker c("abelian-quotient-minimality");
  std::size_t i = 0;
  for (const auto& s : census()) {
    const auto brute = oracle::minimum_abelian_congruence(s);
    c.expect(brute.has_value() && *brute == smallest_abelian_congruence(s),
             "census loop " + std::to_string(i) + " of order " + std::to_string(s.order()));
    ++i;
  }
  return c.verdict();
}

std::vector<std::pair<std::string, RightLoop>> lattice_samples() {
  std::vector<std::pair<std::string, RightLoop>> out;
  std::size_t i = 0;
  for (auto& s : census()) out.emplace_back("census " + std::to_string(i++), std::move(s));
  out.emplace_back("alt4 example", fx::alt4_example().transversal().loop());
  for (const auto& [name, g] : fx::small_groups()) out.emplace_back(name, RightLoop::from_group(g));
  return out;
}

Verdict invariant_correspondence(const VerifyOptions&) {
  Checker c("invariant-subloop-correspondence");
  for (const auto& [name, s] : lattice_samples()) {
    const auto lattice = all_congruences(s);
    const auto naive = oracle::all_congruences_naive(s);
    c.expect(lattice.congruences == naive, name + ": congruence lattice differs from brute force");
    for (const auto& cong : lattice.congruences) {
      const ElemSet t = invariant_from_congruence(cong);
      c.expect(congruence_from_invariant(s, t) == cong, name + ": round trip fails for " + cong.to_string());
      const Quotient q = quotient_loop(s, cong);
      c.expect(hom_validate(q.projection), name + ": projection is not a homomorphism");
      c.expect(hom_kernel(q.projection) == t, name + ": kernel of the projection is not " + set_str(t));
      c.expect(correspondence_check(q.projection), name + ": correspondence fails for " + cong.to_string());
    }
  }
  return c.verdict();
}

Verdict torsion_homomorphism(const VerifyOptions&) {
  Checker c("induced-torsion-homomorphism");
  for (const auto& [name, s] : lattice_samples())
    for (const auto& cong : all_congruences(s).congruences) {
      const TorsionHom th = torsion_hom(s, cong);
      // Ker θ = {h : T∘h(x) = T∘x for all x}
      std::vector<Perm> expected;
      for (const Perm& h : th.source.elements()) {
        bool fixes = true;
        for (Elem x = 0; x < s.order(); ++x) fixes = fixes && cong.related(h(x), x);
        if (fixes) expected.push_back(h);
      }
      c.expect(th.kernel == PermGroup::from_elements(s.order(), expected), name + ": kernel formula fails");
    }
  return c.verdict();
}

Verdict torsion_action(const VerifyOptions&) {
  Checker c("torsion-action-agreement");
  c.absorb(check_torsion_action_agreement(fx::rl3_transversal()), "RL3");
  c.absorb(check_torsion_action_agreement(fx::alt4_example().transversal()), "alt4 example");
  c.absorb(check_torsion_action_agreement(fx::sym8_example().transversal()), "sym8 example");
  for (const auto& pair : solvable_fixture_pairs())
    for (const auto& t : all_transversals(pair)) c.absorb(check_torsion_action_agreement(t), "search");
  return c.verdict();
}

Verdict normal_overgroup(const VerifyOptions&) {
  Checker c("quotient-by-normal-overgroup");
  const Transversal a4 = fx::alt4_example().transversal();
  c.absorb(check_quotient_by_normal_overgroup(a4, fx::klein_four()), "alt4, N = V4");
  c.absorb(check_quotient_by_normal_overgroup(a4, a4.pair().group()), "alt4, N = G");
  for (const auto& pair : fx::d4_core_free_pairs()) {
    const auto ns = normal_overgroups(pair->group(), pair->subgroup());
    const std::string ctx = "D4, H = <" + format_cycles(pair->subgroup().generators()[0]) + ">";
    if (ns.empty()) {
      c.absorb(Verdict::inconclusive("quotient-by-normal-overgroup", "no proper normal subgroup contains H"), ctx);
      continue;
    }
    for (const auto& n : ns)
      for (const auto& t : all_transversals(pair)) c.absorb(check_quotient_by_normal_overgroup(t, n), ctx);
  }
  return c.verdict();
}

Verdict theta_closed(const VerifyOptions&) {
  Checker c("theta-closed-congruence");
  const Transversal a4 = fx::alt4_example().transversal();
  const auto u = congruence_from_invariant(a4.loop(), a4.elements_in(fx::klein_four()));
  if (c.expect(u.has_value(), "S ∩ V4 is not invariant")) {
    const Verdict v = check_theta_closed_congruence(a4, *u);
    c.absorb(v, "alt4, U from S ∩ V4");
  }
  const Transversal rl3 = fx::rl3_transversal();
  c.expect(theta_congruence(rl3).is_full(), "RL3: θ-congruence is not full");
  c.absorb(check_theta_closed_congruence(rl3, theta_congruence(rl3)), "RL3");
  c.absorb(check_theta_closed_congruence(rl3, Congruence::full(3)), "RL3 full");
  for (const auto& pair : solvable_fixture_pairs())
    for (const auto& t : all_transversals(pair)) {
      c.absorb(check_theta_closed_congruence(t, theta_congruence(t)), "search");
      c.absorb(check_theta_closed_congruence(t, Congruence::full(t.size())), "search, U full");
    }
  return c.verdict();
}

Verdict centering_oracle(const VerifyOptions&) {
  Checker c("centering-oracle");
  std::size_t i = 0, pairs = 0, central = 0;
  for (const auto& s : census()) {
    const Congruence full = Congruence::full(s.order());
    for (const auto& beta : oracle::all_congruences_naive(s)) {
      const bool delta = is_centralized(s, beta, full);
      const bool brute = oracle::find_centering_congruence(s, beta, full).exists;
      c.expect(delta == brute, "census loop " + std::to_string(i) + ", β = " + beta.to_string() + ": Δ says " +
                                   (delta ? "central" : "not central") + ", brute force disagrees");
      ++pairs;
      central += delta;
    }
    ++i;
  }
  c.note(std::to_string(pairs) + " (loop, β) pairs, " + std::to_string(central) + " central");
  return c.verdict();
}

Verdict group_tables(const VerifyOptions&) {
  Checker c("group-table-consistency");
  for (const auto& [name, g] : fx::small_groups()) {
    const RightLoop s = RightLoop::from_group(g);
    c.expect(group_torsion(s).is_trivial(), name + ": G_S is not trivial");
    const LoopDerivedSeries ls = derived_series_loop(s);
    const GroupDerivedSeries gs = derived_series(g);
    std::vector<ElemSet> expected;
    for (const auto& term : gs.terms) {
      ElemSet e;
      for (const Perm& x : term.elements()) e.push_back(static_cast<Elem>(*g.index_of(x)));
      std::sort(e.begin(), e.end());
      if (expected.empty() || expected.back() != e) expected.push_back(std::move(e));
    }
    c.expect(ls.terms == expected, name + ": derived series differs from the group's");
    ElemSet zg;
    const PermGroup zgroup = center(g);
    for (const Perm& x : zgroup.elements()) zg.push_back(static_cast<Elem>(*g.index_of(x)));
    std::sort(zg.begin(), zg.end());
    c.expect(center_set(s) == zg, name + ": Z(S) differs from Z(G)");
    c.expect(nilpotency_class(s) == nilpotency_class(g), name + ": nilpotency class differs");
    if (nilpotency_class(g)) c.absorb(check_nilpotent_implies_solvable(s), name);
  }
  return c.verdict();
}

Verdict nilpotent_solvable(const VerifyOptions&) {
  Checker c("nilpotent-implies-solvable");
  std::size_t nilpotent = 0;
  for (const auto& s : census()) {
    const Verdict v = check_nilpotent_implies_solvable(s);
    if (v.status == Status::inconclusive) continue;
    ++nilpotent;
    c.absorb(v, "census");
  }
  for (const auto& [name, s] : nilpotent_samples()) c.absorb(check_nilpotent_implies_solvable(s), name);
  c.note(std::to_string(nilpotent) + " nilpotent census loops");
  return c.verdict();
}

Verdict center_kernel(const VerifyOptions&) {
  Checker c("center-kernel-embedding");
  std::size_t checked = 0, nontrivial = 0;
  auto run = [&](const RightLoop& s) {
    const EtaEmbedding e = eta_embedding(s);
    ++checked;
    nontrivial += !e.kernel.is_trivial();
    c.expect(e.factors + 1 == e.zeta.num_classes(), "wrong factor count");
  };
  for (const auto& s : census())
    if (center_set(s).size() > 1) run(s);
  for (const auto& [name, s] : nilpotent_samples()) run(s);
  for (const auto& pair : fx::d4_core_free_pairs())
    for (const auto& t : all_transversals(pair))
      if (is_nilpotent(t.loop())) run(t.loop());
  c.note(std::to_string(checked) + " loops, " + std::to_string(nontrivial) + " with a nontrivial kernel");
  return c.verdict();
}

Verdict kernel_series_suite(const VerifyOptions&) {
  Checker c("kernel-series");
  std::size_t checked = 0;
  auto run = [&](const std::string& name, const RightLoop& s) {
    const KernelSeries ks = kernel_series(s);
    ++checked;
    c.expect(ks.torsion_solvable == derived_series(group_torsion(s)).solvable, name + ": G_S solvability mismatch");
    c.expect(ks.torsion_solvable, name + ": G_S not solvable");
  };
  for (const auto& s : census())
    if (is_nilpotent(s)) run("census", s);
  for (const auto& [name, s] : nilpotent_samples()) run(name, s);
  c.note(std::to_string(checked) + " nilpotent loops");
  return c.verdict();
}

Verdict nilpotent_corollaries(const VerifyOptions&) {
  Checker c("nilpotent-transversal-corollaries");
  c.absorb(check_nilpotent_transversal_corollaries(fx::sym8_nilpotent_transversal()), "sym8-group transversal");
  return c.verdict();
}

Verdict class_two(const VerifyOptions&) {
  Checker c("class-two-centers");
  for (const auto& pair : fx::d4_core_free_pairs())
    c.absorb(check_class_two_centers(pair, SearchSpec{}), "D4, H = <" + format_cycles(pair->subgroup().generators()[0]) + ">");
  // The Sym(8) example itself: Z(G) ∩ S = Z(S) = {I}.
  const Transversal t = fx::sym8_example().transversal();
  c.expect(t.elements_in(center(t.pair().group())) == center_set(t.loop()), "sym8 example: Z(G) ∩ S != Z(S)");
  return c.verdict();
}

}  // namespace

const std::vector<Suite>& verification_suites() {
  static const std::vector<Suite> suites = [] {
    std::vector<Suite> s{
        {"abelian-quotient-minimality", "smallest abelian-group congruence equals the brute-force minimum", abelian_minimality},
        {"alt4-example", "Alt(4) transversal: embedding, trivial center, solvable, not nilpotent, C3 quotient", alt4_example},
        {"center-kernel-embedding", "Ker θ embeds in Z(S)^(k-1)", center_kernel},
        {"centering-oracle", "generated centering relation agrees with exhaustive search", centering_oracle},
        {"class-two-centers", "Z(G)∩S = Z(S) and Z(G)∩Φ(G)∩S = {1} for class-two groups", class_two},
        {"group-quotient-minimality", "smallest group congruence equals the brute-force minimum", group_minimality},
        {"group-table-consistency", "group Cayley tables: torsion, derived series, center, class", group_tables},
        {"induced-torsion-homomorphism", "θ : G_S -> G_{S/T} is onto with the stated kernel", torsion_homomorphism},
        {"invariant-subloop-correspondence", "congruences, invariant subloops and the correspondence theorem", invariant_correspondence},
        {"kernel-series", "kernel series of G_S for nilpotent loops", kernel_series_suite},
        {"nilpotent-implies-solvable", "nilpotent loops are solvable with S^(i) inside Z_{n-i}", nilpotent_solvable},
        {"nilpotent-transversal-corollaries", "nilpotent generating transversal: H solvable, p-groups", nilpotent_corollaries},
        {"quotient-by-normal-overgroup", "G/N ≅ S/(N∩S) for normal N containing H", normal_overgroup},
        {"solvable-generating-alt5-sampled", "sampled Alt(5) transversals: generating ones are not solvable", alt5_sampled},
        {"solvable-generating-identities", "proof identities on every generating transversal of A4, S3, D4", proof_identities},
        {"sym3-no-solvable-generating-transversal", "Sym(3) has no solvable generating transversal", sym3_remark},
        {"sym8-example", "Sym(8) transversal: Z(G), S ∩ N_G(H), trivial center, not nilpotent", sym8_example},
        {"theta-closed-congruence", "HT normal, HT ∩ S = T and G/HT ≅ S/U", theta_closed},
        {"torsion-action-agreement", "x θ f(y,z) = f^S(y,z)(x) on every transversal", torsion_action},
    };
    std::sort(s.begin(), s.end(), [](const Suite& a, const Suite& b) { return a.anchor < b.anchor; });
    return s;
  }();
  return suites;
}

std::vector<Verdict> run_verification(const VerifyOptions& options, const std::vector<std::string>& only) {
  const auto& suites = verification_suites();
  for (const auto& name : only)
    if (std::none_of(suites.begin(), suites.end(), [&](const Suite& s) { return s.anchor == name; }))
      throw InputError("unknown suite '" + name + "'");
  std::vector<Verdict> out;
  for (const auto& suite : suites) {
    if (!only.empty() && std::find(only.begin(), only.end(), suite.anchor) == only.end()) continue;
    try {
      out.push_back(suite.run(options));
    } catch (const std::exception& e) {
      out.push_back(Verdict::fail(suite.anchor, e.what()));
    }
  }
  return out;
}

}  // namespace rloops
