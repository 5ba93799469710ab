#include "commands.hpp"

#include <fstream>

#include "rloops/center.hpp"
#include "rloops/congruence.hpp"
#include "rloops/io.hpp"
#include "rloops/transversal.hpp"
#include "rloops/verify.hpp"

namespace rloops::cli {

namespace {

Json cycles(std::span<const Perm> elems) {
  Json out = Json::array();
  for (const Perm& p : elems) out.push_back(format_cycles(p));
  return out;
}

Json orders(const std::vector<PermGroup>& groups) {
  Json out = Json::array();
  for (const auto& g : groups) out.push_back(g.order());
  return out;
}

Json sizes(const std::vector<ElemSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(s.size());
  return out;
}

Json nullable(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

PermGroup load_subgroup(const PermGroup& g, const SubgroupArgs& args) {
  if (!args.gens.empty() && args.stabilizer) throw InputError("give either --subgroup-gens or --stabilizer, not both");
  if (args.stabilizer) {
    const std::size_t p = *args.stabilizer;
    if (p == 0 || p > g.degree()) throw InputError("stabilizer point " + std::to_string(p) + " is out of range");
    std::vector<Perm> fix;
    for (const Perm& x : g.elements())
      if (x(static_cast<Point>(p - 1)) == p - 1) fix.push_back(x);
    return PermGroup::from_elements(g.degree(), std::move(fix));
  }
  std::vector<Perm> gens;
  for (const auto& c : args.gens) gens.push_back(parse_cycles(c, g.degree()));
  PermGroup h = PermGroup::generate(g.degree(), gens);
  if (!h.is_subgroup_of(g)) throw InputError("subgroup generators are not in the group");
  return h;
}

std::shared_ptr<const GroupPair> load_pair(const std::string& file, const SubgroupArgs& sub, Json& subject) {
  const PermGroup g = group_from_spec(read_group_file(file));
  if (!sub.given()) throw InputError("a subgroup is required (--subgroup-gens or --stabilizer)");
  PermGroup h = load_subgroup(g, sub);
  subject["group_file"] = file;
  subject["degree"] = g.degree();
  subject["subgroup_generators"] = cycles(h.generators());
  return std::make_shared<const GroupPair>(g, std::move(h));
}

Json loop_facts(const RightLoop& s) {
  Json f;
  const LoopClassification cls = classify(s);
  f["order"] = s.order();
  f["associative"] = cls.is_associative;
  f["group"] = cls.is_group;
  f["commutative"] = cls.is_commutative;
  if (cls.nonassociative_triple) f["nonassociative_triple"] = *cls.nonassociative_triple;
  const PermGroup gs = group_torsion(s);
  f["torsion_order"] = gs.order();
  f["gss_order"] = gss_group(s).group.order();
  const LoopDerivedSeries ds = derived_series_loop(s);
  f["derived_series"] = sizes(ds.terms);
  f["solvable"] = ds.solvable;
  const CentralSeries cs = upper_central_series(s);
  f["center"] = cs.terms.size() > 1 ? cs.terms[1] : ElemSet{0};
  f["upper_central_series"] = sizes(cs.terms);
  f["nilpotent"] = cs.nilpotent;
  f["nilpotency_class"] = nullable(cs.nilpotency_class);
  f["torsion_solvable"] = derived_series(gs).solvable;
  return f;
}

SearchSpec search_spec(const SearchArgs& args) {
  if (args.exhaustive && args.samples) throw InputError("--exhaustive and --samples are exclusive");
  SearchSpec spec;
  spec.predicates.generating = args.generating;
  spec.predicates.solvable = args.solvable;
  spec.predicates.nilpotent = args.nilpotent;
  spec.predicates.not_nilpotent = args.not_nilpotent;
  if (args.samples) {
    spec.mode = SearchMode::sampled;
    spec.samples = *args.samples;
    spec.seed = args.seed;
  }
  if (args.cap) spec.cap = args.cap;
  spec.analyze_center = true;
  return spec;
}

}  // namespace

Report group_info(const GroupInfoArgs& args) {
  Report r;
  r.kind = "group";
  const GroupSpec spec = read_group_file(args.group_file);
  const PermGroup g = group_from_spec(spec);
  r.subject["group_file"] = args.group_file;
  r.subject["degree"] = g.degree();
  r.subject["generators"] = cycles(spec.generators);
  r.facts["order"] = g.order();
  const GroupDerivedSeries ds = derived_series(g);
  r.facts["derived_series"] = orders(ds.terms);
  r.facts["solvable"] = ds.solvable;
  r.facts["abelian"] = g.is_abelian();
  r.facts["nilpotency_class"] = nullable(nilpotency_class(g));
  const PermGroup z = center(g);
  r.facts["center"] = cycles(z.elements());
  if (args.subgroup.given()) {
    const PermGroup h = load_subgroup(g, args.subgroup);
    const GroupPair pair(g, h);
    const PermGroup n = normalizer(g, h);
    Json sub;
    sub["order"] = h.order();
    sub["elements"] = cycles(h.elements());
    sub["index"] = pair.index();
    sub["core_free"] = pair.core_free();
    sub["normal"] = is_normal(g, h);
    sub["normalizer_order"] = n.order();
    sub["normalizer"] = cycles(n.elements());
    sub["normalizer_normal"] = is_normal(g, n);
    sub["transversals"] = transversal_count(pair);
    r.facts["subgroup"] = sub;
  }
  return r;
}

Report loop_analyze(const LoopAnalyzeArgs& args) {
  Report r;
  r.kind = "loop";
  const RightLoop s = read_loop_file(args.loop_file);
  r.subject["loop_file"] = args.loop_file;
  r.facts = loop_facts(s);
  r.facts["valid"] = true;
  r.verdicts.push_back(check_nilpotent_implies_solvable(s));
  return r;
}

Report trans_analyze(const TransArgs& args) {
  Report r;
  r.kind = "transversal";
  auto pair = load_pair(args.group_file, args.subgroup, r.subject);
  const std::size_t degree = pair->group().degree();
  std::vector<Perm> reps;
  if (!args.reps_file.empty()) reps = read_element_file(args.reps_file, degree);
  for (const auto& c : args.reps) reps.push_back(c == "id" ? Perm::identity(degree) : parse_cycles(c, degree));
  if (reps.empty()) throw InputError("no representatives given (--reps or --reps-file)");
  if (args.convention == "rtl") {
    for (auto& p : reps) p = p.inverse();
  } else if (args.convention != "ltr") {
    throw InputError("unknown convention '" + args.convention + "' (ltr or rtl)");
  }
  r.subject["convention"] = args.convention;
  const Transversal t = Transversal::from_reps(pair, reps);
  r.subject["reps"] = cycles(t.reps());

  const PermGroup& g = pair->group();
  r.facts["group_order"] = g.order();
  r.facts["subgroup_order"] = pair->subgroup().order();
  r.facts["index"] = pair->index();
  r.facts["core_free"] = pair->core_free();
  r.facts["generating"] = t.generating();
  Json lf = loop_facts(t.loop());
  std::vector<Perm> center_reps;
  for (Elem x : lf["center"].get<ElemSet>()) center_reps.push_back(t.rep(x));
  lf["center_elements"] = cycles(center_reps);
  r.facts["loop"] = lf;
  std::vector<Perm> sn;
  for (Elem x : t.elements_in(normalizer(g, pair->subgroup()))) sn.push_back(t.rep(x));
  r.facts["reps_in_normalizer"] = cycles(sn);
  std::vector<Perm> sz;
  for (Elem x : t.elements_in(center(g))) sz.push_back(t.rep(x));
  r.facts["reps_in_group_center"] = cycles(sz);

  r.verdicts.push_back(check_torsion_action_agreement(t));
  r.verdicts.push_back(verify_embedding(t));
  r.verdicts.push_back(check_theta_closed_congruence(t, theta_congruence(t)));
  if (lf["nilpotent"].get<bool>())
    r.verdicts.push_back(check_nilpotent_transversal_corollaries(t));
  return r;
}

Report trans_search(const SearchArgs& args) {
  Report r;
  r.kind = "search";
  auto pair = load_pair(args.group_file, args.subgroup, r.subject);
  const SearchSpec spec = search_spec(args);
  r.subject["mode"] = spec.mode == SearchMode::exhaustive ? "exhaustive" : "sampled";
  if (spec.mode == SearchMode::sampled) {
    r.subject["samples"] = spec.samples;
    r.seed = spec.seed;
  }
  Json preds = Json::array();
  if (args.generating) preds.push_back("generating");
  if (args.solvable) preds.push_back("solvable");
  if (args.nilpotent) preds.push_back("nilpotent");
  if (args.not_nilpotent) preds.push_back("not-nilpotent");
  r.subject["predicates"] = preds;

  const SearchOutcome out = search_transversals(pair, spec);
  r.facts["transversals"] = transversal_count(*pair);
  r.facts["examined"] = out.examined;
  r.facts["matched"] = out.matches.size();
  Json matches = Json::array();
  for (const auto& m : out.matches) {
    Json j;
    j["ordinal"] = m.ordinal;
    j["reps"] = cycles(m.reps);
    j["generating"] = m.generating;
    j["solvable"] = m.solvable;
    j["derived_length"] = m.derived_length;
    j["nilpotent"] = m.nilpotent ? Json(*m.nilpotent) : Json(nullptr);
    j["center_size"] = nullable(m.center_size);
    matches.push_back(std::move(j));
  }
  r.facts["matches"] = std::move(matches);
  return r;
}

Report verify_paper(const VerifyArgs& args) {
  Report r;
  r.kind = "verify";
  VerifyOptions opts;
  if (args.seed) opts.seed = args.seed;
  if (args.samples) opts.alt5_samples = args.samples;
  r.seed = opts.seed;
  r.subject["selected"] = args.only.empty() ? Json("all") : Json(args.only);
  r.subject["alt5_samples"] = opts.alt5_samples;
  r.verdicts = run_verification(opts, args.only);
  std::size_t pass = 0, fail = 0, inconclusive = 0;
  for (const auto& v : r.verdicts)
    (v.status == Status::pass ? pass : v.status == Status::fail ? fail : inconclusive)++;
  r.facts["suites"] = r.verdicts.size();
  r.facts["passed"] = pass;
  r.facts["failed"] = fail;
  r.facts["inconclusive"] = inconclusive;
  return r;
}

}  // namespace rloops::cli
