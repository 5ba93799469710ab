#include "rloops/transversal.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "rloops/center.hpp"
#include "rloops/kernels.hpp"

namespace rloops {

namespace {

std::vector<Perm> product_set(std::span<const Perm> a, std::span<const Perm> b) {
  std::vector<Perm> out;
  out.reserve(a.size() * b.size());
  for (const Perm& x : a)
    for (const Perm& y : b) out.push_back(x * y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Perm> reps_of(const Transversal& t, const ElemSet& elems) {
  std::vector<Perm> out;
  for (Elem e : elems) out.push_back(t.rep(e));
  return out;
}

PermGroup intersect(const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> common;
  for (const Perm& x : a.elements())
    if (b.contains(x)) common.push_back(x);
  return PermGroup::from_elements(a.degree(), std::move(common));
}

std::string set_str(const ElemSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string size_str(std::size_t n) { return std::to_string(n); }

}  // namespace

// ---------------------------------------------------------------------------

GroupPair::GroupPair(PermGroup g, PermGroup h)
    : g_(std::move(g)), h_(std::move(h)), cosets_(right_cosets(g_, h_)), core_free_(core(g_, h_).core_free) {}

Transversal::Transversal(std::shared_ptr<const GroupPair> pair, std::vector<Perm> reps)
    : pair_(std::move(pair)), reps_(std::move(reps)) {
  loop_ = induced_loop(*this);
  generating_ = group_closure(pair_->group().degree(), reps_).order() == pair_->group().order();
}

Transversal Transversal::from_reps(std::shared_ptr<const GroupPair> pair, const std::vector<Perm>& reps) {
  const std::size_t k = pair->index();
  std::vector<std::optional<Perm>> slot(k);
  for (const Perm& r : reps) {
    if (r.degree() != pair->group().degree() || !pair->group().contains(r))
      throw TransversalError(TransversalDefect::not_in_group, format_cycles(r) + " is not an element of G");
    const std::size_t c = pair->cosets().coset_of(r);
    if (c == 0 && !r.is_identity())
      throw TransversalError(TransversalDefect::non_identity_rep_for_h,
                             "the coset H must be represented by the identity, got " + format_cycles(r));
    if (slot[c])
      throw TransversalError(TransversalDefect::duplicate_coset, format_cycles(r) + " and " +
                                                                     format_cycles(*slot[c]) + " lie in the same coset");
    slot[c] = r;
  }
  std::vector<Perm> ordered;
  for (std::size_t c = 0; c < k; ++c) {
    if (!slot[c])
      throw TransversalError(TransversalDefect::missing_coset,
                             "no representative for the coset of " + format_cycles(pair->cosets().rep(c)));
    ordered.push_back(std::move(*slot[c]));
  }
  return Transversal(std::move(pair), std::move(ordered));
}

Transversal Transversal::from_choice(std::shared_ptr<const GroupPair> pair, const std::vector<std::uint32_t>& choice) {
  const std::size_t k = pair->index();
  if (choice.size() != k) throw InputError("choice vector does not match the number of cosets");
  std::vector<Perm> reps{pair->group().identity()};
  for (std::size_t c = 1; c < k; ++c) {
    const auto members = pair->cosets().coset(c);
    if (choice[c] >= members.size()) throw InputError("choice index outside its coset");
    reps.push_back(pair->group().element(members[choice[c]]));
  }
  return Transversal(std::move(pair), std::move(reps));
}

ElemSet Transversal::elements_in(const PermGroup& set) const {
  ElemSet out;
  for (Elem i = 0; i < reps_.size(); ++i)
    if (set.contains(reps_[i])) out.push_back(i);
  return out;
}

RightLoop induced_loop(const Transversal& t) {
  const std::size_t k = t.size();
  std::vector<Elem> table(k * k);
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y) table[x * k + y] = t.element_of(t.rep(x) * t.rep(y));
  return RightLoop::from_flat(k, std::move(table));
}

Perm cocycle(const Transversal& t, Elem x, Elem y) {
  Perm f = t.rep(x) * t.rep(y) * t.rep(t.loop().op(x, y)).inverse();
  if (!t.pair().subgroup().contains(f))
    throw TheoremViolation("cocycle-in-subgroup", "f(" + std::to_string(x) + "," + std::to_string(y) +
                                                      ") = " + format_cycles(f) + " is not in H");
  return f;
}

Elem theta(const Transversal& t, Elem x, const Perm& h) {
  if (!t.pair().subgroup().contains(h)) throw InputError(format_cycles(h) + " is not in H");
  return t.element_of(t.rep(x) * h);
}

Verdict check_torsion_action_agreement(const Transversal& t) {
  const std::string anchor = "torsion-action-agreement";
  const RightLoop& s = t.loop();
  const std::size_t k = s.order();
  for (Elem y = 0; y < k; ++y)
    for (Elem z = 0; z < k; ++z) {
      const Perm f = cocycle(t, y, z);
      const Perm fs = f_perm(s, y, z);
      for (Elem x = 0; x < k; ++x)
        if (theta(t, x, f) != fs(x))
          return Verdict::fail(anchor, "x θ f(y,z) != f^S(y,z)(x) at x=" + std::to_string(x) + ", y=" +
                                           std::to_string(y) + ", z=" + std::to_string(z));
    }
  return Verdict::pass(anchor, "all " + std::to_string(k * k * k) + " triples");
}

bool is_generating(const Transversal& t) { return t.generating(); }

Verdict verify_embedding(const Transversal& t) {
  const std::string anchor = "coset-action-embedding";
  if (!t.pair().core_free()) return Verdict::inconclusive(anchor, "H is not core-free");
  if (!t.generating()) return Verdict::inconclusive(anchor, "S does not generate G");
  const GroupHom act = coset_action(t.pair().group(), t.pair().subgroup(), t.reps());
  if (!act.kernel().is_trivial()) return Verdict::fail(anchor, "coset action of a core-free H is not faithful");
  const GssResult gss = gss_group(t.loop());
  if (!(act.image() == gss.group))
    return Verdict::fail(anchor, "coset action image (order " + size_str(act.image().order()) +
                                     ") differs from G_SS (order " + size_str(gss.group.order()) + ")");
  std::vector<Perm> h_image;
  for (const Perm& h : t.pair().subgroup().elements()) h_image.push_back(act(h));
  const PermGroup gs = group_torsion(t.loop());
  if (!(PermGroup::from_elements(t.size(), std::move(h_image)) == gs))
    return Verdict::fail(anchor, "image of H differs from G_S");
  return Verdict::pass(anchor, "|G_SS| = " + size_str(gss.group.order()) + ", |G_S| = " + size_str(gs.order()));
}

Verdict check_quotient_by_normal_overgroup(const Transversal& t, const PermGroup& n) {
  const std::string anchor = "quotient-by-normal-overgroup";
  const PermGroup& g = t.pair().group();
  if (!n.is_subgroup_of(g) || !is_normal(g, n)) return Verdict::inconclusive(anchor, "N is not normal in G");
  if (!t.pair().subgroup().is_subgroup_of(n)) return Verdict::inconclusive(anchor, "H is not contained in N");
  const ElemSet ns = t.elements_in(n);
  const auto c = congruence_from_invariant(t.loop(), ns);
  if (!c) return Verdict::fail(anchor, "S∩N = " + set_str(ns) + " is not an invariant subloop");
  const Quotient q = quotient_loop(t.loop(), *c);
  const RightLoop gn = RightLoop::from_group(quotient_group(g, n));
  if (!loops_isomorphic(gn, q.loop))
    return Verdict::fail(anchor, "G/N of order " + size_str(gn.order()) + " is not isomorphic to S/(S∩N)");
  return Verdict::pass(anchor, "G/N ≅ S/(S∩N) of order " + size_str(gn.order()));
}

Congruence theta_congruence(const Transversal& t) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < t.size(); ++x)
    for (const Perm& h : t.pair().subgroup().elements()) pairs.emplace_back(x, theta(t, x, h));
  return congruence_closure(t.loop(), pairs);
}

Verdict check_theta_closed_congruence(const Transversal& t, const Congruence& u) {
  const std::string anchor = "theta-closed-congruence";
  const RightLoop& s = t.loop();
  if (u.size() != s.order() || !is_congruence(s, u)) throw InputError("U is not a congruence on S");
  for (Elem x = 0; x < s.order(); ++x)
    for (const Perm& h : t.pair().subgroup().elements())
      if (!u.related(x, theta(t, x, h)))
        return Verdict::inconclusive(anchor, "U does not contain every (x, x θ h)");
  const PermGroup& g = t.pair().group();
  const PermGroup& h = t.pair().subgroup();
  const ElemSet tset = u.identity_class();
  const std::vector<Perm> ht = product_set(h.elements(), reps_of(t, tset));
  const PermGroup n = group_closure(g.degree(), ht);
  if (n.order() != ht.size()) return Verdict::fail(anchor, "HT is not a subgroup");
  if (!is_normal(g, n)) return Verdict::fail(anchor, "HT is not normal in G");
  if (!h.is_subgroup_of(n)) return Verdict::fail(anchor, "H is not inside HT");
  if (t.elements_in(n) != tset) return Verdict::fail(anchor, "HT ∩ S differs from T = " + set_str(tset));
  const Quotient q = quotient_loop(s, u);
  if (!classify(q.loop).is_group) return Verdict::fail(anchor, "S/U is not a group");
  const RightLoop gn = RightLoop::from_group(quotient_group(g, n));
  if (!loops_isomorphic(gn, q.loop)) return Verdict::fail(anchor, "G/HT is not isomorphic to S/U");
  return Verdict::pass(anchor, "|HT| = " + size_str(n.order()) + ", G/HT ≅ S/U of order " + size_str(gn.order()));
}

Verdict check_nilpotent_transversal_corollaries(const Transversal& t) {
  const std::string anchor = "nilpotent-transversal-corollaries";
  if (!t.pair().core_free()) return Verdict::inconclusive(anchor, "H is not core-free");
  if (!t.generating()) return Verdict::inconclusive(anchor, "S does not generate G");
  const CentralSeries cs = upper_central_series(t.loop());
  if (!cs.nilpotent) return Verdict::inconclusive(anchor, "S is not nilpotent");
  const PermGroup& h = t.pair().subgroup();
  if (!derived_series(h).solvable) return Verdict::fail(anchor, "H is not solvable");
  if (!derived_series(group_torsion(t.loop())).solvable) return Verdict::fail(anchor, "G_S is not solvable");
  std::string note = "H solvable";
  // |S| = p^k: both H and G must be p-groups.
  std::size_t m = t.size(), p = 0;
  for (std::size_t d = 2; d <= m; ++d)
    if (m % d == 0) {
      p = d;
      break;
    }
  while (p && m % p == 0) m /= p;
  if (p && m == 1) {
    const auto pg = p_group_prime(t.pair().group());
    const auto ph = p_group_prime(h);
    if (pg != p) return Verdict::fail(anchor, "|S| is a power of " + size_str(p) + " but G is not a p-group");
    if (!h.is_trivial() && ph != p)
      return Verdict::fail(anchor, "|S| is a power of " + size_str(p) + " but H is not a p-group");
    note += ", H and G are " + size_str(p) + "-groups";
  }
  return Verdict::pass(anchor, note);
}

// ---------------------------------------------------------------------------
// Search

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SplitMix64::below(0)");
  const std::uint64_t reject = (0 - bound) % bound;  // 2^64 mod bound
  while (true) {
    const std::uint64_t x = next();
    if (reject == 0 || x < 0 - reject) return x % bound;
  }
}

std::size_t transversal_count(const GroupPair& pair) {
  const std::size_t h = pair.subgroup().order();
  std::size_t total = 1;
  for (std::size_t c = 1; c < pair.index(); ++c) {
    if (total > std::numeric_limits<std::size_t>::max() / h) return std::numeric_limits<std::size_t>::max();
    total *= h;
  }
  return total;
}

std::vector<std::vector<std::uint32_t>> search_choices(const GroupPair& pair, const SearchSpec& spec) {
  const std::size_t k = pair.index();
  const auto h = static_cast<std::uint32_t>(pair.subgroup().order());
  std::vector<std::vector<std::uint32_t>> out;
  if (spec.mode == SearchMode::exhaustive) {
    const std::size_t total = transversal_count(pair);
    if (total > spec.cap) throw CapExceeded("exhaustive transversal search size", spec.cap);
    out.reserve(total);
    std::vector<std::uint32_t> choice(k, 0);
    for (std::size_t i = 0; i < total; ++i) {
      out.push_back(choice);
      for (std::size_t c = k; c-- > 1;) {
        if (++choice[c] < h) break;
        choice[c] = 0;
      }
    }
  } else {
    if (spec.samples > spec.cap) throw CapExceeded("sampled transversal search size", spec.cap);
    SplitMix64 rng(spec.seed);
    out.reserve(spec.samples);
    for (std::size_t i = 0; i < spec.samples; ++i) {
      std::vector<std::uint32_t> choice(k, 0);
      for (std::size_t c = 1; c < k; ++c) choice[c] = static_cast<std::uint32_t>(rng.below(h));
      out.push_back(std::move(choice));
    }
  }
  return out;
}

void for_each_candidate(std::shared_ptr<const GroupPair> pair, const SearchSpec& spec,
                        const std::function<void(const Transversal&, const CandidateSummary&)>& visit) {
  const auto choices = search_choices(*pair, spec);
  const bool center = spec.analyze_center || spec.predicates.needs_center();
  constexpr std::size_t kChunk = 1024;
  for (std::size_t base = 0; base < choices.size(); base += kChunk) {
    const std::size_t count = std::min(kChunk, choices.size() - base);
    auto results = kernels::map_indexed(
        count,
        [&](std::size_t i) {
          Transversal t = Transversal::from_choice(pair, choices[base + i]);
          CandidateSummary sum;
          sum.ordinal = base + i;
          sum.choice = choices[base + i];
          sum.reps = t.reps();
          sum.generating = t.generating();
          const LoopDerivedSeries ds = derived_series_loop(t.loop());
          sum.solvable = ds.solvable;
          sum.derived_length = ds.terms.size() - 1;
          if (center) {
            const CentralSeries cs = upper_central_series(t.loop());
            sum.nilpotent = cs.nilpotent;
            sum.center_size = cs.terms.size() > 1 ? cs.terms[1].size() : 1;
          }
          return std::make_pair(std::move(t), std::move(sum));
        },
        spec.exec);
    for (const auto& [t, sum] : results) visit(t, sum);
  }
}

SearchOutcome search_transversals(std::shared_ptr<const GroupPair> pair, const SearchSpec& spec) {
  SearchOutcome out;
  const SearchPredicates& p = spec.predicates;
  for_each_candidate(std::move(pair), spec, [&](const Transversal& t, const CandidateSummary& sum) {
    ++out.examined;
    if (p.generating && !sum.generating) return;
    if (p.solvable && !sum.solvable) return;
    if (p.nilpotent && !*sum.nilpotent) return;
    if (p.not_nilpotent && *sum.nilpotent) return;
    if (p.custom && !p.custom(t)) return;
    out.matches.push_back(sum);
  });
  return out;
}

Verdict check_solvable_generating_transversals(std::shared_ptr<const GroupPair> pair, const SearchSpec& spec) {
  const std::string anchor = "solvable-generating-transversal";
  if (!pair->core_free()) return Verdict::inconclusive(anchor, "H is not core-free");
  const PermGroup& g = pair->group();
  const PermGroup& h = pair->subgroup();
  const GroupDerivedSeries gds = derived_series(g);
  const std::vector<Perm> hg1 = product_set(h.elements(), gds.terms.size() > 1 ? gds.terms[1].elements()
                                                                              : gds.terms[0].elements());
  const PermGroup hg1_group = PermGroup::from_elements(g.degree(), hg1);

  // The proof identities only hold for generating transversals (for
  // instance A3 in Sym(3) has S^(1) = {1} but S ∩ HG^(1) = S), so they are
  // enforced there and merely counted elsewhere.
  auto identities = [&](const Transversal& t, const LoopDerivedSeries& ds) -> std::optional<std::string> {
    const ElemSet& s1 = ds.terms.size() > 1 ? ds.terms[1] : ds.terms[0];
    if (t.elements_in(hg1_group) != s1) return "S^(1) = " + set_str(s1) + " differs from S ∩ HG^(1)";
    if (product_set(h.elements(), reps_of(t, s1)) != hg1) return std::string("HG^(1) != HS^(1)");
    for (std::size_t i = 1; i < ds.terms.size(); ++i) {
      const std::vector<Perm> prev = product_set(h.elements(), reps_of(t, ds.terms[i - 1]));
      const PermGroup prev_group = group_closure(g.degree(), prev);
      if (prev_group.order() != prev.size()) return "HS^(" + size_str(i - 1) + ") is not a subgroup";
      const PermGroup d = derived_subgroup(prev_group);
      if (product_set(h.elements(), reps_of(t, ds.terms[i])) != product_set(h.elements(), d.elements()))
        return "HS^(" + size_str(i) + ") != H(HS^(" + size_str(i - 1) + "))^(1)";
    }
    return std::nullopt;
  };

  std::optional<Verdict> failure;
  std::size_t examined = 0, generating = 0, solvable_generating = 0, other_fail = 0;
  for_each_candidate(pair, spec, [&](const Transversal& t, const CandidateSummary& sum) {
    if (failure) return;
    ++examined;
    const std::string who = "candidate " + size_str(sum.ordinal);
    const LoopDerivedSeries ds = derived_series_loop(t.loop());
    if (ds.solvable && !derived_series(gss_group(t.loop()).group).solvable) {
      failure = Verdict::fail(anchor, who + ": S solvable but G_SS is not");
      return;
    }
    const auto broken = identities(t, ds);
    if (!sum.generating) {
      other_fail += broken.has_value();
      return;
    }
    ++generating;
    if (broken) {
      failure = Verdict::fail(anchor, who + ": " + *broken);
      return;
    }
    if (!ds.solvable) return;
    ++solvable_generating;
    if (!gds.solvable) failure = Verdict::fail(anchor, who + ": solvable generating transversal of a non-solvable group");
  });
  if (failure) return *failure;
  return Verdict::pass(anchor, size_str(examined) + " candidates, " + size_str(generating) + " generating, " +
                                   size_str(solvable_generating) + " solvable generating; G " +
                                   (gds.solvable ? "solvable" : "not solvable") + "; proof identities fail on " +
                                   size_str(other_fail) + " non-generating candidates");
}

Verdict check_class_two_centers(std::shared_ptr<const GroupPair> pair, const SearchSpec& spec) {
  const std::string anchor = "class-two-centers";
  const PermGroup& g = pair->group();
  const auto cls = nilpotency_class(g);
  if (!cls || *cls > 2) return Verdict::inconclusive(anchor, "G is not nilpotent of class at most 2");
  if (!pair->core_free()) return Verdict::inconclusive(anchor, "H is not core-free");
  const PermGroup z = center(g);
  const bool p_group = p_group_prime(g).has_value();
  const PermGroup zphi = p_group ? intersect(z, frattini(g)) : PermGroup::trivial(g.degree());

  std::optional<Verdict> failure;
  std::size_t examined = 0, generating = 0, other_agree = 0;
  for_each_candidate(pair, spec, [&](const Transversal& t, const CandidateSummary& sum) {
    if (failure) return;
    ++examined;
    const ElemSet zs = center_set(t.loop());
    const ElemSet zgs = t.elements_in(z);
    if (!sum.generating) {
      other_agree += zs == zgs;
      return;
    }
    ++generating;
    const std::string who = "candidate " + size_str(sum.ordinal);
    if (zs != zgs) {
      failure = Verdict::fail(anchor, who + ": Z(G)∩S = " + set_str(zgs) + " but Z(S) = " + set_str(zs));
      return;
    }
    if (p_group && t.elements_in(zphi) != ElemSet{0})
      failure = Verdict::fail(anchor, who + ": Z(G)∩Φ(G)∩S = " + set_str(t.elements_in(zphi)));
  });
  if (failure) return *failure;
  if (generating == 0) return Verdict::inconclusive(anchor, "no generating transversal among the candidates");
  return Verdict::pass(anchor, size_str(generating) + " generating candidates checked" +
                                   (p_group ? " (p-group, Frattini part included)" : "") + "; " +
                                   size_str(other_agree) + " of " + size_str(examined - generating) +
                                   " non-generating candidates also have Z(G)∩S = Z(S)");
}

}  // namespace rloops
