#include "rloops/center.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "rloops/kernels.hpp"

namespace rloops {

namespace {

constexpr Elem kNone = std::numeric_limits<Elem>::max();

std::string pair_str(std::pair<Elem, Elem> p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

RightLoop build_pair_loop(const RightLoop& s, const std::vector<std::pair<Elem, Elem>>& pairs,
                          const std::vector<Elem>& index) {
  const std::size_t n = s.order();
  const std::size_t m = pairs.size();
  std::vector<Elem> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Elem a = s.op(pairs[i].first, pairs[j].first);
      const Elem b = s.op(pairs[i].second, pairs[j].second);
      const Elem k = index[a * n + b];
      if (k == kNone) throw InputError("β is not closed under the componentwise operation");
      t[i * m + j] = k;
    }
  return RightLoop::from_flat(m, std::move(t));
}

// Monotone parts of conditions (i) and (ii): once they fail for some relation
// they fail for every larger one.
std::optional<std::string> monotone_violation(const PairAlgebra& pa, const Congruence& gamma,
                                              CongruenceBuilder& b) {
  const std::size_t m = pa.size();
  const std::size_t n = pa.parent().order();
  std::vector<std::vector<char>> firsts(m);
  for (Elem p = 0; p < m; ++p) {
    const Elem r = b.find(p);
    const Elem x = pa.pair(p).first, u = pa.pair(r).first;
    if (!gamma.related(x, u))
      return "(i): " + pair_str(pa.pair(p)) + " ~ " + pair_str(pa.pair(r)) + " but " + std::to_string(x) +
             " and " + std::to_string(u) + " are not γ-related";
    auto& seen = firsts[r];
    if (seen.empty()) seen.assign(n, 0);
    if (seen[x]++)
      return "(ii): the class of " + pair_str(pa.pair(r)) + " holds two pairs with first coordinate " +
             std::to_string(x);
  }
  return std::nullopt;
}

struct ClassIndex {
  std::vector<std::vector<Elem>> members;  // by root
  std::vector<std::vector<Elem>> by_first; // [root * n + v]
};

ClassIndex index_classes(const PairAlgebra& pa, const std::vector<Elem>& root) {
  const std::size_t m = pa.size();
  const std::size_t n = pa.parent().order();
  ClassIndex ci{std::vector<std::vector<Elem>>(m), std::vector<std::vector<Elem>>(m * n)};
  for (Elem p = 0; p < m; ++p) {
    ci.members[root[p]].push_back(p);
    ci.by_first[root[p] * n + pa.pair(p).first].push_back(p);
  }
  return ci;
}

// Calls emit(lhs, rhs) for every instance of the composition rule: lhs and
// rhs must be related for the rule to hold.
template <class Emit>
void for_each_composition(const PairAlgebra& pa, const std::vector<Elem>& root, Emit&& emit) {
  const std::size_t n = pa.parent().order();
  const ClassIndex ci = index_classes(pa, root);
  for (Elem p1 = 0; p1 < pa.size(); ++p1) {
    const auto [x, y] = pa.pair(p1);
    for (Elem q1 : ci.members[root[p1]]) {
      const auto [u, v] = pa.pair(q1);
      for (Elem z = 0; z < n; ++z) {
        const auto p2 = pa.index_of(y, z);
        if (!p2) continue;
        const Elem xz = *pa.index_of(x, z);
        for (Elem q2 : ci.by_first[root[*p2] * n + v]) {
          const Elem w = pa.pair(q2).second;
          if (!emit(xz, *pa.index_of(u, w))) return;
        }
      }
    }
  }
}

std::vector<Elem> roots_of(CongruenceBuilder& b, std::size_t m) {
  std::vector<Elem> r(m);
  for (Elem p = 0; p < m; ++p) r[p] = b.find(p);
  return r;
}

struct DeltaRun {
  Congruence delta;
  std::optional<std::string> early_violation;
};

DeltaRun run_delta(const PairAlgebra& pa, const Congruence& gamma, bool stop_early) {
  const std::size_t n = pa.parent().order();
  const std::size_t m = pa.size();
  CongruenceBuilder b(pa.loop());
  {
    std::vector<Elem> first(gamma.num_classes(), kNone);
    for (Elem x = 0; x < n; ++x) {
      Elem& f = first[gamma.class_of(x)];
      if (f == kNone) f = x;
      else b.add(*pa.index_of(f, f), *pa.index_of(x, x));
    }
  }
  b.close();
  while (true) {
    if (stop_early)
      if (auto v = monotone_violation(pa, gamma, b)) return {b.result(), v};
    const auto root = roots_of(b, m);
    for (Elem p = 0; p < m; ++p) {
      const auto [x, y] = pa.pair(p);
      const auto [u, v] = pa.pair(root[p]);
      b.add(*pa.index_of(y, x), *pa.index_of(v, u));
    }
    for_each_composition(pa, root, [&](Elem l, Elem r) {
      b.add(l, r);
      return true;
    });
    if (b.close() == 0) break;
  }
  return {b.result(), std::nullopt};
}

}  // namespace

// ---------------------------------------------------------------------------

PairAlgebra::PairAlgebra(const RightLoop& s, const Congruence& beta) : s_(&s) {
  const std::size_t n = s.order();
  if (beta.size() != n) throw InputError("β does not match the loop order");
  index_.assign(n * n, kNone);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (beta.related(x, y)) {
        index_[x * n + y] = static_cast<Elem>(pairs_.size());
        pairs_.emplace_back(x, y);
      }
  loop_ = build_pair_loop(s, pairs_, index_);
}

std::optional<Elem> PairAlgebra::index_of(Elem x, Elem y) const {
  const Elem k = index_[x * s_->order() + y];
  if (k == kNone) return std::nullopt;
  return k;
}

CenteringRelation delta_closure(const RightLoop& s, const Congruence& beta, const Congruence& gamma) {
  if (gamma.size() != s.order()) throw InputError("γ does not match the loop order");
  PairAlgebra pa(s, beta);
  Congruence delta = run_delta(pa, gamma, false).delta;
  return {std::move(pa), std::move(delta)};
}

CentralityResult check_centering_conditions(const PairAlgebra& pa, const Congruence& gamma,
                                            const Congruence& delta) {
  const std::size_t n = pa.parent().order();
  const std::size_t m = pa.size();
  if (delta.size() != m) throw InputError("centering relation does not match the pair algebra");
  const auto classes = delta.classes();

  for (const auto& cls : classes)
    for (Elem p : cls)
      if (!gamma.related(pa.pair(p).first, pa.pair(cls.front()).first))
        return {false, "(i): " + pair_str(pa.pair(p)) + " ~ " + pair_str(pa.pair(cls.front())) +
                           " with unrelated first coordinates"};

  std::vector<std::size_t> gamma_size(gamma.num_classes(), 0);
  for (Elem x = 0; x < n; ++x) ++gamma_size[gamma.class_of(x)];
  for (const auto& cls : classes) {
    std::vector<char> hit(n, 0);
    for (Elem p : cls) {
      const Elem x = pa.pair(p).first;
      if (hit[x]++)
        return {false, "(ii): π is not injective on the class of " + pair_str(pa.pair(cls.front()))};
    }
    const std::size_t want = gamma_size[gamma.class_of(pa.pair(cls.front()).first)];
    if (cls.size() != want)
      return {false, "(ii): the class of " + pair_str(pa.pair(cls.front())) + " has " +
                         std::to_string(cls.size()) + " pairs but its γ-class has " + std::to_string(want)};
  }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (gamma.related(x, y) && !delta.related(*pa.index_of(x, x), *pa.index_of(y, y)))
        return {false, "(iii): (" + std::to_string(x) + "," + std::to_string(x) + ") and (" + std::to_string(y) +
                           "," + std::to_string(y) + ") are not related"};

  for (const auto& cls : classes)
    for (Elem p : cls) {
      const auto [x, y] = pa.pair(p);
      const auto [u, v] = pa.pair(cls.front());
      if (!delta.related(*pa.index_of(y, x), *pa.index_of(v, u)))
        return {false, "(iv): swap of " + pair_str(pa.pair(p)) + " ~ " + pair_str(pa.pair(cls.front())) +
                           " is not related"};
    }

  std::vector<Elem> root(m);
  for (const auto& cls : classes)
    for (Elem p : cls) root[p] = cls.front();
  std::optional<std::string> bad;
  for_each_composition(pa, root, [&](Elem l, Elem r) {
    if (delta.related(l, r)) return true;
    bad = "(v): " + pair_str(pa.pair(l)) + " and " + pair_str(pa.pair(r)) + " are not related";
    return false;
  });
  if (bad) return {false, *bad};
  return {true, {}};
}

CentralityResult check_centralized(const RightLoop& s, const Congruence& beta, const Congruence& gamma) {
  if (gamma.size() != s.order()) throw InputError("γ does not match the loop order");
  const PairAlgebra pa(s, beta);
  DeltaRun run = run_delta(pa, gamma, true);
  if (run.early_violation) return {false, *run.early_violation};
  return check_centering_conditions(pa, gamma, run.delta);
}

bool is_centralized(const RightLoop& s, const Congruence& beta, const Congruence& gamma) {
  return check_centralized(s, beta, gamma).centralized;
}

// ---------------------------------------------------------------------------
// Center

Congruence center_congruence(const RightLoop& s, std::size_t cap, Exec exec) {
  if (s.order() > cap) throw CapExceeded("loop order for center computation", cap);
  const std::size_t n = s.order();
  const Congruence full = Congruence::full(n);
  const auto labels = exec == Exec::parallel ? kernels::principal_congruence_labels_omp(s)
                                             : kernels::principal_congruence_labels_serial(s);
  std::set<Congruence> distinct;
  for (const auto& l : labels) distinct.insert(Congruence::from_labels(l));
  const std::vector<Congruence> principal(distinct.begin(), distinct.end());
  const auto central = kernels::map_indexed(
      principal.size(), [&](std::size_t i) { return is_centralized(s, principal[i], full); }, exec);

  CongruenceBuilder b(s);
  for (std::size_t i = 0; i < principal.size(); ++i)
    if (central[i]) b.add(principal[i]);
  b.close();
  Congruence zeta = b.result();

  const std::string anchor = "center-congruence";
  if (auto r = check_centralized(s, zeta, full); !r.centralized)
    throw TheoremViolation(anchor, "join " + zeta.to_string() + " of central congruences is not central: " + r.witness);
  const ElemSet z = zeta.identity_class();
  for (Elem x : z)
    for (Elem y = 0; y < n; ++y) {
      if (s.op(x, y) != s.op(y, x))
        throw TheoremViolation(anchor, "center element " + std::to_string(x) + " does not commute with " +
                                           std::to_string(y));
      for (Elem w = 0; w < n; ++w)
        if (s.op(x, s.op(y, w)) != s.op(s.op(x, y), w))
          throw TheoremViolation(anchor, "center element " + std::to_string(x) + " fails x∘(y∘z) = (x∘y)∘z at (" +
                                             std::to_string(y) + "," + std::to_string(w) + ")");
    }
  if (!is_subloop(s, z)) throw TheoremViolation(anchor, "center is not closed under ∘");
  return zeta;
}

ElemSet center_set(const RightLoop& s, std::size_t cap, Exec exec) {
  return center_congruence(s, cap, exec).identity_class();
}

CentralSeries upper_central_series(const RightLoop& s, std::size_t cap) {
  CentralSeries out;
  out.terms.push_back({0});
  out.congruences.push_back(Congruence::diagonal(s.order()));
  while (true) {
    const Congruence& current = out.congruences.back();
    const Quotient q = quotient_loop(s, current);
    const Congruence zq = center_congruence(q.loop, cap);
    std::vector<Elem> labels(s.order());
    for (Elem x = 0; x < s.order(); ++x) labels[x] = zq.class_of(current.class_of(x));
    Congruence next = Congruence::from_labels(labels);
    if (next == current) break;
    ElemSet term = next.identity_class();
    if (congruence_from_invariant(s, term) != next)
      throw TheoremViolation("upper-central-series", "term " + Congruence::from_labels(labels).to_string() +
                                                         " does not match its invariant subloop");
    out.terms.push_back(std::move(term));
    out.congruences.push_back(std::move(next));
  }
  out.nilpotent = out.terms.back().size() == s.order();
  if (out.nilpotent) out.nilpotency_class = out.terms.size() - 1;
  return out;
}

bool is_nilpotent(const RightLoop& s, std::size_t cap) { return upper_central_series(s, cap).nilpotent; }

std::optional<std::size_t> nilpotency_class(const RightLoop& s, std::size_t cap) {
  return upper_central_series(s, cap).nilpotency_class;
}

Verdict check_nilpotent_implies_solvable(const RightLoop& s, std::size_t cap) {
  const std::string anchor = "nilpotent-implies-solvable";
  const CentralSeries cs = upper_central_series(s, cap);
  if (!cs.nilpotent) return Verdict::inconclusive(anchor, "loop is not nilpotent");
  const LoopDerivedSeries ds = derived_series_loop(s);
  if (!ds.solvable) return Verdict::fail(anchor, "nilpotent loop with non-terminating derived series");
  const std::size_t n = *cs.nilpotency_class;
  for (std::size_t i = 0; i <= n; ++i) {
    const ElemSet& d = i < ds.terms.size() ? ds.terms[i] : ds.terms.back();
    const ElemSet& z = cs.terms[n - i];
    if (!std::includes(z.begin(), z.end(), d.begin(), d.end()))
      return Verdict::fail(anchor, "S^(" + std::to_string(i) + ") is not inside Z_" + std::to_string(n - i));
  }
  return Verdict::pass(anchor, "class " + std::to_string(n) + ", derived length " +
                                   std::to_string(ds.terms.size() - 1));
}

// ---------------------------------------------------------------------------
// Torsion kernels

EtaEmbedding eta_embedding(const RightLoop& s, std::size_t cap) {
  const std::string anchor = "center-kernel-embedding";
  EtaEmbedding out;
  out.zeta = center_congruence(s, cap);
  out.center = out.zeta.identity_class();
  for (const auto& cls : out.zeta.classes())
    if (cls.front() != 0) out.class_reps.push_back(cls.front());
  out.factors = out.zeta.num_classes() - 1;
  if (out.class_reps.size() != out.factors)
    throw TheoremViolation(anchor, "index set does not have k-1 elements");

  const TorsionHom th = torsion_hom(s, out.zeta);
  out.kernel = th.kernel;
  std::vector<bool> in_center(s.order(), false);
  for (Elem u : out.center) in_center[u] = true;

  for (const Perm& h : out.kernel.elements()) {
    if (h(0) != 0) throw TheoremViolation(anchor, format_cycles(h) + " moves the identity");
    std::vector<Elem> coords;
    for (Elem xi : out.class_reps) {
      const Elem hx = h(xi);
      const Elem z = s.rdiv(hx, xi);
      if (!in_center[z])
        throw TheoremViolation(anchor, format_cycles(h) + " sends " + std::to_string(xi) + " outside Z(S)∘x");
      for (Elem u : out.center)
        if (h(s.op(u, xi)) != s.op(u, hx))
          throw TheoremViolation(anchor, "h(u∘x) != u∘h(x) for u = " + std::to_string(u) + ", x = " +
                                             std::to_string(xi) + ", h = " + format_cycles(h));
      coords.push_back(z);
    }
    out.eta.push_back(std::move(coords));
  }

  std::set<std::vector<Elem>> distinct(out.eta.begin(), out.eta.end());
  if (distinct.size() != out.eta.size()) throw TheoremViolation(anchor, "η is not injective");
  const auto& elems = out.kernel.elements();
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      const std::size_t ab = *out.kernel.index_of(elems[a] * elems[b]);
      for (std::size_t j = 0; j < out.factors; ++j)
        if (out.eta[ab][j] != s.op(out.eta[a][j], out.eta[b][j]))
          throw TheoremViolation(anchor, "η(gh) != η(g)η(h) for g = " + format_cycles(elems[a]) + ", h = " +
                                             format_cycles(elems[b]));
    }
  return out;
}

KernelSeries kernel_series(const RightLoop& s, std::size_t cap) {
  const std::string anchor = "kernel-series";
  KernelSeries out;
  out.series = upper_central_series(s, cap);
  if (!out.series.nilpotent) throw PreconditionNotMet("kernel series needs a nilpotent loop");
  const std::size_t n = *out.series.nilpotency_class;
  const PermGroup gs = group_torsion(s);
  if (n == 0) {
    out.kernels.push_back(gs);
    out.torsion_solvable = true;
    return out;
  }

  std::vector<TorsionHom> thetas;
  for (std::size_t j = 0; j < n; ++j) {
    thetas.push_back(torsion_hom(s, out.series.congruences[j]));
    out.kernels.push_back(thetas.back().kernel);
  }
  if (!out.kernels.front().is_trivial()) throw TheoremViolation(anchor, "Ker θ_0 is not trivial");
  if (!(out.kernels.back() == gs)) throw TheoremViolation(anchor, "Ker θ_{n-1} is not all of G_S");

  for (std::size_t j = 0; j + 1 < n; ++j) {
    const PermGroup& lower = out.kernels[j];
    const PermGroup& upper = out.kernels[j + 1];
    const std::string step = " at j = " + std::to_string(j);
    if (!lower.is_subgroup_of(upper)) throw TheoremViolation(anchor, "chain is not ascending" + step);
    for (const Perm& a : upper.elements())
      for (const Perm& b : upper.elements())
        if (!lower.contains(commutator(a, b)))
          throw TheoremViolation(anchor, "quotient is not abelian" + step);

    // Elements of Ker θ_{j+1} act on S/Z_j through the kernel that η
    // embeds for S/Z_j, and distinct cosets of Ker θ_j act differently.
    const Quotient q = quotient_loop(s, out.series.congruences[j]);
    const TorsionHom inner = torsion_hom(q.loop, center_congruence(q.loop, cap));
    const TorsionHom& theta = thetas[j];
    for (const Perm& h : upper.elements()) {
      const Perm& induced = theta.images[*gs.index_of(h)];
      if (!inner.kernel.contains(induced))
        throw TheoremViolation(anchor, format_cycles(h) + " does not induce a central kernel element" + step);
    }
    for (const Perm& a : upper.elements())
      for (const Perm& b : upper.elements()) {
        const bool same_image = theta.images[*gs.index_of(a)] == theta.images[*gs.index_of(b)];
        if (same_image != lower.contains(a * b.inverse()))
          throw TheoremViolation(anchor, "coset map is not injective" + step);
      }
  }
  out.torsion_solvable = derived_series(gs).solvable;
  if (!out.torsion_solvable) throw TheoremViolation(anchor, "G_S of a nilpotent loop is not solvable");
  return out;
}

}  // namespace rloops
