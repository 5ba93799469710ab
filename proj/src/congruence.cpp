#include "rloops/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rloops/kernels.hpp"

namespace rloops {

// ---------------------------------------------------------------------------
// Congruence value type

Congruence Congruence::from_labels(std::span<const Elem> labels) {
  Congruence c;
  constexpr auto unset = static_cast<Elem>(-1);
  std::vector<Elem> remap;
  c.labels_.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const Elem l = labels[i];
    if (l >= remap.size()) remap.resize(l + 1, unset);
    if (remap[l] == unset) remap[l] = static_cast<Elem>(c.num_classes_++);
    c.labels_[i] = remap[l];
  }
  return c;
}

Congruence Congruence::diagonal(std::size_t n) {
  std::vector<Elem> l(n);
  std::iota(l.begin(), l.end(), Elem{0});
  return from_labels(l);
}

Congruence Congruence::full(std::size_t n) { return from_labels(std::vector<Elem>(n, 0)); }

std::vector<ElemSet> Congruence::classes() const {
  std::vector<ElemSet> out(num_classes_);
  for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i]].push_back(static_cast<Elem>(i));
  return out;
}

ElemSet Congruence::identity_class() const {
  ElemSet out;
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == 0) out.push_back(static_cast<Elem>(i));
  return out;
}

bool Congruence::refines(const Congruence& coarser) const {
  if (coarser.size() != size()) return false;
  // Every class here must map into a single class of `coarser`.
  std::vector<Elem> image(num_classes_, static_cast<Elem>(-1));
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    Elem& slot = image[labels_[i]];
    if (slot == static_cast<Elem>(-1)) slot = coarser.labels_[i];
    else if (slot != coarser.labels_[i]) return false;
  }
  return true;
}

std::string Congruence::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels_[i]);
  }
  return out + "]";
}

Congruence meet(const Congruence& a, const Congruence& b) {
  if (a.size() != b.size()) throw InputError("meet of congruences on different sets");
  std::vector<Elem> l(a.size());
  const std::size_t nb = b.num_classes();
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = static_cast<Elem>(a.class_of(static_cast<Elem>(i)) * nb + b.class_of(static_cast<Elem>(i)));
  return Congruence::from_labels(l);
}

bool is_congruence(const RightLoop& s, std::span<const Elem> labels) {
  if (labels.size() != s.order())
    throw InputError("partition has " + std::to_string(labels.size()) + " labels for a loop of order " +
                     std::to_string(s.order()));
  const Congruence c = Congruence::from_labels(labels);
  const std::size_t n = s.order();
  std::vector<Elem> first(c.num_classes(), static_cast<Elem>(-1));
  for (Elem x = 0; x < n; ++x)
    if (first[c.class_of(x)] == static_cast<Elem>(-1)) first[c.class_of(x)] = x;
  // Compatibility with every left and right translation suffices.
  for (Elem a = 0; a < n; ++a) {
    const Elem r = first[c.class_of(a)];
    for (Elem y = 0; y < n; ++y) {
      if (!c.related(s.op(a, y), s.op(r, y))) return false;
      if (!c.related(s.op(y, a), s.op(y, r))) return false;
    }
  }
  return true;
}

bool is_congruence(const RightLoop& s, const Congruence& c) { return is_congruence(s, c.labels()); }

// ---------------------------------------------------------------------------
// Closure

CongruenceBuilder::CongruenceBuilder(const RightLoop& s) : s_(&s), parent_(s.order()) {
  std::iota(parent_.begin(), parent_.end(), Elem{0});
}

void CongruenceBuilder::add(Elem a, Elem b) {
  if (a != b) pending_.emplace_back(a, b);
}

void CongruenceBuilder::add(const Congruence& c) {
  std::vector<Elem> first(c.num_classes(), static_cast<Elem>(-1));
  for (Elem x = 0; x < c.size(); ++x) {
    Elem& f = first[c.class_of(x)];
    if (f == static_cast<Elem>(-1)) f = x;
    else add(f, x);
  }
}

Elem CongruenceBuilder::find(Elem x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

std::size_t CongruenceBuilder::close() {
  std::size_t merges = 0;
  const RightLoop& s = *s_;
  while (!pending_.empty()) {
    auto [a, b] = pending_.back();
    pending_.pop_back();
    Elem ra = find(a), rb = find(b);
    if (ra == rb) continue;
    if (ra > rb) std::swap(ra, rb);
    parent_[rb] = ra;
    ++merges;
    // Every edge that merged two classes contributes its translates; edges
    // inside a class are implied by these.
    for (Elem y = 0; y < s.order(); ++y) {
      add(s.op(a, y), s.op(b, y));
      add(s.op(y, a), s.op(y, b));
    }
  }
  return merges;
}

Congruence CongruenceBuilder::result() {
  std::vector<Elem> roots(parent_.size());
  for (Elem x = 0; x < parent_.size(); ++x) roots[x] = find(x);
  return Congruence::from_labels(roots);
}

Congruence congruence_closure(const RightLoop& s, std::span<const std::pair<Elem, Elem>> pairs) {
  CongruenceBuilder b(s);
  for (auto [x, y] : pairs) {
    if (x >= s.order() || y >= s.order()) throw InputError("pair element out of range");
    b.add(x, y);
  }
  b.close();
  return b.result();
}

Congruence principal_congruence(const RightLoop& s, Elem a, Elem b) {
  const std::pair<Elem, Elem> p{a, b};
  return congruence_closure(s, std::span(&p, 1));
}

Congruence join(const RightLoop& s, const Congruence& a, const Congruence& b) {
  CongruenceBuilder builder(s);
  builder.add(a);
  builder.add(b);
  builder.close();
  return builder.result();
}

// ---------------------------------------------------------------------------
// Invariant subloops and quotients

ElemSet invariant_from_congruence(const Congruence& c) { return c.identity_class(); }

std::optional<Congruence> congruence_from_invariant(const RightLoop& s, const ElemSet& t) {
  if (!is_subloop(s, t)) throw InputError("element set is not a right subloop");
  const std::size_t n = s.order();
  std::vector<char> rel(n * n, 0);
  for (Elem x : t)
    for (Elem y = 0; y < n; ++y) rel[s.op(x, y) * n + y] = 1;
  // Must be an equivalence relation; reflexivity comes from 0 ∈ T.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (rel[a * n + b] != rel[b * n + a]) return std::nullopt;
  std::vector<Elem> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    Elem first = 0;
    while (!rel[a * n + first]) ++first;
    labels[a] = first;
  }
  const Congruence c = Congruence::from_labels(labels);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if ((rel[a * n + b] != 0) != c.related(static_cast<Elem>(a), static_cast<Elem>(b))) return std::nullopt;
  if (!is_congruence(s, c)) return std::nullopt;
  return c;
}

bool is_invariant_subloop(const RightLoop& s, const ElemSet& t) {
  return congruence_from_invariant(s, t).has_value();
}

Congruence require_invariant(const RightLoop& s, const ElemSet& t) {
  auto c = congruence_from_invariant(s, t);
  if (!c) throw InputError("element set is not an invariant right subloop");
  return *c;
}

Quotient quotient_loop(const RightLoop& s, const Congruence& c) {
  if (c.size() != s.order()) throw InputError("congruence size does not match the loop");
  const std::size_t k = c.num_classes();
  const auto classes = c.classes();
  std::vector<Elem> t(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) t[i * k + j] = c.class_of(s.op(classes[i].front(), classes[j].front()));
  for (Elem x = 0; x < s.order(); ++x)
    for (Elem y = 0; y < s.order(); ++y)
      if (t[c.class_of(x) * k + c.class_of(y)] != c.class_of(s.op(x, y)))
        throw std::logic_error("quotient by a non-congruence " + c.to_string());
  RightLoop q = RightLoop::from_flat(k, std::move(t));
  std::vector<Elem> map(c.labels().begin(), c.labels().end());
  return {q, LoopHom{s, q, std::move(map)}};
}

Congruence smallest_group_congruence(const RightLoop& s) {
  CongruenceBuilder b(s);
  for (Elem y = 1; y < s.order(); ++y)
    for (Elem z = 1; z < s.order(); ++z) {
      const Perm f = f_perm(s, y, z);
      for (Elem x = 0; x < s.order(); ++x) b.add(x, f(x));
    }
  b.close();
  return b.result();
}

Congruence smallest_abelian_congruence(const RightLoop& s) {
  CongruenceBuilder b(s);
  b.add(smallest_group_congruence(s));
  for (Elem x = 0; x < s.order(); ++x)
    for (Elem y = x + 1; y < s.order(); ++y) b.add(s.op(x, y), s.op(y, x));
  b.close();
  return b.result();
}

ElemSet derived_subloop(const RightLoop& s) { return smallest_abelian_congruence(s).identity_class(); }

LoopDerivedSeries derived_series_loop(const RightLoop& s) {
  LoopDerivedSeries out;
  ElemSet all(s.order());
  std::iota(all.begin(), all.end(), Elem{0});
  out.terms.push_back(std::move(all));
  while (out.terms.back().size() > 1) {
    const ElemSet& current = out.terms.back();
    const RightLoop sub = induced_subloop(s, current);
    ElemSet next;
    for (Elem local : derived_subloop(sub)) next.push_back(current[local]);
    if (next.size() == current.size()) break;
    out.terms.push_back(std::move(next));
  }
  out.solvable = out.terms.back().size() == 1;
  return out;
}

// ---------------------------------------------------------------------------
// Lattice

std::optional<std::size_t> CongruenceLattice::index_of(const Congruence& c) const {
  auto it = std::lower_bound(congruences.begin(), congruences.end(), c);
  if (it == congruences.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - congruences.begin());
}

CongruenceLattice all_congruences(const RightLoop& s, std::size_t cap, Exec exec) {
  if (s.order() > cap) throw CapExceeded("loop order for congruence lattice", cap);
  const auto principal = exec == Exec::parallel ? kernels::principal_congruence_labels_omp(s)
                                                : kernels::principal_congruence_labels_serial(s);
  std::set<Congruence> seen{Congruence::diagonal(s.order())};
  std::vector<Congruence> work;
  for (const auto& labels : principal) {
    auto c = Congruence::from_labels(labels);
    if (seen.insert(c).second) work.push_back(std::move(c));
  }
  for (std::size_t head = 0; head < work.size(); ++head) {
    for (std::size_t other = 0; other < head; ++other) {
      if (work[head].refines(work[other]) || work[other].refines(work[head])) continue;
      Congruence j = join(s, work[head], work[other]);
      if (seen.insert(j).second) work.push_back(std::move(j));
    }
  }

  CongruenceLattice lat;
  lat.congruences.assign(seen.begin(), seen.end());
  const std::size_t m = lat.size();
  lat.join_table.assign(m * m, 0);
  lat.meet_table.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const std::size_t jn = *lat.index_of(join(s, lat.congruences[i], lat.congruences[j]));
      const std::size_t mt = *lat.index_of(meet(lat.congruences[i], lat.congruences[j]));
      lat.join_table[i * m + j] = lat.join_table[j * m + i] = jn;
      lat.meet_table[i * m + j] = lat.meet_table[j * m + i] = mt;
    }
  return lat;
}

std::vector<ElemSet> invariant_subloops(const RightLoop& s, std::size_t cap) {
  std::vector<ElemSet> out;
  for (const auto& c : all_congruences(s, cap).congruences) out.push_back(c.identity_class());
  std::sort(out.begin(), out.end(), [](const ElemSet& a, const ElemSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

ElemSet image_invariant(const LoopHom& h, const ElemSet& t) {
  require_homomorphism(h);
  if (!hom_is_onto(h)) throw InputError("image of an invariant subloop needs an onto homomorphism");
  if (!is_invariant_subloop(h.domain, t)) throw InputError("T is not an invariant right subloop");
  ElemSet img;
  for (Elem x : t) img.push_back(h.map[x]);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  if (!is_subloop(h.codomain, img) || !is_invariant_subloop(h.codomain, img))
    throw TheoremViolation("image-of-invariant-subloop", "image of invariant subloop is not invariant");
  return img;
}

ElemSet preimage_invariant(const LoopHom& h, const ElemSet& t) {
  require_homomorphism(h);
  if (!is_invariant_subloop(h.codomain, t)) throw InputError("T' is not an invariant right subloop");
  std::vector<bool> in(h.codomain.order(), false);
  for (Elem y : t) in[y] = true;
  ElemSet pre;
  for (Elem x = 0; x < h.domain.order(); ++x)
    if (in[h.map[x]]) pre.push_back(x);
  if (!is_subloop(h.domain, pre) || !is_invariant_subloop(h.domain, pre))
    throw TheoremViolation("preimage-of-invariant-subloop", "preimage of invariant subloop is not invariant");
  return pre;
}

bool correspondence_check(const LoopHom& h, std::size_t cap) {
  require_homomorphism(h);
  if (!hom_is_onto(h)) throw InputError("correspondence needs an onto homomorphism");
  const ElemSet kernel = hom_kernel(h);
  std::set<ElemSet> targets;
  std::size_t sources = 0;
  for (const ElemSet& t : invariant_subloops(h.domain, cap)) {
    if (!std::includes(t.begin(), t.end(), kernel.begin(), kernel.end())) continue;
    ++sources;
    targets.insert(image_invariant(h, t));
  }
  const auto codomain_invariants = invariant_subloops(h.codomain, cap);
  const std::set<ElemSet> expected(codomain_invariants.begin(), codomain_invariants.end());
  return targets.size() == sources && targets == expected;
}

// ---------------------------------------------------------------------------
// Induced torsion homomorphism

TorsionHom torsion_hom(const RightLoop& s, const Congruence& c) {
  const Quotient q = quotient_loop(s, c);
  TorsionHom out{group_torsion(s), group_torsion(q.loop), {}, PermGroup()};
  const std::size_t k = c.num_classes();
  const auto classes = c.classes();
  const std::string anchor = "induced-torsion-homomorphism";

  std::vector<Perm> kernel;
  for (const Perm& h : out.source.elements()) {
    std::vector<Point> img(k);
    for (std::size_t i = 0; i < k; ++i) img[i] = c.class_of(h(classes[i].front()));
    for (Elem x = 0; x < s.order(); ++x)
      if (img[c.class_of(x)] != c.class_of(h(x)))
        throw TheoremViolation(anchor, "element " + format_cycles(h) + " of G_S does not respect " + c.to_string());
    Perm theta{std::move(img)};
    if (!out.target.contains(theta))
      throw TheoremViolation(anchor, "image of " + format_cycles(h) + " is outside G_{S/T}");
    if (theta.is_identity()) kernel.push_back(h);
    out.images.push_back(std::move(theta));
  }
  // f^S(y,z) must map to f^{S/T}(νy, νz).
  for (Elem y = 0; y < s.order(); ++y)
    for (Elem z = 0; z < s.order(); ++z) {
      const std::size_t i = *out.source.index_of(f_perm(s, y, z));
      if (out.images[i] != f_perm(q.loop, c.class_of(y), c.class_of(z)))
        throw TheoremViolation(anchor, "θ(f(" + std::to_string(y) + "," + std::to_string(z) +
                                           ")) differs from the quotient's f");
    }
  std::vector<Perm> distinct = out.images;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() != out.target.order())
    throw TheoremViolation(anchor, "θ is not onto G_{S/T}");
  out.kernel = PermGroup::from_elements(s.order(), std::move(kernel));
  if (out.source.order() != out.kernel.order() * out.target.order())
    throw TheoremViolation(anchor, "|G_S| != |Ker θ| |G_{S/T}|");
  return out;
}

}  // namespace rloops
