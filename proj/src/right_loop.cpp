#include "rloops/right_loop.hpp"

#include <algorithm>
#include <numeric>

#include "rloops/kernels.hpp"

namespace rloops {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

}  // namespace

RightLoop::RightLoop() = default;

RightLoop RightLoop::from_flat(std::size_t n, std::vector<Elem> table) {
  if (n == 0 || table.size() != n * n)
    throw LoopValidationError(LoopDefect::not_square, 0, "loop table is not a non-empty square");
  for (Elem v : table)
    if (v >= n)
      throw LoopValidationError(LoopDefect::entry_out_of_range, v,
                                "table entry " + idx(v) + " is outside 0.." + idx(n - 1));
  for (std::size_t y = 0; y < n; ++y)
    if (table[y] != y)
      throw LoopValidationError(LoopDefect::identity_row_violated, y,
                                "row 0 is not the identity row (column " + idx(y) + ")");
  for (std::size_t x = 0; x < n; ++x)
    if (table[x * n] != x)
      throw LoopValidationError(LoopDefect::identity_column_violated, x,
                                "column 0 is not the identity column (row " + idx(x) + ")");
  std::vector<Elem> rdiv(n * n, static_cast<Elem>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < n; ++x) {
      const Elem b = table[x * n + a];
      if (rdiv[a * n + b] != n)
        throw LoopValidationError(LoopDefect::right_translation_not_bijective, a,
                                  "right translation by " + idx(a) + " is not bijective");
      rdiv[a * n + b] = static_cast<Elem>(x);
    }
  }
  return RightLoop(n, std::move(table), std::move(rdiv));
}

RightLoop RightLoop::from_table(const std::vector<std::vector<Elem>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw LoopValidationError(LoopDefect::not_square, 0, "loop table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_flat(n, std::move(flat));
}

RightLoop RightLoop::from_table_any_identity(const std::vector<std::vector<Elem>>& rows) {
  try {
    return from_table(rows);
  } catch (const LoopValidationError& e) {
    if (e.defect() != LoopDefect::identity_row_violated &&
        e.defect() != LoopDefect::identity_column_violated)
      throw;
    const std::size_t n = rows.size();
    for (std::size_t id = 1; id < n; ++id) {
      bool two_sided = true;
      for (std::size_t y = 0; y < n && two_sided; ++y)
        two_sided = rows[id][y] == y && rows[y][id] == y;
      if (!two_sided) continue;
      // Swap labels 0 and id.
      auto relabel = [&](std::size_t v) -> std::size_t { return v == 0 ? id : (v == id ? 0 : v); };
      std::vector<std::vector<Elem>> fixed(n, std::vector<Elem>(n));
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          fixed[x][y] = static_cast<Elem>(relabel(rows[relabel(x)][relabel(y)]));
      return from_table(fixed);
    }
    throw;
  }
}

RightLoop RightLoop::cyclic(std::size_t n) {
  std::vector<Elem> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = static_cast<Elem>((x + y) % n);
  return from_flat(n, std::move(t));
}

RightLoop RightLoop::from_group(const PermGroup& g) {
  const auto t = multiplication_table(g);
  return from_flat(g.order(), std::vector<Elem>(t.begin(), t.end()));
}

Perm RightLoop::right_translation(Elem a) const {
  std::vector<Point> img(n_);
  for (std::size_t x = 0; x < n_; ++x) img[x] = op(static_cast<Elem>(x), a);
  return Perm(std::move(img));
}

std::vector<std::vector<Elem>> RightLoop::rows() const {
  std::vector<std::vector<Elem>> out(n_);
  for (std::size_t x = 0; x < n_; ++x) out[x].assign(row(static_cast<Elem>(x)).begin(), row(static_cast<Elem>(x)).end());
  return out;
}

// ---------------------------------------------------------------------------

Perm f_perm(const RightLoop& s, Elem y, Elem z) {
  const Elem yz = s.op(y, z);
  std::vector<Point> img(s.order());
  for (Elem x = 0; x < s.order(); ++x) img[x] = s.rdiv(s.op(s.op(x, y), z), yz);
  return Perm(std::move(img));
}

namespace {

std::vector<Perm> torsion_generators(const RightLoop& s) {
  std::vector<Perm> gens;
  for (Elem y = 1; y < s.order(); ++y)
    for (Elem z = 1; z < s.order(); ++z) {
      Perm f = f_perm(s, y, z);
      if (!f.is_identity()) gens.push_back(std::move(f));
    }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

}  // namespace

PermGroup group_torsion(const RightLoop& s) {
  return PermGroup::generate(s.order(), torsion_generators(s));
}

GssResult gss_group(const RightLoop& s) {
  auto gens = torsion_generators(s);
  for (Elem a = 1; a < s.order(); ++a) gens.push_back(s.right_translation(a));
  GssResult out{PermGroup::generate(s.order(), gens), false};

  const PermGroup torsion = group_torsion(s);
  const CosetDecomposition cosets(out.group, torsion);
  std::vector<bool> hit(cosets.size(), false);
  bool ok = cosets.size() == s.order();
  for (Elem a = 0; a < s.order() && ok; ++a) {
    const std::size_t c = cosets.coset_of(s.right_translation(a));
    ok = !hit[c];
    hit[c] = true;
  }
  out.translations_form_transversal = ok;
  return out;
}

LoopClassification classify(const RightLoop& s, Exec exec) {
  LoopClassification c;
  c.nonassociative_triple = exec == Exec::parallel ? kernels::nonassociative_triple_omp(s)
                                                   : kernels::nonassociative_triple_serial(s);
  for (Elem x = 0; x < s.order() && !c.noncommuting_pair; ++x)
    for (Elem y = x + 1; y < s.order(); ++y)
      if (s.op(x, y) != s.op(y, x)) {
        c.noncommuting_pair = std::array<Elem, 2>{x, y};
        break;
      }
  c.is_associative = !c.nonassociative_triple;
  // Identity and right division already hold, so associativity makes a group.
  c.is_group = c.is_associative;
  c.is_commutative = !c.noncommuting_pair;
  c.is_abelian_group = c.is_group && c.is_commutative;
  return c;
}

// ---------------------------------------------------------------------------
// Homomorphisms

std::optional<std::array<Elem, 2>> hom_defect(const LoopHom& h) {
  if (h.map.size() != h.domain.order()) throw InputError("homomorphism map has the wrong length");
  for (Elem v : h.map)
    if (v >= h.codomain.order()) throw InputError("homomorphism image out of range");
  for (Elem x = 0; x < h.domain.order(); ++x)
    for (Elem y = 0; y < h.domain.order(); ++y)
      if (h.map[h.domain.op(x, y)] != h.codomain.op(h.map[x], h.map[y])) return std::array<Elem, 2>{x, y};
  return std::nullopt;
}

bool hom_validate(const LoopHom& h) { return !hom_defect(h); }

void require_homomorphism(const LoopHom& h) {
  if (auto w = hom_defect(h)) {
    const Elem x = (*w)[0], y = (*w)[1];
    throw InputError("not a homomorphism: map(" + idx(x) + "∘" + idx(y) + ") = " +
                     idx(h.map[h.domain.op(x, y)]) + " but map(" + idx(x) + ")∘map(" + idx(y) +
                     ") = " + idx(h.codomain.op(h.map[x], h.map[y])));
  }
}

ElemSet hom_kernel(const LoopHom& h) {
  ElemSet k;
  for (Elem x = 0; x < h.domain.order(); ++x)
    if (h.map[x] == 0) k.push_back(x);
  return k;
}

ElemSet hom_image(const LoopHom& h) {
  ElemSet im(h.map.begin(), h.map.end());
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

bool hom_is_onto(const LoopHom& h) { return hom_image(h).size() == h.codomain.order(); }

RightLoop direct_product(const RightLoop& a, const RightLoop& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Elem> t(n * n);
  for (Elem x1 = 0; x1 < na; ++x1)
    for (Elem x2 = 0; x2 < nb; ++x2)
      for (Elem y1 = 0; y1 < na; ++y1)
        for (Elem y2 = 0; y2 < nb; ++y2)
          t[(x1 * nb + x2) * n + (y1 * nb + y2)] =
              static_cast<Elem>(a.op(x1, y1) * nb + b.op(x2, y2));
  return RightLoop::from_flat(n, std::move(t));
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

class IsoSearch {
 public:
  IsoSearch(const RightLoop& a, const RightLoop& b)
      : a_(a), b_(b), n_(static_cast<Elem>(a.order())), fwd_(n_, kUnset), bwd_(n_, kUnset) {}

  std::optional<std::vector<Elem>> run() {
    if (a_.order() != b_.order()) return std::nullopt;
    if (!assign(0, 0)) return std::nullopt;
    if (search()) return fwd_;
    return std::nullopt;
  }

 private:
  static constexpr Elem kUnset = static_cast<Elem>(-1);

  // Assigns x -> y and propagates every forced consequence. On failure the
  // partial assignment stays on the stack for the caller to undo.
  bool assign(Elem x, Elem y) {
    std::vector<std::pair<Elem, Elem>> pending{{x, y}};
    while (!pending.empty()) {
      auto [u, v] = pending.back();
      pending.pop_back();
      if (fwd_[u] != kUnset) {
        if (fwd_[u] != v) return false;
        continue;
      }
      if (bwd_[v] != kUnset) return false;
      fwd_[u] = v;
      bwd_[v] = u;
      assigned_.push_back(u);
      for (Elem w : assigned_) {
        for (auto [p, q] : {std::pair{u, w}, std::pair{w, u}}) {
          const Elem pq = a_.op(p, q);
          const Elem target = b_.op(fwd_[p], fwd_[q]);
          if (fwd_[pq] == kUnset) {
            pending.emplace_back(pq, target);
          } else if (fwd_[pq] != target) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (assigned_.size() > mark) {
      const Elem u = assigned_.back();
      assigned_.pop_back();
      bwd_[fwd_[u]] = kUnset;
      fwd_[u] = kUnset;
    }
  }

  // Branches on the smallest unassigned element with images in ascending
  // order; forced values depend only on earlier choices, so the first
  // complete assignment is the lexicographically smallest isomorphism.
  bool search() {
    Elem x = 0;
    while (x < n_ && fwd_[x] != kUnset) ++x;
    if (x == n_) return true;
    for (Elem y = 0; y < n_; ++y) {
      if (bwd_[y] != kUnset) continue;
      const std::size_t mark = assigned_.size();
      if (assign(x, y) && search()) return true;
      undo_to(mark);
    }
    return false;
  }

  const RightLoop& a_;
  const RightLoop& b_;
  Elem n_;
  std::vector<Elem> fwd_;
  std::vector<Elem> bwd_;
  std::vector<Elem> assigned_;
};

}  // namespace

std::optional<std::vector<Elem>> loops_isomorphic(const RightLoop& a, const RightLoop& b) {
  return IsoSearch(a, b).run();
}

// ---------------------------------------------------------------------------
// Subloops

bool is_subloop(const RightLoop& s, const ElemSet& members) {
  if (members.empty() || members.front() != 0) return false;
  std::vector<bool> in(s.order(), false);
  for (Elem m : members) {
    if (m >= s.order()) return false;
    in[m] = true;
  }
  for (Elem x : members)
    for (Elem y : members)
      if (!in[s.op(x, y)] || !in[s.rdiv(x, y)]) return false;
  return true;
}

RightLoop induced_subloop(const RightLoop& s, const ElemSet& members) {
  if (!is_subloop(s, members)) throw InputError("element set is not a right subloop");
  std::vector<Elem> pos(s.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<Elem>(i);
  const std::size_t m = members.size();
  std::vector<Elem> t(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) t[i * m + j] = pos[s.op(members[i], members[j])];
  return RightLoop::from_flat(m, std::move(t));
}

std::vector<RightLoop> enumerate_right_loops(std::size_t n) {
  if (n == 0 || n > 5) throw CapExceeded("right loop census order", 5);
  // Column y is a permutation of 0..n-1 sending 0 to y; column 0 is the identity.
  std::vector<std::vector<std::vector<Elem>>> column_choices(n);
  for (std::size_t y = 0; y < n; ++y) {
    std::vector<Elem> rest;
    for (Elem v = 0; v < n; ++v)
      if (v != y) rest.push_back(v);
    if (y == 0) {
      std::vector<Elem> col(n);
      std::iota(col.begin(), col.end(), Elem{0});
      column_choices[0].push_back(col);
      continue;
    }
    do {
      std::vector<Elem> col{static_cast<Elem>(y)};
      col.insert(col.end(), rest.begin(), rest.end());
      column_choices[y].push_back(std::move(col));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  std::vector<RightLoop> out;
  std::vector<std::size_t> choice(n, 0);
  while (true) {
    std::vector<Elem> t(n * n);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x) t[x * n + y] = column_choices[y][choice[y]][x];
    out.push_back(RightLoop::from_flat(n, std::move(t)));
    std::size_t pos = n;
    while (pos > 1) {
      --pos;
      if (++choice[pos] < column_choices[pos].size()) break;
      choice[pos] = 0;
      if (pos == 1) return out;
    }
    if (n == 1) return out;
  }
}

}  // namespace rloops
