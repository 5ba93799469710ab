#include "rloops/perm_group.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "rloops/error.hpp"

namespace rloops {

namespace {

std::atomic<std::size_t> g_order_cap{kDefaultOrderCap};

using PermSet = std::unordered_set<Perm, PermHash>;

}  // namespace

std::size_t order_cap() noexcept { return g_order_cap.load(std::memory_order_relaxed); }
void set_order_cap(std::size_t cap) noexcept { g_order_cap.store(cap, std::memory_order_relaxed); }

struct PermGroup::Data {
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // sorted, identity first
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
};

std::shared_ptr<PermGroup::Data> PermGroup::make_data(std::size_t degree, std::vector<Perm> gens,
                                                      std::vector<Perm> elements) {
  auto d = std::make_shared<PermGroup::Data>();
  d->degree = degree;
  d->generators = std::move(gens);
  std::sort(elements.begin(), elements.end());
  d->elements = std::move(elements);
  d->index.reserve(d->elements.size());
  for (std::size_t i = 0; i < d->elements.size(); ++i)
    d->index.emplace(d->elements[i], static_cast<std::uint32_t>(i));
  return d;
}

namespace {

// Breadth-first closure under right multiplication by generators.
std::vector<Perm> close_elements(std::size_t degree, std::span<const Perm> gens, std::size_t cap) {
  PermSet seen;
  std::vector<Perm> out{Perm::identity(degree)};
  seen.insert(out.front());
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const Perm& g : gens) {
      Perm y = out[head] * g;
      if (seen.insert(y).second) {
        out.push_back(std::move(y));
        if (out.size() > cap) throw CapExceeded("group order", cap);
      }
    }
  }
  return out;
}

}  // namespace

PermGroup::PermGroup() : PermGroup(trivial(0)) {}

PermGroup PermGroup::trivial(std::size_t degree) {
  return PermGroup(make_data(degree, {}, {Perm::identity(degree)}));
}

PermGroup PermGroup::generate(std::size_t degree, std::span<const Perm> gens, std::size_t cap) {
  std::vector<Perm> kept;
  for (const Perm& g : gens) {
    if (g.degree() != degree)
      throw InputError("generator of degree " + std::to_string(g.degree()) +
                       " in a group of degree " + std::to_string(degree));
    if (!g.is_identity() && std::find(kept.begin(), kept.end(), g) == kept.end()) kept.push_back(g);
  }
  auto elements = close_elements(degree, kept, cap);
  return PermGroup(make_data(degree, std::move(kept), std::move(elements)));
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  // Greedy generating set: add any element not yet reached.
  std::vector<Perm> gens;
  PermSet reached{Perm::identity(degree)};
  for (const Perm& x : elements) {
    if (x.degree() != degree) throw InputError("element degree mismatch");
    if (reached.contains(x)) continue;
    gens.push_back(x);
    std::vector<Perm> closed;
    try {
      closed = close_elements(degree, gens, elements.size());
    } catch (const CapExceeded&) {
      throw InputError("element set is not closed under multiplication");
    }
    reached = PermSet(closed.begin(), closed.end());
  }
  if (reached.size() != elements.size())
    throw InputError("element set is not closed under multiplication");
  return PermGroup(make_data(degree, std::move(gens), std::move(elements)));
}

std::size_t PermGroup::degree() const noexcept { return d_->degree; }
std::size_t PermGroup::order() const noexcept { return d_->elements.size(); }
std::span<const Perm> PermGroup::elements() const noexcept { return d_->elements; }
std::span<const Perm> PermGroup::generators() const noexcept { return d_->generators; }
const Perm& PermGroup::identity() const noexcept { return d_->elements.front(); }

bool PermGroup::contains(const Perm& p) const { return d_->index.contains(p); }

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  auto it = d_->index.find(p);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree() != g.degree() || g.order() % order() != 0) return false;
  return std::all_of(d_->elements.begin(), d_->elements.end(),
                     [&](const Perm& x) { return g.contains(x); });
}

bool PermGroup::is_abelian() const {
  const auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.d_ == b.d_ || (a.degree() == b.degree() && a.d_->elements == b.d_->elements);
}

PermGroup group_closure(std::size_t degree, std::span<const Perm> gens, std::size_t cap) {
  return PermGroup::generate(degree, gens, cap);
}

// ---------------------------------------------------------------------------
// Cosets

CosetDecomposition::CosetDecomposition(PermGroup group, PermGroup subgroup)
    : group_(std::move(group)), subgroup_(std::move(subgroup)) {
  if (!subgroup_.is_subgroup_of(group_)) throw InputError("H is not a subgroup of G");
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  coset_of_.assign(group_.order(), unset);
  // Scanning in sorted order, the first unassigned element is the minimum of its coset.
  for (std::size_t i = 0; i < group_.order(); ++i) {
    if (coset_of_[i] != unset) continue;
    const auto id = static_cast<std::uint32_t>(cosets_.size());
    std::vector<std::uint32_t> members;
    members.reserve(subgroup_.order());
    for (const Perm& h : subgroup_.elements()) {
      const auto j = static_cast<std::uint32_t>(*group_.index_of(h * group_.element(i)));
      coset_of_[j] = id;
      members.push_back(j);
    }
    std::sort(members.begin(), members.end());
    cosets_.push_back(std::move(members));
  }
}

std::size_t CosetDecomposition::coset_of(const Perm& g) const {
  auto i = group_.index_of(g);
  if (!i) throw InputError(format_cycles(g) + " is not an element of G");
  return coset_of_[*i];
}

CosetDecomposition right_cosets(const PermGroup& g, const PermGroup& h) {
  return CosetDecomposition(g, h);
}

// ---------------------------------------------------------------------------
// Subgroup structure

CoreResult core(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g)) throw InputError("H is not a subgroup of G");
  std::vector<Perm> current(h.elements().begin(), h.elements().end());
  for (bool changed = true; changed;) {
    changed = false;
    for (const Perm& x : g.generators()) {
      PermSet conj;
      for (const Perm& k : current) conj.insert(conjugate(k, x));
      std::vector<Perm> next;
      for (const Perm& k : current)
        if (conj.contains(k)) next.push_back(k);
      if (next.size() != current.size()) {
        current = std::move(next);
        changed = true;
      }
    }
  }
  PermGroup c = PermGroup::from_elements(g.degree(), std::move(current));
  const bool free = c.is_trivial();
  return {std::move(c), free};
}

PermGroup normal_closure(const PermGroup& g, std::span<const Perm> elements) {
  std::vector<Perm> gens(elements.begin(), elements.end());
  PermGroup k = PermGroup::generate(g.degree(), gens);
  for (bool changed = true; changed;) {
    changed = false;
    for (const Perm& x : g.generators()) {
      for (std::size_t i = 0; i < k.generators().size(); ++i) {
        Perm c = conjugate(k.generators()[i], x);
        if (!k.contains(c)) {
          gens.push_back(std::move(c));
          k = PermGroup::generate(g.degree(), gens);
          changed = true;
          break;
        }
      }
    }
  }
  return k;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  const auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, comms);
}

GroupDerivedSeries derived_series(const PermGroup& g) {
  GroupDerivedSeries out;
  out.terms.push_back(g);
  while (!out.terms.back().is_trivial()) {
    PermGroup next = derived_subgroup(out.terms.back());
    if (next.order() == out.terms.back().order()) break;
    out.terms.push_back(std::move(next));
  }
  out.solvable = out.terms.back().is_trivial();
  return out;
}

std::vector<PermGroup> lower_central_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (!series.back().is_trivial()) {
    std::vector<Perm> comms;
    for (const Perm& a : series.back().generators())
      for (const Perm& x : g.generators()) comms.push_back(commutator(a, x));
    PermGroup next = normal_closure(g, comms);
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> nilpotency_class(const PermGroup& g) {
  auto series = lower_central_series(g);
  if (!series.back().is_trivial()) return std::nullopt;
  return series.size() - 1;
}

std::optional<std::uint64_t> p_group_prime(const PermGroup& g) {
  std::uint64_t n = g.order();
  if (n < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

PermGroup center(const PermGroup& g) {
  std::vector<Perm> z;
  for (const Perm& x : g.elements()) {
    bool central = std::all_of(g.generators().begin(), g.generators().end(),
                               [&](const Perm& y) { return x * y == y * x; });
    if (central) z.push_back(x);
  }
  return PermGroup::from_elements(g.degree(), std::move(z));
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g)) throw InputError("H is not a subgroup of G");
  std::vector<Perm> n;
  for (const Perm& x : g.elements()) {
    bool normalizes = std::all_of(h.generators().begin(), h.generators().end(),
                                  [&](const Perm& y) { return h.contains(conjugate(y, x)); });
    if (normalizes) n.push_back(x);
  }
  return PermGroup::from_elements(g.degree(), std::move(n));
}

bool is_normal(const PermGroup& g, const PermGroup& n) {
  if (!n.is_subgroup_of(g)) throw InputError("N is not a subgroup of G");
  for (const Perm& x : g.generators())
    for (const Perm& y : n.generators())
      if (!n.contains(conjugate(y, x))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Homomorphisms and actions

GroupHom::GroupHom(PermGroup domain, std::size_t codomain_degree, std::vector<Perm> images)
    : domain_(std::move(domain)), codomain_degree_(codomain_degree), images_(std::move(images)) {
  if (images_.size() != domain_.order()) throw InputError("image table has the wrong length");
}

const Perm& GroupHom::operator()(const Perm& g) const {
  auto i = domain_.index_of(g);
  if (!i) throw InputError(format_cycles(g) + " is not in the domain");
  return images_[*i];
}

PermGroup GroupHom::image() const {
  return PermGroup::from_elements(codomain_degree_, images_);
}

PermGroup GroupHom::kernel() const {
  std::vector<Perm> k;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i].is_identity()) k.push_back(domain_.element(i));
  return PermGroup::from_elements(domain_.degree(), std::move(k));
}

bool GroupHom::is_homomorphism() const {
  for (std::size_t i = 0; i < domain_.order(); ++i)
    for (std::size_t j = 0; j < domain_.order(); ++j) {
      const std::size_t ij = *domain_.index_of(domain_.element(i) * domain_.element(j));
      if (images_[ij] != images_[i] * images_[j]) return false;
    }
  return true;
}

GroupHom coset_action(const PermGroup& g, const PermGroup& h, std::span<const Perm> reps) {
  CosetDecomposition dec(g, h);
  if (reps.size() != dec.size())
    throw InputError("expected " + std::to_string(dec.size()) + " coset representatives, got " +
                     std::to_string(reps.size()));
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> slot(dec.size(), unset);  // decomposition index -> rep index
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const std::size_t c = dec.coset_of(reps[i]);
    if (slot[c] != unset) throw InputError("two representatives lie in the same coset");
    slot[c] = static_cast<std::uint32_t>(i);
  }
  std::vector<Perm> images;
  images.reserve(g.order());
  for (const Perm& x : g.elements()) {
    std::vector<Point> img(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) img[i] = slot[dec.coset_of(reps[i] * x)];
    images.emplace_back(std::move(img));
  }
  return GroupHom(g, reps.size(), std::move(images));
}

GroupHom coset_action(const PermGroup& g, const PermGroup& h) {
  CosetDecomposition dec(g, h);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < dec.size(); ++i) reps.push_back(dec.rep(i));
  return coset_action(g, h, reps);
}

PermGroup quotient_group(const PermGroup& g, const PermGroup& n) {
  if (!is_normal(g, n)) throw InputError("N is not normal in G");
  return coset_action(g, n).image();
}

// ---------------------------------------------------------------------------
// Subgroup lattice (small groups only)

std::vector<std::uint32_t> multiplication_table(const PermGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i * n + j] = static_cast<std::uint32_t>(*g.index_of(g.element(i) * g.element(j)));
  return t;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct IndexedSubgroup {
  Bits members;
  std::vector<std::uint32_t> gens;
};

Bits close_bits(const std::vector<std::uint32_t>& table, std::size_t n,
                const std::vector<std::uint32_t>& gens) {
  Bits bits((n + 63) / 64, 0);
  std::vector<std::uint32_t> queue{0};
  bits[0] |= 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::uint32_t g : gens) {
      const std::uint32_t y = table[queue[head] * n + g];
      if (!(bits[y / 64] >> (y % 64) & 1)) {
        bits[y / 64] |= std::uint64_t{1} << (y % 64);
        queue.push_back(y);
      }
    }
  }
  return bits;
}

std::size_t popcount(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::vector<IndexedSubgroup> subgroup_bits(const PermGroup& g, std::size_t cap) {
  if (g.order() > cap) throw CapExceeded("group order for subgroup enumeration", cap);
  const std::size_t n = g.order();
  const auto table = multiplication_table(g);

  std::map<Bits, std::vector<std::uint32_t>> found;
  std::vector<Bits> worklist;
  auto add = [&](std::vector<std::uint32_t> gens) {
    Bits b = close_bits(table, n, gens);
    if (found.emplace(b, std::move(gens)).second) worklist.push_back(std::move(b));
  };
  for (std::uint32_t i = 0; i < n; ++i) add(i == 0 ? std::vector<std::uint32_t>{} : std::vector{i});
  // Joins of pairs until no new subgroup appears.
  for (std::size_t head = 0; head < worklist.size(); ++head) {
    const Bits current = worklist[head];
    const auto current_gens = found.at(current);
    for (std::size_t other = 0; other < head; ++other) {
      const Bits& ob = worklist[other];
      if (subset(current, ob) || subset(ob, current)) continue;
      auto gens = current_gens;
      const auto& og = found.at(ob);
      gens.insert(gens.end(), og.begin(), og.end());
      add(std::move(gens));
    }
  }
  std::vector<IndexedSubgroup> out;
  for (auto& [bits, gens] : found) out.push_back({bits, gens});
  return out;
}

PermGroup to_group(const PermGroup& g, const Bits& bits) {
  std::vector<Perm> els;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (bits[i / 64] >> (i % 64) & 1) els.push_back(g.element(i));
  return PermGroup::from_elements(g.degree(), std::move(els));
}

}  // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& g, std::size_t cap) {
  std::vector<PermGroup> out;
  for (const auto& s : subgroup_bits(g, cap)) out.push_back(to_group(g, s.members));
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                        b.elements().begin(), b.elements().end());
  });
  return out;
}

PermGroup frattini(const PermGroup& g, std::size_t cap) {
  auto subs = subgroup_bits(g, cap);
  const std::size_t n = g.order();
  Bits acc((n + 63) / 64, 0);
  for (std::size_t i = 0; i < n; ++i) acc[i / 64] |= std::uint64_t{1} << (i % 64);
  for (const auto& m : subs) {
    const std::size_t size = popcount(m.members);
    if (size == n) continue;
    bool maximal = true;
    for (const auto& k : subs) {
      const std::size_t ks = popcount(k.members);
      if (ks > size && ks < n && subset(m.members, k.members)) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= m.members[w];
  }
  return to_group(g, acc);
}

}  // namespace rloops
