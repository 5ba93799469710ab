#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "rloops/perm.hpp"

namespace rloops {

inline constexpr std::size_t kDefaultOrderCap = 1'000'000;
inline constexpr std::size_t kDefaultFrattiniCap = 200;

/// Process-wide cap on the order of any group built by closure.
std::size_t order_cap() noexcept;
void set_order_cap(std::size_t cap) noexcept;

/// A finite permutation group stored by its full, sorted element list.
///
/// Groups are immutable; copies share the element storage. Element index i
/// refers to elements()[i], and index 0 is always the identity.
class PermGroup {
 public:
  /// Trivial group of degree 0.
  PermGroup();

  static PermGroup trivial(std::size_t degree);

  /// Smallest subgroup of Sym(degree) containing `gens`.
  /// Throws CapExceeded if the order passes `cap`.
  static PermGroup generate(std::size_t degree, std::span<const Perm> gens,
                            std::size_t cap = order_cap());

  /// Wraps a set already known to be a subgroup. Throws InputError if the
  /// set is not closed under multiplication.
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> elements);

  std::size_t degree() const noexcept;
  std::size_t order() const noexcept;
  std::span<const Perm> elements() const noexcept;
  std::span<const Perm> generators() const noexcept;
  const Perm& identity() const noexcept;
  const Perm& element(std::size_t i) const { return elements()[i]; }

  bool contains(const Perm& p) const;
  std::optional<std::size_t> index_of(const Perm& p) const;
  bool is_subgroup_of(const PermGroup& g) const;
  bool is_trivial() const noexcept { return order() == 1; }
  bool is_abelian() const;

  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  struct Data;
  static std::shared_ptr<Data> make_data(std::size_t degree, std::vector<Perm> gens,
                                         std::vector<Perm> elements);
  explicit PermGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

PermGroup group_closure(std::size_t degree, std::span<const Perm> gens,
                        std::size_t cap = order_cap());

/// Right cosets Hx of a subgroup, listed with H first and the rest ordered by
/// their lexicographically minimal element.
class CosetDecomposition {
 public:
  CosetDecomposition(PermGroup group, PermGroup subgroup);

  const PermGroup& group() const noexcept { return group_; }
  const PermGroup& subgroup() const noexcept { return subgroup_; }
  std::size_t size() const noexcept { return cosets_.size(); }

  /// Element indices (into group().elements()) of coset i, ascending.
  std::span<const std::uint32_t> coset(std::size_t i) const { return cosets_[i]; }
  /// Minimal element of coset i.
  const Perm& rep(std::size_t i) const { return group_.element(cosets_[i].front()); }
  std::size_t coset_of_index(std::size_t element_index) const { return coset_of_[element_index]; }
  /// Throws InputError when g is not in the group.
  std::size_t coset_of(const Perm& g) const;

 private:
  PermGroup group_;
  PermGroup subgroup_;
  std::vector<std::vector<std::uint32_t>> cosets_;
  std::vector<std::uint32_t> coset_of_;
};

/// Throws InputError unless H <= G.
CosetDecomposition right_cosets(const PermGroup& g, const PermGroup& h);

struct CoreResult {
  PermGroup core;
  bool core_free = false;
};

/// Largest normal subgroup of G contained in H.
CoreResult core(const PermGroup& g, const PermGroup& h);

PermGroup normal_closure(const PermGroup& g, std::span<const Perm> elements);
PermGroup derived_subgroup(const PermGroup& g);

struct GroupDerivedSeries {
  std::vector<PermGroup> terms;  // G = D0 >= D1 >= ... (stable at the end)
  bool solvable = false;
};

GroupDerivedSeries derived_series(const PermGroup& g);

/// gamma_1 = G, gamma_{i+1} = [gamma_i, G], until stable.
std::vector<PermGroup> lower_central_series(const PermGroup& g);
/// Nilpotency class, or nullopt when the group is not nilpotent.
std::optional<std::size_t> nilpotency_class(const PermGroup& g);

/// The prime p when |G| = p^k with k >= 1; nullopt otherwise (also for |G| = 1).
std::optional<std::uint64_t> p_group_prime(const PermGroup& g);

PermGroup center(const PermGroup& g);
PermGroup normalizer(const PermGroup& g, const PermGroup& h);
bool is_normal(const PermGroup& g, const PermGroup& n);

/// Homomorphism from a permutation group into Sym(codomain_degree),
/// tabulated on every domain element.
class GroupHom {
 public:
  GroupHom(PermGroup domain, std::size_t codomain_degree, std::vector<Perm> images);

  const PermGroup& domain() const noexcept { return domain_; }
  std::size_t codomain_degree() const noexcept { return codomain_degree_; }
  /// Image of domain().element(i).
  const Perm& image_of_index(std::size_t i) const { return images_[i]; }
  const Perm& operator()(const Perm& g) const;

  PermGroup image() const;
  PermGroup kernel() const;
  /// True iff image(ab) = image(a) image(b) on every pair (quadratic scan).
  bool is_homomorphism() const;

 private:
  PermGroup domain_;
  std::size_t codomain_degree_;
  std::vector<Perm> images_;
};

/// Action of G on the right cosets of H, coset i <-> reps[i].
/// `reps` must contain exactly one element of every coset.
GroupHom coset_action(const PermGroup& g, const PermGroup& h, std::span<const Perm> reps);
/// Same, indexed by the default coset order of right_cosets().
GroupHom coset_action(const PermGroup& g, const PermGroup& h);

/// G/N realized as the coset action image. Throws InputError unless N is normal.
PermGroup quotient_group(const PermGroup& g, const PermGroup& n);

/// Every subgroup of G, ordered by (order, element list). |G| must not exceed `cap`.
std::vector<PermGroup> all_subgroups(const PermGroup& g, std::size_t cap = kDefaultFrattiniCap);

/// Intersection of all maximal subgroups (G itself when G is trivial).
PermGroup frattini(const PermGroup& g, std::size_t cap = kDefaultFrattiniCap);

/// Multiplication table over element indices: table[i * |G| + j] = index of g_i g_j.
std::vector<std::uint32_t> multiplication_table(const PermGroup& g);

}  // namespace rloops
