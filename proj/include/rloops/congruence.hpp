#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rloops/exec.hpp"
#include "rloops/perm_group.hpp"
#include "rloops/right_loop.hpp"

namespace rloops {

/// An equivalence relation on {0..n-1} stored in canonical form: class
/// labels are assigned in order of first appearance, so element 0 is in
/// class 0 and two congruences are equal iff their label vectors are.
///
/// Because labels follow first appearance, class k is also the class with
/// the k-th smallest minimal member.
class Congruence {
 public:
  Congruence() = default;

  /// Canonicalizes arbitrary labels. No algebraic check is made.
  static Congruence from_labels(std::span<const Elem> labels);
  static Congruence diagonal(std::size_t n);
  static Congruence full(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t num_classes() const noexcept { return num_classes_; }
  Elem class_of(Elem x) const { return labels_[x]; }
  bool related(Elem a, Elem b) const { return labels_[a] == labels_[b]; }
  std::span<const Elem> labels() const noexcept { return labels_; }

  /// Classes in label order, each ascending.
  std::vector<ElemSet> classes() const;
  /// The class of 0.
  ElemSet identity_class() const;

  bool is_diagonal() const noexcept { return num_classes_ == labels_.size(); }
  bool is_full() const noexcept { return num_classes_ == 1; }

  /// True iff every pair related here is related in `coarser` (this ⊆ coarser).
  bool refines(const Congruence& coarser) const;

  /// "[0,1,1,0]"
  std::string to_string() const;

  auto operator<=>(const Congruence&) const = default;
  bool operator==(const Congruence&) const = default;

 private:
  std::vector<Elem> labels_;
  std::size_t num_classes_ = 0;
};

/// Intersection of two partitions.
Congruence meet(const Congruence& a, const Congruence& b);

/// True iff the partition given by `labels` is compatible with ∘.
/// Throws InputError when labels has the wrong length.
bool is_congruence(const RightLoop& s, std::span<const Elem> labels);
bool is_congruence(const RightLoop& s, const Congruence& c);

/// Incremental congruence generation: union-find for the equivalence plus a
/// worklist of merged pairs whose translates still have to be merged.
class CongruenceBuilder {
 public:
  explicit CongruenceBuilder(const RightLoop& s);

  /// Queues a pair; call close() to restore the congruence property.
  void add(Elem a, Elem b);
  /// Adds every pair of `c`.
  void add(const Congruence& c);
  /// Processes the worklist. Returns the number of class merges performed.
  std::size_t close();

  Elem find(Elem x);
  bool related(Elem a, Elem b) { return find(a) == find(b); }
  Congruence result();

 private:
  const RightLoop* s_;
  std::vector<Elem> parent_;
  std::vector<std::pair<Elem, Elem>> pending_;
};

/// Smallest congruence containing `pairs`.
Congruence congruence_closure(const RightLoop& s, std::span<const std::pair<Elem, Elem>> pairs);
/// Cg(a, b)
Congruence principal_congruence(const RightLoop& s, Elem a, Elem b);
Congruence join(const RightLoop& s, const Congruence& a, const Congruence& b);

ElemSet invariant_from_congruence(const Congruence& c);

/// Candidate relation {(x∘y, y) : x ∈ T, y ∈ S}, as a congruence when it is one.
/// Throws InputError when T is not a right subloop. For T = {0} the result
/// is the diagonal.
std::optional<Congruence> congruence_from_invariant(const RightLoop& s, const ElemSet& t);
bool is_invariant_subloop(const RightLoop& s, const ElemSet& t);
/// Like congruence_from_invariant, but throws InputError when T is not invariant.
Congruence require_invariant(const RightLoop& s, const ElemSet& t);

struct Quotient {
  RightLoop loop;
  LoopHom projection;
};

/// S/c with classes ordered by minimal member (the class of 0 first).
Quotient quotient_loop(const RightLoop& s, const Congruence& c);

/// Congruence generated by {(x, f(y,z)(x))}: smallest with a group quotient.
Congruence smallest_group_congruence(const RightLoop& s);
/// Adds {(x∘y, y∘x)}: smallest with an abelian group quotient.
Congruence smallest_abelian_congruence(const RightLoop& s);
/// Identity class of smallest_abelian_congruence.
ElemSet derived_subloop(const RightLoop& s);

struct LoopDerivedSeries {
  std::vector<ElemSet> terms;  // S = S^(0) ⊇ S^(1) ⊇ ..., element sets of S
  bool solvable = false;
};

LoopDerivedSeries derived_series_loop(const RightLoop& s);

inline constexpr std::size_t kDefaultLatticeCap = 12;

struct CongruenceLattice {
  std::vector<Congruence> congruences;  // sorted
  std::vector<std::size_t> join_table;  // join_table[i * N + j]
  std::vector<std::size_t> meet_table;

  std::size_t size() const noexcept { return congruences.size(); }
  std::optional<std::size_t> index_of(const Congruence& c) const;
};

/// Every congruence of S: principal congruences closed under joins.
CongruenceLattice all_congruences(const RightLoop& s, std::size_t cap = kDefaultLatticeCap,
                                  Exec exec = Exec::parallel);

/// Every invariant right subloop of S, ascending by (size, members).
std::vector<ElemSet> invariant_subloops(const RightLoop& s, std::size_t cap = kDefaultLatticeCap);

/// h(T) for an onto homomorphism and invariant T; asserted invariant in the codomain.
ElemSet image_invariant(const LoopHom& h, const ElemSet& t);
/// h^-1(T'); asserted invariant in the domain.
ElemSet preimage_invariant(const LoopHom& h, const ElemSet& t);
/// T -> h(T) is a bijection from invariant subloops containing ker h onto
/// the invariant subloops of the codomain.
bool correspondence_check(const LoopHom& h, std::size_t cap = kDefaultLatticeCap);

struct TorsionHom {
  PermGroup source;  // G_S
  PermGroup target;  // G_{S/c}
  std::vector<Perm> images;  // images[i] = θ(source.element(i))
  PermGroup kernel;
};

/// The onto homomorphism G_S -> G_{S/c} induced by the projection. Throws
/// TheoremViolation if θ is ill-defined, misses G_{S/c}, or the orders
/// disagree with |G_S| = |ker θ| |G_{S/c}|.
TorsionHom torsion_hom(const RightLoop& s, const Congruence& c);

}  // namespace rloops
