#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rloops/error.hpp"
#include "rloops/exec.hpp"
#include "rloops/perm.hpp"
#include "rloops/perm_group.hpp"

namespace rloops {

using Elem = std::uint32_t;

/// Sorted set of loop elements. Subloops always contain 0.
using ElemSet = std::vector<Elem>;

enum class LoopDefect {
  not_square,
  entry_out_of_range,
  identity_row_violated,
  identity_column_violated,
  right_translation_not_bijective,
};

class LoopValidationError : public InputError {
 public:
  LoopValidationError(LoopDefect defect, std::size_t index, const std::string& what)
      : InputError(what), defect_(defect), index_(index) {}

  LoopDefect defect() const noexcept { return defect_; }
  /// Offending row or column, where meaningful.
  std::size_t index() const noexcept { return index_; }

 private:
  LoopDefect defect_;
  std::size_t index_;
};

/// A finite right loop given by its Cayley table, identity at index 0.
///
/// op(x, y) = x∘y. Every right translation R_y : x -> x∘y is a bijection, so
/// the equation X∘a = b has the unique solution rdiv(b, a).
class RightLoop {
 public:
  /// Trivial loop of order 1.
  RightLoop();

  /// Validates a square table. Throws LoopValidationError.
  static RightLoop from_table(const std::vector<std::vector<Elem>>& rows);
  static RightLoop from_flat(std::size_t order, std::vector<Elem> table);

  /// Like from_table, but if some element other than 0 is a two-sided
  /// identity the table is re-indexed so that it sits at 0.
  static RightLoop from_table_any_identity(const std::vector<std::vector<Elem>>& rows);

  /// Addition table of Z/n.
  static RightLoop cyclic(std::size_t n);

  /// Cayley table of a permutation group, indexed by sorted element order.
  static RightLoop from_group(const PermGroup& g);

  std::size_t order() const noexcept { return n_; }
  Elem op(Elem x, Elem y) const { return table_[x * n_ + y]; }
  /// The unique x with x∘a = b.
  Elem rdiv(Elem b, Elem a) const { return rdiv_[a * n_ + b]; }
  std::span<const Elem> row(Elem x) const { return {table_.data() + x * n_, n_}; }
  std::span<const Elem> table() const noexcept { return table_; }

  /// R_a : x -> x∘a
  Perm right_translation(Elem a) const;

  std::vector<std::vector<Elem>> rows() const;

  friend bool operator==(const RightLoop& a, const RightLoop& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  RightLoop(std::size_t n, std::vector<Elem> table, std::vector<Elem> rdiv)
      : n_(n), table_(std::move(table)), rdiv_(std::move(rdiv)) {}

  std::size_t n_ = 1;
  std::vector<Elem> table_{0};
  std::vector<Elem> rdiv_{0};  // rdiv_[a * n + b] = b / a
};

inline RightLoop loop_from_table(const std::vector<std::vector<Elem>>& rows) {
  return RightLoop::from_table(rows);
}

inline Elem right_divide(const RightLoop& s, Elem b, Elem a) { return s.rdiv(b, a); }

/// f(y,z)(x) is the solution X of X∘(y∘z) = (x∘y)∘z.
Perm f_perm(const RightLoop& s, Elem y, Elem z);

/// Group torsion G_S: the subgroup of Sym(S) generated by all f(y,z).
PermGroup group_torsion(const RightLoop& s);

struct GssResult {
  PermGroup group;
  /// The right translations meet each right coset of G_S in G_SS exactly once.
  bool translations_form_transversal = false;
};

/// G_SS: generated by G_S together with every right translation.
GssResult gss_group(const RightLoop& s);

struct LoopClassification {
  bool is_associative = false;
  bool is_group = false;
  bool is_commutative = false;
  bool is_abelian_group = false;
  /// Lexicographically smallest (x,y,z) with (x∘y)∘z != x∘(y∘z).
  std::optional<std::array<Elem, 3>> nonassociative_triple;
  /// Lexicographically smallest (x,y) with x∘y != y∘x.
  std::optional<std::array<Elem, 2>> noncommuting_pair;
};

LoopClassification classify(const RightLoop& s, Exec exec = Exec::parallel);

/// Homomorphism of right loops, stored as the image of every domain element.
struct LoopHom {
  RightLoop domain;
  RightLoop codomain;
  std::vector<Elem> map;
};

/// Smallest (x, y) with map[x∘y] != map[x]∘map[y], if any.
std::optional<std::array<Elem, 2>> hom_defect(const LoopHom& h);
bool hom_validate(const LoopHom& h);
/// Throws InputError naming the witness pair when h is not a homomorphism.
void require_homomorphism(const LoopHom& h);
ElemSet hom_kernel(const LoopHom& h);
ElemSet hom_image(const LoopHom& h);
bool hom_is_onto(const LoopHom& h);

/// Componentwise product; (x1, x2) is stored at x1 * |S2| + x2.
RightLoop direct_product(const RightLoop& a, const RightLoop& b);

/// Lexicographically first isomorphism a -> b, or nullopt.
std::optional<std::vector<Elem>> loops_isomorphic(const RightLoop& a, const RightLoop& b);

/// True iff `members` contains 0 and is closed under ∘ and right division.
bool is_subloop(const RightLoop& s, const ElemSet& members);

/// The subloop on `members` re-indexed in ascending member order.
/// Throws InputError if `members` is not a subloop.
RightLoop induced_subloop(const RightLoop& s, const ElemSet& members);

/// Every right loop of order n (identity 0), in a fixed enumeration order.
/// There are ((n-1)!)^(n-1) of them; n is limited to 5.
std::vector<RightLoop> enumerate_right_loops(std::size_t n);

}  // namespace rloops
