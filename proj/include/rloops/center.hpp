#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rloops/congruence.hpp"
#include "rloops/exec.hpp"
#include "rloops/perm_group.hpp"
#include "rloops/right_loop.hpp"
#include "rloops/verdict.hpp"

namespace rloops {

/// A congruence β viewed as a right loop under (x,y)∘(u,v) = (x∘u, y∘v).
/// Pair 0 is (0,0); the remaining pairs follow in lexicographic order.
class PairAlgebra {
 public:
  PairAlgebra(const RightLoop& s, const Congruence& beta);

  const RightLoop& parent() const noexcept { return *s_; }
  const RightLoop& loop() const noexcept { return loop_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  std::pair<Elem, Elem> pair(Elem i) const { return pairs_[i]; }
  /// Index of (x, y), or nullopt when x, y are not β-related.
  std::optional<Elem> index_of(Elem x, Elem y) const;

 private:
  const RightLoop* s_;
  std::vector<std::pair<Elem, Elem>> pairs_;
  std::vector<Elem> index_;  // index_[x * n + y], kNone when unrelated
  RightLoop loop_;
};

/// A congruence on a PairAlgebra: the candidate centering congruence (γ|β).
struct CenteringRelation {
  PairAlgebra beta;
  Congruence delta;
};

/// Smallest congruence on the pair algebra of β that contains every
/// ((x,x),(y,y)) with x γ y and is closed under the swap rule
/// (x,y)~(u,v) ⇒ (y,x)~(v,u) and the composition rule
/// (x,y)~(u,v), (y,z)~(v,w) ⇒ (x,z)~(u,w).
CenteringRelation delta_closure(const RightLoop& s, const Congruence& beta, const Congruence& gamma);

struct CentralityResult {
  bool centralized = false;
  /// First failed condition, e.g. "(ii): class of (0,1) has 2 pairs, class of 0 under γ has 4".
  std::string witness;
};

/// Checks the five centering conditions literally on delta_closure(β, γ).
CentralityResult check_centralized(const RightLoop& s, const Congruence& beta, const Congruence& gamma);
bool is_centralized(const RightLoop& s, const Congruence& beta, const Congruence& gamma);

/// The same five conditions on an arbitrary congruence of the pair algebra.
/// Used by the brute-force oracle.
CentralityResult check_centering_conditions(const PairAlgebra& pa, const Congruence& gamma,
                                            const Congruence& delta);

inline constexpr std::size_t kDefaultCenterCap = 24;

/// ζ(S): the join of every principal congruence centralized by ∇. Throws
/// TheoremViolation if the join is not itself central or its identity class
/// is not an abelian group sitting in the nucleus and commutant of S.
Congruence center_congruence(const RightLoop& s, std::size_t cap = kDefaultCenterCap,
                             Exec exec = Exec::parallel);
/// Z(S), the identity class of ζ(S).
ElemSet center_set(const RightLoop& s, std::size_t cap = kDefaultCenterCap, Exec exec = Exec::parallel);

struct CentralSeries {
  std::vector<ElemSet> terms;          // Z_0 = {0} ⊆ Z_1 ⊆ ... (strictly ascending)
  std::vector<Congruence> congruences; // congruence of each Z_i
  bool nilpotent = false;
  /// n with Z_n = S when nilpotent.
  std::optional<std::size_t> nilpotency_class;
};

CentralSeries upper_central_series(const RightLoop& s, std::size_t cap = kDefaultCenterCap);
bool is_nilpotent(const RightLoop& s, std::size_t cap = kDefaultCenterCap);
std::optional<std::size_t> nilpotency_class(const RightLoop& s, std::size_t cap = kDefaultCenterCap);

/// Every nilpotent right loop is solvable, with S^(i) ⊆ Z_{n-i}.
/// Inconclusive (vacuous) when S is not nilpotent.
Verdict check_nilpotent_implies_solvable(const RightLoop& s, std::size_t cap = kDefaultCenterCap);

struct EtaEmbedding {
  Congruence zeta;
  ElemSet center;
  /// Minimal element of each non-identity ζ-class.
  std::vector<Elem> class_reps;
  /// Ker θ for θ : G_S -> G_{S/Z(S)}.
  PermGroup kernel;
  /// eta[i][j] = z with h(x_j) = z∘x_j for h = kernel.element(i).
  std::vector<std::vector<Elem>> eta;
  /// k - 1 where k = |S/Z(S)|.
  std::size_t factors = 0;
};

/// Builds η : Ker θ -> Z(S)^(k-1) and checks that it is an injective
/// homomorphism. Throws TheoremViolation on any failed step.
EtaEmbedding eta_embedding(const RightLoop& s, std::size_t cap = kDefaultCenterCap);

struct KernelSeries {
  CentralSeries series;
  /// kernels[j] = Ker θ_j for θ_j : G_S -> G_{S/Z_j}, j = 0..n-1.
  std::vector<PermGroup> kernels;
  bool torsion_solvable = false;
};

/// Kernel series of G_S attached to the upper central series of a nilpotent
/// S. Throws PreconditionNotMet when S is not nilpotent and TheoremViolation
/// when a step of the construction fails.
KernelSeries kernel_series(const RightLoop& s, std::size_t cap = kDefaultCenterCap);

}  // namespace rloops
