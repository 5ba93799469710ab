#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rloops/congruence.hpp"
#include "rloops/exec.hpp"
#include "rloops/perm_group.hpp"
#include "rloops/right_loop.hpp"
#include "rloops/verdict.hpp"

namespace rloops {

/// A group G with a subgroup H and the right coset decomposition of H in G.
class GroupPair {
 public:
  /// Throws InputError unless H <= G.
  GroupPair(PermGroup g, PermGroup h);

  const PermGroup& group() const noexcept { return g_; }
  const PermGroup& subgroup() const noexcept { return h_; }
  const CosetDecomposition& cosets() const noexcept { return cosets_; }
  bool core_free() const noexcept { return core_free_; }
  std::size_t index() const noexcept { return cosets_.size(); }

 private:
  PermGroup g_;
  PermGroup h_;
  CosetDecomposition cosets_;
  bool core_free_;
};

enum class TransversalDefect { not_in_group, duplicate_coset, missing_coset, non_identity_rep_for_h };

class TransversalError : public InputError {
 public:
  TransversalError(TransversalDefect defect, std::string what) : InputError(what), defect_(defect) {}
  TransversalDefect defect() const noexcept { return defect_; }

 private:
  TransversalDefect defect_;
};

/// One representative per right coset of H, with the identity for H itself.
/// reps()[i] lies in coset i of the decomposition, so loop element i is
/// reps()[i] and element 0 is the identity.
class Transversal {
 public:
  /// Accepts the representatives in any order. Throws TransversalError.
  static Transversal from_reps(std::shared_ptr<const GroupPair> pair, const std::vector<Perm>& reps);
  /// Representatives given by their index inside each coset (choice[0] is ignored).
  static Transversal from_choice(std::shared_ptr<const GroupPair> pair, const std::vector<std::uint32_t>& choice);

  const GroupPair& pair() const noexcept { return *pair_; }
  std::shared_ptr<const GroupPair> pair_ptr() const noexcept { return pair_; }
  const std::vector<Perm>& reps() const noexcept { return reps_; }
  const Perm& rep(Elem i) const { return reps_[i]; }
  const RightLoop& loop() const noexcept { return loop_; }
  bool generating() const noexcept { return generating_; }
  std::size_t size() const noexcept { return reps_.size(); }

  /// Loop element whose coset contains g.
  Elem element_of(const Perm& g) const { return static_cast<Elem>(pair_->cosets().coset_of(g)); }
  /// Loop elements whose representatives lie in `set`.
  ElemSet elements_in(const PermGroup& set) const;

 private:
  Transversal(std::shared_ptr<const GroupPair> pair, std::vector<Perm> reps);

  std::shared_ptr<const GroupPair> pair_;
  std::vector<Perm> reps_;
  RightLoop loop_;
  bool generating_ = false;
};

/// x∘y is the representative of the coset H·x·y.
RightLoop induced_loop(const Transversal& t);

/// f(x,y) = x·y·(x∘y)^-1, an element of H.
Perm cocycle(const Transversal& t, Elem x, Elem y);
/// x θ h, the representative of the coset H·x·h.
Elem theta(const Transversal& t, Elem x, const Perm& h);

/// x θ f(y,z) agrees with the loop's own f(y,z)(x) for all x, y, z.
Verdict check_torsion_action_agreement(const Transversal& t);

bool is_generating(const Transversal& t);

/// With H core-free and S generating, the coset action of G is exactly G_SS
/// on S and the image of H is exactly G_S. Inconclusive otherwise.
Verdict verify_embedding(const Transversal& t);

/// For N normal in G with H <= N: G/N and S/(N∩S) are isomorphic.
Verdict check_quotient_by_normal_overgroup(const Transversal& t, const PermGroup& n);

/// Smallest congruence containing every (x, x θ h).
Congruence theta_congruence(const Transversal& t);

/// For a congruence U containing every (x, x θ h) with identity class T:
/// N = HT is normal, N∩S = T, S/U is a group and G/N ≅ S/U.
Verdict check_theta_closed_congruence(const Transversal& t, const Congruence& u);

/// For S nilpotent, generating and H core-free: H is solvable, and when
/// |S| is a prime power both H and G are p-groups.
Verdict check_nilpotent_transversal_corollaries(const Transversal& t);

// ---------------------------------------------------------------------------
// Search

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound);
};

enum class SearchMode { exhaustive, sampled };

struct SearchPredicates {
  bool generating = false;
  bool solvable = false;
  bool nilpotent = false;
  bool not_nilpotent = false;
  std::function<bool(const Transversal&)> custom;

  bool needs_center() const { return nilpotent || not_nilpotent; }
};

inline constexpr std::size_t kDefaultSearchCap = 1'000'000;

struct SearchSpec {
  SearchPredicates predicates;
  SearchMode mode = SearchMode::exhaustive;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultSearchCap;
  /// Compute the center and nilpotency for every candidate, not only when a
  /// predicate needs them.
  bool analyze_center = false;
  Exec exec = Exec::parallel;
};

struct CandidateSummary {
  std::size_t ordinal = 0;             // position in the candidate stream
  std::vector<std::uint32_t> choice;   // index inside each coset
  std::vector<Perm> reps;
  bool generating = false;
  bool solvable = false;
  std::size_t derived_length = 0;      // number of proper derived steps
  std::optional<bool> nilpotent;
  std::optional<std::size_t> center_size;
};

struct SearchOutcome {
  std::size_t examined = 0;
  std::vector<CandidateSummary> matches;
};

/// Number of transversals: |H|^(k-1), saturating at SIZE_MAX.
std::size_t transversal_count(const GroupPair& pair);

/// Candidate choices in stream order. Exhaustive: odometer over cosets 1..k-1,
/// last coset fastest, elements ascending within each coset. Sampled: one
/// splitmix64 draw per coset 1..k-1 per sample. Throws CapExceeded.
std::vector<std::vector<std::uint32_t>> search_choices(const GroupPair& pair, const SearchSpec& spec);

/// Visits every candidate in stream order; `visit` sees the transversal and its summary.
void for_each_candidate(std::shared_ptr<const GroupPair> pair, const SearchSpec& spec,
                        const std::function<void(const Transversal&, const CandidateSummary&)>& visit);

SearchOutcome search_transversals(std::shared_ptr<const GroupPair> pair, const SearchSpec& spec);

/// Solvable generating transversal of a core-free subgroup forces a solvable
/// group; on every candidate also S^(1) = S ∩ HG^(1), HG^(1) = HS^(1) and
/// HS^(n) = H(HS^(n-1))^(1), and G_SS is solvable when S is.
Verdict check_solvable_generating_transversals(std::shared_ptr<const GroupPair> pair, const SearchSpec& spec);

/// For G nilpotent of class at most 2 and H core-free: Z(G)∩S = Z(S) on every
/// generating candidate, and Z(G)∩Φ(G)∩S = {1} when G is a p-group.
Verdict check_class_two_centers(std::shared_ptr<const GroupPair> pair, const SearchSpec& spec);

}  // namespace rloops
