#ifndef SGF_CONSTRUCTIONS_HPP
#define SGF_CONSTRUCTIONS_HPP

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sgf/bilateral.hpp"
#include "sgf/families.hpp"
#include "sgf/monoid.hpp"
#include "sgf/pperm.hpp"
#include "sgf/report.hpp"

namespace sgf {

// Concrete actions between the distinguished submonoids of the symmetric
// inverse monoid. Composition order is left-to-right throughout: us means
// u applied first, then s.

// Left action of POI+ on POI-: u ◁ s has the domain of us and image packed
// onto {1..|Dom(us)|}. Explicit identity overrides come first: 1 ◁ s = s
// and u ◁ 1 = 1. Arguments must belong to POI+ / POI- respectively.
PartialPerm poi_left(const PartialPerm& u, const PartialPerm& s);

// Right action of POI- on POI+: u^s has the image of us and domain packed
// onto {1..|Im(us)|}; overrides u^1 = u and 1^s = 1.
PartialPerm poi_right(const PartialPerm& u, const PartialPerm& s);

// The isometry variants: instead of packing onto an initial segment, the
// image of u ◁ s (resp. domain of u^s) keeps the gaps of Dom(us), shifted
// to start at 1. Both are empty when us is empty. Arguments must belong to
// ODP+ / ODP-.
PartialPerm odp_left(const PartialPerm& u, const PartialPerm& s);
PartialPerm odp_right(const PartialPerm& u, const PartialPerm& s);

// Conjugation x ◁ s = xsx for x in {1, h}; maps POI into POI (and ODP
// into ODP, since conjugating twice by the reversal restores order).
PartialPerm conj_left(const PartialPerm& x, const PartialPerm& s);

// The four decompositions the engine can build and verify:
//   poi-bilateral    POI-  ⋈ POI+  ->> POI
//   odp-bilateral    ODP-  ⋈ ODP+  ->> ODP
//   podi-semidirect  POI   ⋊ C2    ->> PODI
//   dp-semidirect    ODP   ⋊ C2    ->> DP
enum class ConstructionId { kPoiBilateral, kOdpBilateral, kPodiSemidirect, kDpSemidirect };

inline constexpr std::array<ConstructionId, 4> kAllConstructions = {
    ConstructionId::kPoiBilateral,
    ConstructionId::kOdpBilateral,
    ConstructionId::kPodiSemidirect,
    ConstructionId::kDpSemidirect,
};

std::string_view construction_tag(ConstructionId c);
std::optional<ConstructionId> construction_from_tag(std::string_view tag);

// Self-test hook: corrupts one output of the named action (the first cell,
// in canonical element order, where neither argument is the identity) so
// the axiom suite must catch it.
enum class ActionSide { kLeft, kRight };
struct Mutation {
  ConstructionId construction;
  ActionSide side;
};

using ProductElem = std::pair<PartialPerm, PartialPerm>;

// One instantiated decomposition: the two factor monoids, the action pair
// between them, the quotient map mu(s, u) = su onto the target family, and
// the canonical preimage recipe witnessing surjectivity.
class Construction {
 public:
  ConstructionId id() const { return id_; }
  int chain_size() const { return n_; }
  bool bilateral() const {
    return id_ == ConstructionId::kPoiBilateral || id_ == ConstructionId::kOdpBilateral;
  }
  FamilyId target_family() const { return target_; }
  FamilyId s_family() const { return s_family_; }
  FamilyId t_family() const { return t_family_; }

  const FiniteMonoid<PartialPerm>& s_monoid() const { return *s_; }
  const FiniteMonoid<PartialPerm>& t_monoid() const { return *t_; }
  const ActionPair<PartialPerm, PartialPerm>& actions() const { return *actions_; }

  PartialPerm mu(const ProductElem& e) const;

  // The canonical preimage of t under mu; mu(decompose(t)) == t. Throws
  // InvalidParameter when t is outside the target family.
  ProductElem decompose(const PartialPerm& t) const;

 private:
  friend Construction make_construction(ConstructionId, int, std::optional<Mutation>);

  ConstructionId id_{};
  int n_ = 0;
  FamilyId target_{}, s_family_{}, t_family_{};
  std::unique_ptr<FiniteMonoid<PartialPerm>> s_, t_;
  std::unique_ptr<ActionPair<PartialPerm, PartialPerm>> actions_;
};

Construction make_construction(ConstructionId id, int n,
                               std::optional<Mutation> mutation = std::nullopt);

// The embedding (s, x) -> (sx, x) of POI ⋊ C2 into PODI x C2.
ProductElem embed_podi(const ProductElem& e);

// (s, x) -> (x s^-1 x, x), the inverse of (s, x) in POI ⋊ C2.
ProductElem inverse_in_semidirect(const ProductElem& e);

// Submonoid restriction check for a semidirect quotient: given T1 ⊆ S1 and
// T2 ⊆ S2 (as sorted element sets), verifies that the left action of T2
// keeps T1 closed, and that the product set T1T2 equals `target`.
VerificationReport restriction_check(
    const std::vector<PartialPerm>& s1, const std::vector<PartialPerm>& s2,
    const std::vector<PartialPerm>& t1, const std::vector<PartialPerm>& t2,
    const std::function<PartialPerm(const PartialPerm&, const PartialPerm&)>& left,
    const std::vector<PartialPerm>& target, std::string law = "restriction");

// Informational (never failing) report on where the generic domain/image
// action formulas, evaluated at identity arguments, disagree with the
// explicit identity overrides. Only meaningful for the two bilateral
// constructions.
VerificationReport override_consistency(ConstructionId id, int n);

}  // namespace sgf

#endif  // SGF_CONSTRUCTIONS_HPP
