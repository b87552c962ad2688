#ifndef SGF_FAMILIES_HPP
#define SGF_FAMILIES_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "sgf/pperm.hpp"

namespace sgf {

// The monoid families of partial permutations handled by the engine:
//   kI         all partial permutations (the symmetric inverse monoid)
//   kPoi       order-preserving
//   kPodi      monotone (order-preserving or order-reversing)
//   kOdp       order-preserving isometries
//   kDp        isometries
//   kPoiMinus  order-preserving and co-extensive (is <= i)
//   kPoiPlus   order-preserving and extensive (i <= is)
//   kOdpMinus / kOdpPlus   the same restrictions of kOdp
//   kC2        {identity, reversal}
enum class FamilyId {
  kI,
  kPoi,
  kPodi,
  kOdp,
  kDp,
  kPoiMinus,
  kPoiPlus,
  kOdpMinus,
  kOdpPlus,
  kC2,
};

inline constexpr std::array<FamilyId, 10> kAllFamilies = {
    FamilyId::kI,        FamilyId::kPoi,     FamilyId::kPodi,    FamilyId::kOdp,
    FamilyId::kDp,       FamilyId::kPoiMinus, FamilyId::kPoiPlus, FamilyId::kOdpMinus,
    FamilyId::kOdpPlus,  FamilyId::kC2,
};

// Stable lowercase tags ("poi", "odp-minus", "c2", ...) used in CLI flags
// and JSON output.
std::string_view family_tag(FamilyId f);
std::optional<FamilyId> family_from_tag(std::string_view tag);

// Whether s satisfies the defining predicate conjunction of f.
bool member(FamilyId f, const PartialPerm& s);

// All partial permutations on {1..n} belonging to f, in canonical order.
// Uses the structured generators (domain/image subset pairs for the
// order-preserving families, offset translations for the isometry ones);
// the result is post-checked to contain the identity and to be closed
// under composition.
std::vector<PartialPerm> enumerate(FamilyId f, int n);

// Slow reference path: filters enumerate(kI, n) by member(f, .). Kept as
// the oracle the structured enumeration is tested against.
std::vector<PartialPerm> enumerate_by_filter(FamilyId f, int n);

}  // namespace sgf

#endif  // SGF_FAMILIES_HPP
