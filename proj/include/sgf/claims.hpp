#ifndef SGF_CLAIMS_HPP
#define SGF_CLAIMS_HPP

#include <optional>
#include <vector>

#include "sgf/constructions.hpp"
#include "sgf/parallel.hpp"
#include "sgf/report.hpp"

namespace sgf {

struct ClaimsOptions {
  SweepPolicy policy{};
  std::optional<Mutation> mutation{};
};

// Runs the full verification suite at chain size n (n >= 3): the five
// action axioms for all four constructions, the factorization identity
// (u ◁ s)u^s = us for the bilateral ones, the quotient maps (homomorphism,
// surjectivity, preimage recipe), the structural facts about the bilateral
// products (aperiodic, not regular, idempotents not commuting), the
// inverse-monoid structure of POI ⋊ C2 with its inverse formula, idempotent
// shape, idempotent separation and the embedding into PODI x C2, the
// submonoid restriction giving DP, and two informational reports on the
// identity overrides. Reports come back sorted by law name.
std::vector<VerificationReport> run_claims(int n, const ClaimsOptions& options = {});

}  // namespace sgf

#endif  // SGF_CLAIMS_HPP
