#ifndef SGF_TEST_UTIL_HPP
#define SGF_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "sgf/monoid.hpp"
#include "sgf/pperm.hpp"

namespace sgf::testing {

// Independent generator of every partial permutation on {1..n}: assigns to
// each point, in order, either "undefined" or an unused image point. Used
// as the oracle for the structured enumerations.
inline std::vector<PartialPerm> all_pperms(int n) {
  std::vector<PartialPerm> out;
  PartialPerm::Graph current;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self, int point) -> void {
    if (point > n) {
      out.push_back(PartialPerm::from_graph(n, current));
      return;
    }
    self(self, point + 1);  // point stays undefined
    for (int image = 1; image <= n; ++image) {
      if (used[static_cast<std::size_t>(image)]) continue;
      used[static_cast<std::size_t>(image)] = true;
      current.emplace_back(point, image);
      self(self, point + 1);
      current.pop_back();
      used[static_cast<std::size_t>(image)] = false;
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

// Point-wise composition oracle, deliberately avoiding PartialPerm::compose
// and apply: scans the graphs linearly.
inline PartialPerm compose_pointwise(const PartialPerm& s, const PartialPerm& t) {
  PartialPerm::Graph g;
  for (int i = 1; i <= s.chain_size(); ++i) {
    int mid = 0;
    for (const auto& [a, b] : s.graph())
      if (a == i) mid = b;
    if (mid == 0) continue;
    for (const auto& [a, b] : t.graph())
      if (a == mid) g.emplace_back(i, b);
  }
  return PartialPerm::from_graph(s.chain_size(), g);
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) /
                                        static_cast<std::uint64_t>(i);
  return result;
}

// H refines R and L, R and L refine D, D coincides with J, and the
// power-chain aperiodicity test agrees with H-triviality.
template <typename E>
void check_green_invariants(const FiniteMonoid<E>& m) {
  const auto g = green(m);
  CHECK(g.h.refines(g.r));
  CHECK(g.h.refines(g.l));
  CHECK(g.r.refines(g.d));
  CHECK(g.l.refines(g.d));
  CHECK(g.d == g.j);
  CHECK(is_aperiodic(m).holds == g.h.all_singletons());
}

}  // namespace sgf::testing

#endif  // SGF_TEST_UTIL_HPP
