#include "sgf/monoid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "sgf/errors.hpp"
#include "sgf/families.hpp"
#include "test_util.hpp"

using sgf::FamilyId;
using sgf::FiniteMonoid;
using sgf::PartialPerm;
using sgf::Partition;

namespace {

using PP = FiniteMonoid<PartialPerm>;

PP::Mult compose_op() {
  return [](const PartialPerm& a, const PartialPerm& b) { return a.compose(b); };
}

PP family_monoid(FamilyId f, int n) { return PP::build(sgf::enumerate(f, n), compose_op()); }

PartialPerm pp(int n, PartialPerm::Graph g) { return PartialPerm::from_graph(n, std::move(g)); }

// Naive Green partitions straight from the ideal definitions: group by the
// literal sets xM^1, M^1x and M^1xM^1.
template <typename E>
Partition partition_by_ideal(const FiniteMonoid<E>& m, int kind) {
  std::map<std::set<std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t x = 0; x < m.size(); ++x) {
    std::set<std::size_t> ideal;
    for (std::size_t a = 0; a < m.size(); ++a) {
      if (kind == 0) ideal.insert(m.mult(x, a));
      if (kind == 1) ideal.insert(m.mult(a, x));
      if (kind == 2)
        for (std::size_t b = 0; b < m.size(); ++b) ideal.insert(m.mult(a, m.mult(x, b)));
    }
    groups[ideal].push_back(x);
  }
  Partition part;
  part.class_of.assign(m.size(), 0);
  std::size_t next = 0;
  for (const auto& [ideal, members] : groups) {
    for (const std::size_t x : members) part.class_of[x] = next;
    ++next;
  }
  part.class_count = next;
  part.canonicalize();
  return part;
}

}  // namespace

TEST_CASE("build") {
  const auto poi3 = family_monoid(FamilyId::kPoi, 3);
  CHECK(poi3.size() == 20);
  CHECK(poi3.element(poi3.identity()) == PartialPerm::identity(3));
  CHECK(poi3.has_table());

  const auto c2 = family_monoid(FamilyId::kC2, 3);
  CHECK(c2.size() == 2);
  const std::size_t h = 1 - c2.identity();
  CHECK(c2.mult(h, h) == c2.identity());
  CHECK(c2.mult(h, c2.identity()) == h);
}

TEST_CASE("build rejects non-closed element lists") {
  try {
    PP::build({PartialPerm::identity(3), pp(3, {{1, 2}})}, compose_op());
    FAIL("expected ClosureViolation");
  } catch (const sgf::ClosureViolation& e) {
    CHECK(e.lhs() == "[1 / 2]");
    CHECK(e.rhs() == "[1 / 2]");  // [1 / 2][1 / 2] is the empty map, which is missing
  }
}

TEST_CASE("build rejects identity-free and duplicate lists") {
  CHECK_THROWS_AS(PP::build({PartialPerm::empty(3), pp(3, {{1, 2}})}, compose_op()),
                  sgf::NotAMonoid);
  CHECK_THROWS_AS(PP::build({PartialPerm::empty(3), PartialPerm::empty(3),
                             PartialPerm::identity(3)},
                            compose_op()),
                  sgf::InvalidParameter);
  CHECK_THROWS_AS(PP::build({}, compose_op()), sgf::InvalidParameter);
}

TEST_CASE("build rejects a non-associative multiplication") {
  // rigged operation on {1, a, b}: aa = b, ab = b, ba = a, bb = b
  const auto one = PartialPerm::identity(2);
  const auto a = pp(2, {{1, 1}});
  const auto b = PartialPerm::empty(2);
  auto rigged = [=](const PartialPerm& x, const PartialPerm& y) {
    if (x == one) return y;
    if (y == one) return x;
    if (x == a && y == a) return b;
    if (x == a && y == b) return b;
    if (x == b && y == a) return a;
    return b;
  };
  CHECK_THROWS_AS(PP::build({one, a, b}, rigged), sgf::NotAMonoid);
}

TEST_CASE("idempotents") {
  const auto poi3 = family_monoid(FamilyId::kPoi, 3);
  const auto es = sgf::idempotents(poi3);
  CHECK(es.size() == 8);  // one partial identity per subset of {1,2,3}
  for (const std::size_t e : es) CHECK(poi3.element(e).is_partial_identity());

  const auto c2 = family_monoid(FamilyId::kC2, 3);
  CHECK(sgf::idempotents(c2) == std::vector<std::size_t>{c2.identity()});
}

TEST_CASE("green on POI_3: R is same-domain, L is same-image, H trivial") {
  const auto poi3 = family_monoid(FamilyId::kPoi, 3);
  const auto g = sgf::green(poi3);
  for (std::size_t x = 0; x < poi3.size(); ++x)
    for (std::size_t y = 0; y < poi3.size(); ++y) {
      const bool same_dom = poi3.element(x).dom() == poi3.element(y).dom();
      const bool same_im = poi3.element(x).im() == poi3.element(y).im();
      CHECK((g.r.class_of[x] == g.r.class_of[y]) == same_dom);
      CHECK((g.l.class_of[x] == g.l.class_of[y]) == same_im);
    }
  CHECK(g.h.all_singletons());

  const auto x = poi3.index_of(pp(3, {{1, 2}}));
  const auto y = poi3.index_of(pp(3, {{1, 3}}));
  REQUIRE(x);
  REQUIRE(y);
  CHECK(g.r.class_of[*x] == g.r.class_of[*y]);
}

TEST_CASE("green matches the literal ideal computation") {
  for (const FamilyId f : {FamilyId::kPoi, FamilyId::kC2, FamilyId::kOdp}) {
    const auto m = family_monoid(f, 3);
    const auto g = sgf::green(m);
    CHECK(g.r == partition_by_ideal(m, 0));
    CHECK(g.l == partition_by_ideal(m, 1));
    CHECK(g.j == partition_by_ideal(m, 2));
  }
}

TEST_CASE("green invariants across the suite") {
  sgf::testing::check_green_invariants(family_monoid(FamilyId::kPoi, 3));
  sgf::testing::check_green_invariants(family_monoid(FamilyId::kC2, 3));
  sgf::testing::check_green_invariants(family_monoid(FamilyId::kPoiMinus, 3));
  sgf::testing::check_green_invariants(family_monoid(FamilyId::kDp, 3));
}

TEST_CASE("a group is a single H-class") {
  const auto c2 = family_monoid(FamilyId::kC2, 3);
  const auto g = sgf::green(c2);
  CHECK(g.h.class_count == 1);
  CHECK_FALSE(g.h.all_singletons());
}

TEST_CASE("aperiodicity") {
  CHECK(sgf::is_aperiodic(family_monoid(FamilyId::kPoi, 3)).holds);
  const auto rep = sgf::is_aperiodic(family_monoid(FamilyId::kC2, 3));
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.counterexample.size() == 1);
  CHECK(rep.counterexample[0] == PartialPerm::reversal(3).str());
}

TEST_CASE("J-triviality") {
  CHECK(sgf::is_j_trivial(family_monoid(FamilyId::kPoiMinus, 3)).holds);
  CHECK(sgf::is_j_trivial(family_monoid(FamilyId::kPoiPlus, 3)).holds);
  CHECK(sgf::is_j_trivial(family_monoid(FamilyId::kOdpMinus, 3)).holds);
  CHECK(sgf::is_j_trivial(family_monoid(FamilyId::kOdpPlus, 3)).holds);
  CHECK_FALSE(sgf::is_j_trivial(family_monoid(FamilyId::kC2, 3)).holds);
  const auto rep = sgf::is_j_trivial(family_monoid(FamilyId::kPoi, 3));
  CHECK_FALSE(rep.holds);  // the rank-one elements are J-related
  CHECK(rep.counterexample.size() == 2);
}

TEST_CASE("the extensive/co-extensive halves have partial identities as idempotents") {
  for (const FamilyId f : {FamilyId::kPoiMinus, FamilyId::kPoiPlus, FamilyId::kOdpMinus,
                           FamilyId::kOdpPlus}) {
    const auto m = family_monoid(f, 3);
    for (const std::size_t e : sgf::idempotents(m)) CHECK(m.element(e).is_partial_identity());
  }
}

TEST_CASE("regularity") {
  const auto poi3 = family_monoid(FamilyId::kPoi, 3);
  CHECK(sgf::is_regular(poi3).holds);
  for (const std::size_t e : sgf::idempotents(poi3)) CHECK(sgf::is_regular_element(poi3, e));
}

TEST_CASE("inverse monoids") {
  for (int n = 3; n <= 4; ++n) {
    for (const FamilyId f : {FamilyId::kPoi, FamilyId::kPodi, FamilyId::kOdp, FamilyId::kDp}) {
      const auto m = family_monoid(f, n);
      CHECK(sgf::idempotents_commute(m).holds);
      CHECK(sgf::is_inverse(m).holds);
    }
  }
}

TEST_CASE("direct product") {
  const auto podi3 = family_monoid(FamilyId::kPodi, 3);
  const auto c2 = family_monoid(FamilyId::kC2, 3);
  const auto prod = sgf::direct_product(podi3, c2);
  CHECK(prod.size() == 60);
  CHECK(prod.element(prod.identity()) ==
        std::pair{PartialPerm::identity(3), PartialPerm::identity(3)});

  const auto trivial = PP::build({PartialPerm::identity(3)}, compose_op());
  const auto as_m = sgf::direct_product(podi3, trivial);
  CHECK(as_m.size() == podi3.size());
  for (std::size_t i = 0; i < as_m.size(); ++i) {
    CHECK(as_m.element(i).first == podi3.element(i));
    for (std::size_t j = 0; j < as_m.size(); ++j)
      CHECK(as_m.mult(i, j) == podi3.mult(i, j));
  }
}

TEST_CASE("monoid maps") {
  const auto minus = family_monoid(FamilyId::kPoiMinus, 3);
  const auto poi3 = family_monoid(FamilyId::kPoi, 3);
  auto inclusion = sgf::MonoidMap<PartialPerm, PartialPerm>::from_function(
      minus, poi3, [](const PartialPerm& s) { return s; });

  CHECK(sgf::verify_hom(inclusion).holds);
  CHECK(sgf::is_injective(inclusion).holds);
  CHECK(sgf::separates_idempotents(inclusion).holds);
  const auto onto = sgf::is_surjective(inclusion);
  CHECK_FALSE(onto.holds);
  CHECK(onto.counterexample.size() == 1);

  // corrupt one image and watch the homomorphism check fail, re-checkably
  auto corrupted = inclusion;
  const auto tweak = minus.index_of(pp(3, {{1, 1}}));
  REQUIRE(tweak);
  corrupted.map[*tweak] = *poi3.index_of(pp(3, {{1, 2}}));
  const auto rep = sgf::verify_hom(corrupted);
  REQUIRE_FALSE(rep.holds);
  REQUIRE(rep.counterexample.size() == 2);
  const auto x = *minus.index_of(PartialPerm::parse(rep.counterexample[0], 3));
  const auto y = *minus.index_of(PartialPerm::parse(rep.counterexample[1], 3));
  CHECK(corrupted.map[minus.mult(x, y)] !=
        poi3.mult(corrupted.map[x], corrupted.map[y]));
}

TEST_CASE("maps must land in the target") {
  const auto poi3 = family_monoid(FamilyId::kPoi, 3);
  const auto c2 = family_monoid(FamilyId::kC2, 3);
  CHECK_THROWS_AS((sgf::MonoidMap<PartialPerm, PartialPerm>::from_function(
                      poi3, c2, [](const PartialPerm& s) { return s; })),
                  sgf::InvalidParameter);
}
