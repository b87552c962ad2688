#include "sgf/pperm.hpp"

#include <algorithm>

#include "doctest.h"
#include "sgf/errors.hpp"
#include "test_util.hpp"

using sgf::ChainSizeMismatch;
using sgf::InvalidParameter;
using sgf::PartialPerm;
using sgf::SizeMismatch;
using sgf::testing::all_pperms;
using sgf::testing::compose_pointwise;

namespace {

PartialPerm pp(int n, PartialPerm::Graph g) { return PartialPerm::from_graph(n, std::move(g)); }

}  // namespace

TEST_CASE("identity, empty and reversal") {
  const auto one = PartialPerm::identity(3);
  CHECK(one.graph() == PartialPerm::Graph{{1, 1}, {2, 2}, {3, 3}});
  CHECK(PartialPerm::identity(1).graph() == PartialPerm::Graph{{1, 1}});
  CHECK(PartialPerm::identity(4).dom() == std::vector<int>{1, 2, 3, 4});
  CHECK(PartialPerm::identity(4).im() == std::vector<int>{1, 2, 3, 4});

  CHECK(PartialPerm::empty(3).graph().empty());
  CHECK(PartialPerm::empty(5).rank() == 0);

  CHECK(PartialPerm::reversal(3) == pp(3, {{1, 3}, {2, 2}, {3, 1}}));
  CHECK(PartialPerm::reversal(1) == PartialPerm::identity(1));
  for (int n = 1; n <= 5; ++n)
    CHECK(PartialPerm::reversal(n).compose(PartialPerm::reversal(n)) == PartialPerm::identity(n));

  CHECK_THROWS_AS(PartialPerm::identity(0), InvalidParameter);
  CHECK_THROWS_AS(PartialPerm::empty(-1), InvalidParameter);
}

TEST_CASE("from_graph validates") {
  CHECK_THROWS_AS(pp(3, {{1, 4}}), InvalidParameter);
  CHECK_THROWS_AS(pp(3, {{0, 1}}), InvalidParameter);
  CHECK_THROWS_AS(pp(3, {{1, 2}, {1, 3}}), InvalidParameter);  // not a partial map
  CHECK_THROWS_AS(pp(3, {{1, 2}, {3, 2}}), InvalidParameter);  // not injective
  CHECK(pp(3, {{3, 1}, {1, 2}}).graph() == PartialPerm::Graph{{1, 2}, {3, 1}});  // sorts
}

TEST_CASE("apply") {
  const auto s = pp(3, {{1, 2}});
  CHECK(s.apply(1) == 2);
  CHECK_FALSE(s.apply(2).has_value());
  CHECK(PartialPerm::identity(5).apply(4) == 4);
  CHECK_THROWS_AS(s.apply(0), InvalidParameter);
  CHECK_THROWS_AS(s.apply(4), InvalidParameter);
}

TEST_CASE("dom and im") {
  const auto s = pp(3, {{2, 1}, {3, 2}});
  CHECK(s.dom() == std::vector<int>{2, 3});
  CHECK(s.im() == std::vector<int>{1, 2});
  CHECK(PartialPerm::empty(3).dom().empty());
  CHECK(pp(3, {{1, 3}, {2, 1}}).im() == std::vector<int>{1, 3});
}

TEST_CASE("compose examples") {
  CHECK(pp(3, {{1, 2}, {2, 3}}).compose(pp(3, {{2, 1}, {3, 2}})) == pp(3, {{1, 1}, {2, 2}}));
  CHECK(pp(3, {{1, 2}}).compose(pp(3, {{3, 1}})) == PartialPerm::empty(3));
  const auto one = PartialPerm::identity(3);
  for (const auto& s : all_pperms(3)) {
    CHECK(one.compose(s) == s);
    CHECK(s.compose(one) == s);
    CHECK(PartialPerm::empty(3).compose(s) == PartialPerm::empty(3));
    CHECK(s.compose(PartialPerm::empty(3)) == PartialPerm::empty(3));
  }
  CHECK_THROWS_AS(pp(3, {{1, 1}}).compose(pp(4, {{1, 1}})), ChainSizeMismatch);
}

TEST_CASE("compose agrees with the point-wise oracle") {
  const auto all = all_pperms(3);
  for (const auto& s : all)
    for (const auto& t : all) CHECK(s.compose(t) == compose_pointwise(s, t));
}

TEST_CASE("composition is associative (exhaustive at n = 3)") {
  const auto all = all_pperms(3);
  for (const auto& s : all)
    for (const auto& t : all) {
      const auto st = s.compose(t);
      for (const auto& r : all) CHECK(st.compose(r) == s.compose(t.compose(r)));
    }
}

TEST_CASE("inverse") {
  CHECK(pp(3, {{1, 2}}).inverse() == pp(3, {{2, 1}}));
  CHECK(PartialPerm::identity(3).inverse() == PartialPerm::identity(3));
  CHECK(pp(3, {{1, 3}, {2, 1}}).compose(pp(3, {{1, 3}, {2, 1}}).inverse()) ==
        pp(3, {{1, 1}, {2, 2}}));

  for (const auto& s : all_pperms(3)) {
    CHECK(s.inverse().inverse() == s);
    const auto left = s.compose(s.inverse());
    CHECK(left.is_partial_identity());
    CHECK(left.dom() == s.dom());
    const auto right = s.inverse().compose(s);
    CHECK(right.is_partial_identity());
    CHECK(right.dom() == s.im());
  }
}

TEST_CASE("order_iso") {
  CHECK(PartialPerm::order_iso({1, 3}, {1, 2}, 3) == pp(3, {{1, 1}, {3, 2}}));
  CHECK(PartialPerm::order_iso({}, {}, 3) == PartialPerm::empty(3));
  CHECK(PartialPerm::order_iso({2, 3}, {1, 3}, 3) == pp(3, {{2, 1}, {3, 3}}));
  CHECK_THROWS_AS(PartialPerm::order_iso({1, 2}, {1}, 3), SizeMismatch);

  // an order-preserving element is determined by its domain and image
  for (const auto& s : all_pperms(3))
    if (s.is_order_preserving()) CHECK(PartialPerm::order_iso(s.dom(), s.im(), 3) == s);
}

TEST_CASE("predicates") {
  CHECK(pp(3, {{1, 2}, {3, 3}}).is_order_preserving());
  CHECK_FALSE(pp(3, {{1, 2}, {3, 3}}).is_order_reversing());
  CHECK(pp(3, {{1, 1}, {3, 3}}).is_isometry());
  CHECK_FALSE(pp(3, {{1, 1}, {3, 2}}).is_isometry());
  CHECK(pp(3, {{1, 2}, {2, 3}}).is_extensive());
  CHECK(pp(3, {{2, 1}, {3, 2}}).is_coextensive());
  CHECK(pp(3, {{1, 1}, {2, 2}}).is_partial_identity());
  CHECK_FALSE(pp(3, {{1, 2}}).is_partial_identity());

  // vacuous on the empty map and on singletons
  CHECK(PartialPerm::empty(3).is_order_preserving());
  CHECK(PartialPerm::empty(3).is_order_reversing());
  CHECK(PartialPerm::empty(3).is_isometry());
  CHECK(pp(3, {{2, 3}}).is_order_preserving());
  CHECK(pp(3, {{2, 3}}).is_order_reversing());

  // order-preserving isometries are exactly the gap-preserving maps
  for (const auto& s : all_pperms(4)) {
    bool translation = true;
    for (const auto& [i, j] : s.graph())
      translation = translation &&
                    (j - i == s.graph().front().second - s.graph().front().first);
    CHECK((s.is_isometry() && s.is_order_preserving()) == (s.is_empty_map() || translation));
  }
}

TEST_CASE("conjugating by the reversal swaps order predicates") {
  const auto h = PartialPerm::reversal(3);
  for (const auto& s : all_pperms(3))
    CHECK(s.is_order_preserving() == h.compose(s).is_order_reversing());
}

TEST_CASE("canonical order: rank first, then flattened graph") {
  CHECK(PartialPerm::empty(3) < pp(3, {{1, 1}}));
  CHECK(pp(3, {{1, 3}}) < pp(3, {{2, 1}}));
  CHECK(pp(3, {{3, 3}}) < pp(3, {{1, 1}, {2, 2}}));
  const auto all = all_pperms(3);
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i - 1] < all[i]);
    CHECK(all[i - 1].rank() <= all[i].rank());
  }
}

TEST_CASE("rendering and parsing") {
  CHECK(pp(3, {{1, 3}, {2, 1}}).str() == "[1 2 / 3 1]");
  CHECK(PartialPerm::empty(3).str() == "∅");
  CHECK(PartialPerm::parse("[1 3 / 2 1]", 3) == pp(3, {{1, 2}, {3, 1}}));
  CHECK(PartialPerm::parse("∅", 3) == PartialPerm::empty(3));
  CHECK(PartialPerm::parse(" [ / ] ", 3) == PartialPerm::empty(3));

  for (const auto& s : all_pperms(3)) CHECK(PartialPerm::parse(s.str(), 3) == s);

  CHECK_THROWS_AS(PartialPerm::parse("nonsense", 3), InvalidParameter);
  CHECK_THROWS_AS(PartialPerm::parse("[1 2 / 1]", 3), InvalidParameter);
  CHECK_THROWS_AS(PartialPerm::parse("[1 / 4]", 3), InvalidParameter);
  CHECK_THROWS_AS(PartialPerm::parse("[1 x / 2 1]", 3), InvalidParameter);
}
