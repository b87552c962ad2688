#include "sgf/constructions.hpp"

#include <algorithm>
#include <string>

#include "sgf/errors.hpp"

namespace sgf {

namespace {

void require_family(FamilyId f, const PartialPerm& p, const char* role) {
  if (!member(f, p))
    throw InvalidParameter(std::string(role) + " argument " + p.str() + " is not in " +
                           std::string(family_tag(f)));
}

std::vector<int> initial_segment(int k) {
  std::vector<int> out(static_cast<std::size_t>(k));
  for (int v = 1; v <= k; ++v) out[static_cast<std::size_t>(v - 1)] = v;
  return out;
}

// {1, 1 + p[1] - p[0], ..., 1 + p[k-1] - p[0]} for ascending p.
std::vector<int> shifted_to_one(const std::vector<int>& points) {
  std::vector<int> out;
  out.reserve(points.size());
  for (const int v : points) out.push_back(1 + v - points.front());
  return out;
}

}  // namespace

PartialPerm poi_left(const PartialPerm& u, const PartialPerm& s) {
  require_family(FamilyId::kPoiPlus, u, "left");
  require_family(FamilyId::kPoiMinus, s, "right");
  const int n = u.chain_size();
  if (u.is_identity()) return s;
  if (s.is_identity()) return PartialPerm::identity(n);
  const PartialPerm us = u.compose(s);
  return PartialPerm::order_iso(us.dom(), initial_segment(us.rank()), n);
}

PartialPerm poi_right(const PartialPerm& u, const PartialPerm& s) {
  require_family(FamilyId::kPoiPlus, u, "left");
  require_family(FamilyId::kPoiMinus, s, "right");
  const int n = u.chain_size();
  if (s.is_identity()) return u;
  if (u.is_identity()) return PartialPerm::identity(n);
  const PartialPerm us = u.compose(s);
  return PartialPerm::order_iso(initial_segment(us.rank()), us.im(), n);
}

PartialPerm odp_left(const PartialPerm& u, const PartialPerm& s) {
  require_family(FamilyId::kOdpPlus, u, "left");
  require_family(FamilyId::kOdpMinus, s, "right");
  const int n = u.chain_size();
  if (u.is_identity()) return s;
  if (s.is_identity()) return PartialPerm::identity(n);
  const PartialPerm us = u.compose(s);
  if (us.is_empty_map()) return PartialPerm::empty(n);
  return PartialPerm::order_iso(us.dom(), shifted_to_one(us.dom()), n);
}

PartialPerm odp_right(const PartialPerm& u, const PartialPerm& s) {
  require_family(FamilyId::kOdpPlus, u, "left");
  require_family(FamilyId::kOdpMinus, s, "right");
  const int n = u.chain_size();
  if (s.is_identity()) return u;
  if (u.is_identity()) return PartialPerm::identity(n);
  const PartialPerm us = u.compose(s);
  if (us.is_empty_map()) return PartialPerm::empty(n);
  // us is order-preserving, so im() lists the values in domain order.
  return PartialPerm::order_iso(shifted_to_one(us.im()), us.im(), n);
}

PartialPerm conj_left(const PartialPerm& x, const PartialPerm& s) {
  const int n = s.chain_size();
  if (!(x == PartialPerm::identity(n) || x == PartialPerm::reversal(n)))
    throw InvalidParameter("conjugating element " + x.str() + " is not 1 or the reversal");
  require_family(FamilyId::kPoi, s, "conjugated");
  return x.compose(s).compose(x);
}

std::string_view construction_tag(ConstructionId c) {
  switch (c) {
    case ConstructionId::kPoiBilateral: return "poi-bilateral";
    case ConstructionId::kOdpBilateral: return "odp-bilateral";
    case ConstructionId::kPodiSemidirect: return "podi-semidirect";
    case ConstructionId::kDpSemidirect: return "dp-semidirect";
  }
  return "?";
}

std::optional<ConstructionId> construction_from_tag(std::string_view tag) {
  for (ConstructionId c : kAllConstructions)
    if (construction_tag(c) == tag) return c;
  return std::nullopt;
}

namespace {

using ActionFn = std::function<PartialPerm(const PartialPerm&, const PartialPerm&)>;

// Wraps `base` so that its output at one fixed input cell is replaced by a
// wrong value of the same family (the empty map, or the identity when the
// true value already is empty).
ActionFn corrupt_at(ActionFn base, PartialPerm cell_u, PartialPerm cell_s, int n) {
  return [base = std::move(base), cell_u = std::move(cell_u), cell_s = std::move(cell_s),
          n](const PartialPerm& u, const PartialPerm& s) {
    PartialPerm value = base(u, s);
    if (u == cell_u && s == cell_s)
      return value.is_empty_map() ? PartialPerm::identity(n) : PartialPerm::empty(n);
    return value;
  };
}

// First element, in canonical order, that is not the identity.
const PartialPerm& first_non_identity(const FiniteMonoid<PartialPerm>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!m.element(i).is_identity()) return m.element(i);
  throw InvalidParameter("monoid has no non-identity element to corrupt");
}

}  // namespace

Construction make_construction(ConstructionId id, int n, std::optional<Mutation> mutation) {
  if (n < 1) throw InvalidParameter("chain size must be at least 1, got " + std::to_string(n));

  Construction c;
  c.id_ = id;
  c.n_ = n;
  ActionFn left, right;
  switch (id) {
    case ConstructionId::kPoiBilateral:
      c.s_family_ = FamilyId::kPoiMinus;
      c.t_family_ = FamilyId::kPoiPlus;
      c.target_ = FamilyId::kPoi;
      left = poi_left;
      right = poi_right;
      break;
    case ConstructionId::kOdpBilateral:
      c.s_family_ = FamilyId::kOdpMinus;
      c.t_family_ = FamilyId::kOdpPlus;
      c.target_ = FamilyId::kOdp;
      left = odp_left;
      right = odp_right;
      break;
    case ConstructionId::kPodiSemidirect:
      c.s_family_ = FamilyId::kPoi;
      c.t_family_ = FamilyId::kC2;
      c.target_ = FamilyId::kPodi;
      left = conj_left;
      right = [](const PartialPerm& u, const PartialPerm&) { return u; };
      break;
    case ConstructionId::kDpSemidirect:
      c.s_family_ = FamilyId::kOdp;
      c.t_family_ = FamilyId::kC2;
      c.target_ = FamilyId::kDp;
      left = conj_left;
      right = [](const PartialPerm& u, const PartialPerm&) { return u; };
      break;
  }
  auto compose_op = [](const PartialPerm& a, const PartialPerm& b) { return a.compose(b); };
  c.s_ = std::make_unique<FiniteMonoid<PartialPerm>>(
      FiniteMonoid<PartialPerm>::build(enumerate(c.s_family_, n), compose_op));
  c.t_ = std::make_unique<FiniteMonoid<PartialPerm>>(
      FiniteMonoid<PartialPerm>::build(enumerate(c.t_family_, n), compose_op));

  if (mutation && mutation->construction == id) {
    const PartialPerm cell_u = first_non_identity(*c.t_);
    const PartialPerm cell_s = first_non_identity(*c.s_);
    if (mutation->side == ActionSide::kLeft)
      left = corrupt_at(std::move(left), cell_u, cell_s, n);
    else
      right = corrupt_at(std::move(right), cell_u, cell_s, n);
  }

  c.actions_ = std::make_unique<ActionPair<PartialPerm, PartialPerm>>(
      *c.s_, *c.t_, std::move(left), std::move(right));
  return c;
}

PartialPerm Construction::mu(const ProductElem& e) const { return e.first.compose(e.second); }

ProductElem Construction::decompose(const PartialPerm& t) const {
  if (t.chain_size() != n_)
    throw InvalidParameter("element " + t.str() + " lives on the wrong chain");
  if (!member(target_, t))
    throw InvalidParameter("element " + t.str() + " is not in " +
                           std::string(family_tag(target_)));
  switch (id_) {
    case ConstructionId::kPoiBilateral: {
      const auto low = initial_segment(t.rank());
      return {PartialPerm::order_iso(t.dom(), low, n_), PartialPerm::order_iso(low, t.im(), n_)};
    }
    case ConstructionId::kOdpBilateral: {
      if (t.is_empty_map()) return {PartialPerm::empty(n_), PartialPerm::empty(n_)};
      const auto mid = shifted_to_one(t.dom());
      return {PartialPerm::order_iso(t.dom(), mid, n_), PartialPerm::order_iso(mid, t.im(), n_)};
    }
    case ConstructionId::kPodiSemidirect:
    case ConstructionId::kDpSemidirect: {
      const FamilyId preserved =
          id_ == ConstructionId::kPodiSemidirect ? FamilyId::kPoi : FamilyId::kOdp;
      if (member(preserved, t)) return {t, PartialPerm::identity(n_)};
      const PartialPerm h = PartialPerm::reversal(n_);
      return {t.compose(h), h};
    }
  }
  throw InvalidParameter("unknown construction");
}

ProductElem embed_podi(const ProductElem& e) {
  return {e.first.compose(e.second), e.second};
}

ProductElem inverse_in_semidirect(const ProductElem& e) {
  const auto& [s, x] = e;
  return {x.compose(s.inverse()).compose(x), x};
}

VerificationReport restriction_check(
    const std::vector<PartialPerm>& s1, const std::vector<PartialPerm>& s2,
    const std::vector<PartialPerm>& t1, const std::vector<PartialPerm>& t2,
    const std::function<PartialPerm(const PartialPerm&, const PartialPerm&)>& left,
    const std::vector<PartialPerm>& target, std::string law) {
  auto sorted = [](std::vector<PartialPerm> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto amb1 = sorted(s1), amb2 = sorted(s2);
  const auto sub1 = sorted(t1), sub2 = sorted(t2);
  const auto want = sorted(target);
  auto contains = [](const std::vector<PartialPerm>& set, const PartialPerm& p) {
    return std::binary_search(set.begin(), set.end(), p);
  };
  for (const auto& p : sub1)
    if (!contains(amb1, p))
      throw InvalidParameter("restriction: " + p.str() + " is not in the ambient first factor");
  for (const auto& p : sub2)
    if (!contains(amb2, p))
      throw InvalidParameter("restriction: " + p.str() + " is not in the ambient second factor");

  VerificationReport rep;
  rep.law = std::move(law);

  // (a) the left action of T2 keeps T1 closed
  for (const auto& s : sub1) {
    for (const auto& u : sub2) {
      ++rep.checked;
      const PartialPerm moved = left(u, s);
      if (!contains(sub1, moved)) {
        rep.holds = false;
        rep.counterexample = {s.str(), u.str()};
        rep.note = "action image " + moved.str() + " escapes the submonoid";
        return rep;
      }
    }
  }

  // (b) the product set T1 T2 is exactly the target
  std::vector<PartialPerm> products;
  products.reserve(sub1.size() * sub2.size());
  for (const auto& a : sub1)
    for (const auto& b : sub2) {
      ++rep.checked;
      products.push_back(a.compose(b));
    }
  std::sort(products.begin(), products.end());
  products.erase(std::unique(products.begin(), products.end()), products.end());
  if (products != want) {
    rep.holds = false;
    for (const auto& p : want)
      if (!contains(products, p)) {
        rep.counterexample = {p.str()};
        rep.note = "target element missing from the product set";
        return rep;
      }
    for (const auto& p : products)
      if (!contains(want, p)) {
        rep.counterexample = {p.str()};
        rep.note = "product set element outside the target";
        return rep;
      }
  }
  return rep;
}

VerificationReport override_consistency(ConstructionId id, int n) {
  if (id != ConstructionId::kPoiBilateral && id != ConstructionId::kOdpBilateral)
    throw InvalidParameter("override consistency only applies to the bilateral constructions");

  const bool poi = id == ConstructionId::kPoiBilateral;
  const auto minus = enumerate(poi ? FamilyId::kPoiMinus : FamilyId::kOdpMinus, n);
  const auto plus = enumerate(poi ? FamilyId::kPoiPlus : FamilyId::kOdpPlus, n);
  const PartialPerm one = PartialPerm::identity(n);

  // The generic domain/image construction, with no identity special-casing.
  auto generic_left = [&](const PartialPerm& u, const PartialPerm& s) {
    const PartialPerm us = u.compose(s);
    if (us.is_empty_map()) return PartialPerm::empty(n);
    return poi ? PartialPerm::order_iso(us.dom(), initial_segment(us.rank()), n)
               : PartialPerm::order_iso(us.dom(), shifted_to_one(us.dom()), n);
  };
  auto generic_right = [&](const PartialPerm& u, const PartialPerm& s) {
    const PartialPerm us = u.compose(s);
    if (us.is_empty_map()) return PartialPerm::empty(n);
    return poi ? PartialPerm::order_iso(initial_segment(us.rank()), us.im(), n)
               : PartialPerm::order_iso(shifted_to_one(us.im()), us.im(), n);
  };

  VerificationReport rep;
  rep.law = std::string("info/") + std::string(construction_tag(id)) + "-override-vs-generic";
  std::uint64_t disagreements = 0;
  std::string first;
  auto tally = [&](const PartialPerm& generic, const PartialPerm& overridden,
                   const std::string& what) {
    ++rep.checked;
    if (generic != overridden) {
      ++disagreements;
      if (first.empty())
        first = what + ": generic " + generic.str() + " vs override " + overridden.str();
    }
  };
  for (const auto& s : minus) {
    tally(generic_left(one, s), s, "1 ◁ " + s.str());
    tally(generic_right(one, s), one, "1^" + s.str());
  }
  for (const auto& u : plus) {
    tally(generic_left(u, one), one, u.str() + " ◁ 1");
    tally(generic_right(u, one), u, u.str() + "^1");
  }
  rep.note = std::to_string(disagreements) + " of " + std::to_string(rep.checked) +
             " identity-argument inputs disagree with the overrides" +
             (first.empty() ? "" : "; first: " + first);
  return rep;
}

}  // namespace sgf
