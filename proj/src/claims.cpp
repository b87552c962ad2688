#include "sgf/claims.hpp"

#include <algorithm>
#include <string>

#include "sgf/bilateral.hpp"
#include "sgf/errors.hpp"
#include "sgf/families.hpp"
#include "sgf/monoid.hpp"

namespace sgf {

namespace {

using Product = FiniteMonoid<ProductElem>;
using PP = FiniteMonoid<PartialPerm>;

PP build_family(FamilyId f, int n, const SweepPolicy& policy) {
  return PP::build(enumerate(f, n),
                   [](const PartialPerm& a, const PartialPerm& b) { return a.compose(b); },
                   policy);
}

// (u ◁ s) u^s = us over all (u, s); the products are taken in the ambient
// monoid of partial permutations.
VerificationReport check_action_factorization(const Construction& c, const SweepPolicy& policy,
                                              std::string law) {
  const auto& s_mon = c.s_monoid();
  const auto& t_mon = c.t_monoid();
  const auto& act = c.actions();
  const std::uint64_t ts = t_mon.size(), ss = s_mon.size();
  const auto outcome = run_sweep(ts * ss, policy, [&](std::uint64_t t) {
    const auto u = static_cast<std::size_t>(t / ss);
    const auto s = static_cast<std::size_t>(t % ss);
    const PartialPerm lhs = s_mon.element(act.left_index(u, s))
                                .compose(t_mon.element(act.right_index(u, s)));
    return lhs != t_mon.element(u).compose(s_mon.element(s));
  });
  return detail::finish_report(std::move(law), outcome, [&](std::uint64_t t) {
    return std::vector<std::string>{
        render_element(t_mon.element(static_cast<std::size_t>(t / ss))),
        render_element(s_mon.element(static_cast<std::size_t>(t % ss)))};
  });
}

VerificationReport check_decompose_identity(const Construction& c, const PP& target,
                                            std::string law) {
  VerificationReport rep;
  rep.law = std::move(law);
  rep.checked = target.size();
  for (const auto& t : target.elements()) {
    const ProductElem pre = c.decompose(t);
    if (c.mu(pre) != t) {
      rep.holds = false;
      rep.counterexample = {t.str()};
      rep.note = "preimage recipe gives " + render_element(pre) + " with mu = " +
                 c.mu(pre).str();
      return rep;
    }
  }
  return rep;
}

// The bilateral products are not regular: (e, empty) with e = [1 / 1] is a
// concrete non-regular element.
VerificationReport check_not_regular(const Product& m, int n, std::string law) {
  VerificationReport rep;
  rep.law = std::move(law);
  const ProductElem witness{PartialPerm::from_graph(n, {{1, 1}}), PartialPerm::empty(n)};
  const auto idx = m.index_of(witness);
  if (!idx) {
    rep.holds = false;
    rep.note = "witness " + render_element(witness) + " is not in the product";
    return rep;
  }
  rep.checked = m.size();
  rep.holds = !is_regular_element(m, *idx);
  rep.note = rep.holds ? "non-regular witness: " + render_element(witness)
                       : "witness " + render_element(witness) + " is regular after all";
  return rep;
}

// ...nor idempotent-commuting: (1, e) and (f, f) with e = [1 / 1] and
// f = [1 2 / 1 2] are idempotents whose products differ, (e, e) vs (f, e).
VerificationReport check_idempotents_not_commuting(const Product& m, int n, std::string law) {
  VerificationReport rep;
  rep.law = std::move(law);
  const PartialPerm e = PartialPerm::from_graph(n, {{1, 1}});
  const PartialPerm f = PartialPerm::from_graph(n, {{1, 1}, {2, 2}});
  const PartialPerm one = PartialPerm::identity(n);
  const auto a = m.index_of(ProductElem{one, e});
  const auto b = m.index_of(ProductElem{f, f});
  if (!a || !b) {
    rep.holds = false;
    rep.note = "witness idempotents are not in the product";
    return rep;
  }
  rep.checked = 4;
  const bool idem = m.mult(*a, *a) == *a && m.mult(*b, *b) == *b;
  const std::size_t ab = m.mult(*a, *b), ba = m.mult(*b, *a);
  const bool products_as_expected = m.element(ab) == ProductElem{e, e} &&
                                    m.element(ba) == ProductElem{f, e};
  rep.holds = idem && products_as_expected && ab != ba;
  rep.note = "(1,e)(f,f) = " + render_element(m.element(ab)) +
             ", (f,f)(1,e) = " + render_element(m.element(ba));
  return rep;
}

// Idempotents of S ⋊ C2 are exactly the pairs (e, 1) with e idempotent in S.
VerificationReport check_idempotent_shape(const Product& m, const PP& s_mon, int n,
                                          std::string law) {
  VerificationReport rep;
  rep.law = std::move(law);
  std::vector<ProductElem> expected;
  for (const std::size_t e : idempotents(s_mon))
    expected.emplace_back(s_mon.element(e), PartialPerm::identity(n));
  std::sort(expected.begin(), expected.end());
  std::vector<ProductElem> actual;
  for (const std::size_t x : idempotents(m)) actual.push_back(m.element(x));
  rep.checked = std::max(expected.size(), actual.size());
  rep.holds = expected == actual;
  if (!rep.holds) {
    for (const auto& x : actual)
      if (!std::binary_search(expected.begin(), expected.end(), x)) {
        rep.counterexample = {render_element(x)};
        rep.note = "idempotent not of the form (e, 1)";
        return rep;
      }
    for (const auto& x : expected)
      if (std::find(actual.begin(), actual.end(), x) == actual.end()) {
        rep.counterexample = {render_element(x)};
        rep.note = "(e, 1) is not idempotent in the product";
        return rep;
      }
  }
  return rep;
}

// (x s^-1 x, x) is the unique inverse of every (s, x).
VerificationReport check_inverse_formula(const Product& m, std::string law) {
  VerificationReport rep;
  rep.law = std::move(law);
  rep.checked = m.size();
  for (std::size_t x = 0; x < m.size(); ++x) {
    const ProductElem formula = inverse_in_semidirect(m.element(x));
    const auto fi = m.index_of(formula);
    if (!fi) {
      rep.holds = false;
      rep.counterexample = {render_element(m.element(x))};
      rep.note = "formula inverse " + render_element(formula) + " is not in the product";
      return rep;
    }
    for (std::size_t y = 0; y < m.size(); ++y) {
      const bool generalized_inverse =
          m.mult(m.mult(x, y), x) == x && m.mult(m.mult(y, x), y) == y;
      if (generalized_inverse != (y == *fi)) {
        rep.holds = false;
        rep.counterexample = {render_element(m.element(x)), render_element(m.element(y))};
        rep.note = generalized_inverse ? "second generalized inverse found"
                                       : "formula value is not a generalized inverse";
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace

std::vector<VerificationReport> run_claims(int n, const ClaimsOptions& options) {
  if (n < 3)
    throw InvalidParameter("the claims suite asserts laws for chain size 3 and up, got " +
                           std::to_string(n));
  const SweepPolicy& policy = options.policy;
  std::vector<VerificationReport> out;

  for (const ConstructionId cid : kAllConstructions) {
    const std::string tag{construction_tag(cid)};
    std::optional<Mutation> mutation;
    if (options.mutation && options.mutation->construction == cid) mutation = options.mutation;
    const Construction c = make_construction(cid, n, mutation);

    auto axioms = check_all(c.actions(), policy, tag);
    const bool axioms_ok =
        std::all_of(axioms.begin(), axioms.end(), [](const auto& r) { return r.holds; });
    for (auto& rep : axioms) out.push_back(std::move(rep));

    if (c.bilateral())
      out.push_back(check_action_factorization(c, policy, tag + "/action-factorization"));

    if (!axioms_ok) continue;  // nothing downstream is meaningful

    const Product product = build_bilateral(c.actions(), policy, tag);
    const PP target = build_family(c.target_family(), n, policy);
    const auto mu_map = MonoidMap<ProductElem, PartialPerm>::from_function(
        product, target, [&c](const ProductElem& e) { return c.mu(e); });
    out.push_back(verify_hom(mu_map, policy, tag + "/mu-hom"));
    out.push_back(is_surjective(mu_map, tag + "/mu-surjective"));
    out.push_back(check_decompose_identity(c, target, tag + "/mu-decompose-identity"));

    switch (cid) {
      case ConstructionId::kPoiBilateral:
      case ConstructionId::kOdpBilateral:
        out.push_back(is_aperiodic(product, tag + "/aperiodic"));
        out.push_back(check_not_regular(product, n, tag + "/not-regular"));
        out.push_back(check_idempotents_not_commuting(product, n, tag + "/idempotents-not-commuting"));
        break;
      case ConstructionId::kPodiSemidirect: {
        out.push_back(is_inverse(product, tag + "/inverse-monoid"));
        out.push_back(check_idempotent_shape(product, c.s_monoid(), n, tag + "/idempotent-shape"));
        out.push_back(check_inverse_formula(product, tag + "/inverse-formula"));
        out.push_back(separates_idempotents(mu_map, tag + "/mu-separates-idempotents"));

        const PP c2 = build_family(FamilyId::kC2, n, policy);
        const auto podi_x_c2 = direct_product(target, c2, policy);
        const auto embedding = MonoidMap<ProductElem, ProductElem>::from_function(
            product, podi_x_c2, [](const ProductElem& e) { return embed_podi(e); });
        out.push_back(verify_hom(embedding, policy, tag + "/embedding-hom"));
        out.push_back(is_injective(embedding, tag + "/embedding-injective"));

        out.push_back(restriction_check(
            c.s_monoid().elements(), c2.elements(), c.s_monoid().elements(), c2.elements(),
            conj_left, target.elements(), tag + "/factorization"));
        break;
      }
      case ConstructionId::kDpSemidirect: {
        const PP c2 = build_family(FamilyId::kC2, n, policy);
        out.push_back(restriction_check(enumerate(FamilyId::kPoi, n), c2.elements(),
                                        c.s_monoid().elements(), c2.elements(), conj_left,
                                        target.elements(), tag + "/restriction"));
        break;
      }
    }
  }

  out.push_back(override_consistency(ConstructionId::kPoiBilateral, n));
  out.push_back(override_consistency(ConstructionId::kOdpBilateral, n));

  std::sort(out.begin(), out.end(),
            [](const VerificationReport& a, const VerificationReport& b) { return a.law < b.law; });
  return out;
}

}  // namespace sgf
