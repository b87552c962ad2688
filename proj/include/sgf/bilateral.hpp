#ifndef SGF_BILATERAL_HPP
#define SGF_BILATERAL_HPP

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sgf/errors.hpp"
#include "sgf/monoid.hpp"
#include "sgf/parallel.hpp"
#include "sgf/report.hpp"

namespace sgf {

// A candidate pair of actions between two finite monoids S and T:
//   left(u, s)   the left action of T on S, written u ◁ s
//   right(u, s)  the right action of S on T, written u^s
// The pair is only usable for a product once the five axiom checks below
// pass: both monoidal laws, identity preservation, the anti-homomorphism
// law (uv) ◁ s = u ◁ (v ◁ s), the homomorphism law u^(sr) = (u^s)^r, and
// the two compatibility rules
//   (uv)^s = u^(v ◁ s) v^s        (sequential processing)
//   u ◁ (sr) = (u ◁ s)(u^s ◁ r)   (serial composition).
//
// Action values are resolved to element indices and memoized on first use
// (a dense atomic table up to kTableLimit cells, a locked map above).
// Copies share the memo. The factor monoids must outlive the pair and any
// product built from it.
template <typename SE, typename TE>
class ActionPair {
 public:
  using LeftFn = std::function<SE(const TE&, const SE&)>;
  using RightFn = std::function<TE(const TE&, const SE&)>;

  static constexpr std::uint64_t kTableLimit = 1000000;

  ActionPair(const FiniteMonoid<SE>& s_monoid, const FiniteMonoid<TE>& t_monoid, LeftFn left,
             RightFn right)
      : state_(std::make_shared<State>()) {
    state_->s = &s_monoid;
    state_->t = &t_monoid;
    state_->left = std::move(left);
    state_->right = std::move(right);
    const std::uint64_t cells =
        static_cast<std::uint64_t>(s_monoid.size()) * t_monoid.size();
    if (cells <= kTableLimit) {
      state_->left_cache = std::make_unique<std::atomic<std::int32_t>[]>(cells);
      state_->right_cache = std::make_unique<std::atomic<std::int32_t>[]>(cells);
      for (std::uint64_t i = 0; i < cells; ++i) {
        state_->left_cache[i].store(-1, std::memory_order_relaxed);
        state_->right_cache[i].store(-1, std::memory_order_relaxed);
      }
    }
  }

  const FiniteMonoid<SE>& s_monoid() const { return *state_->s; }
  const FiniteMonoid<TE>& t_monoid() const { return *state_->t; }

  // Index in S of t_monoid[u] ◁ s_monoid[s].
  std::size_t left_index(std::size_t u, std::size_t s) const {
    return state_->resolve(u, s, /*left=*/true);
  }

  // Index in T of t_monoid[u] ^ s_monoid[s].
  std::size_t right_index(std::size_t u, std::size_t s) const {
    return state_->resolve(u, s, /*left=*/false);
  }

  SE left_value(const TE& u, const SE& s) const { return state_->left(u, s); }
  TE right_value(const TE& u, const SE& s) const { return state_->right(u, s); }

 private:
  struct State {
    const FiniteMonoid<SE>* s = nullptr;
    const FiniteMonoid<TE>* t = nullptr;
    LeftFn left;
    RightFn right;
    std::unique_ptr<std::atomic<std::int32_t>[]> left_cache, right_cache;
    std::mutex map_mutex;
    std::unordered_map<std::uint64_t, std::size_t> left_map, right_map;

    std::size_t resolve(std::size_t u, std::size_t si, bool is_left) {
      const std::uint64_t key = static_cast<std::uint64_t>(u) * s->size() + si;
      auto* cache = (is_left ? left_cache : right_cache).get();
      if (cache) {
        const std::int32_t hit = cache[key].load(std::memory_order_acquire);
        if (hit >= 0) return static_cast<std::size_t>(hit);
      } else {
        std::lock_guard<std::mutex> lock(map_mutex);
        auto& map = is_left ? left_map : right_map;
        const auto it = map.find(key);
        if (it != map.end()) return it->second;
      }
      std::size_t idx;
      if (is_left) {
        const SE value = left(t->element(u), s->element(si));
        const auto found = s->index_of(value);
        if (!found)
          throw InvalidParameter("left action image " + render_element(value) +
                                 " is not an element of S");
        idx = *found;
      } else {
        const TE value = right(t->element(u), s->element(si));
        const auto found = t->index_of(value);
        if (!found)
          throw InvalidParameter("right action image " + render_element(value) +
                                 " is not an element of T");
        idx = *found;
      }
      if (cache) {
        cache[key].store(static_cast<std::int32_t>(idx), std::memory_order_release);
      } else {
        std::lock_guard<std::mutex> lock(map_mutex);
        auto& map = is_left ? left_map : right_map;
        map.emplace(key, idx);
      }
      return idx;
    }
  };

  std::shared_ptr<State> state_;
};

namespace detail {

inline VerificationReport finish_report(
    std::string law, const SweepOutcome& out,
    const std::function<std::vector<std::string>(std::uint64_t)>& render_violation) {
  VerificationReport rep;
  rep.law = std::move(law);
  rep.holds = out.holds;
  rep.checked = out.checked;
  rep.sampled = out.sampled;
  rep.seed = out.seed;
  if (!out.holds) rep.counterexample = render_violation(*out.violation);
  return rep;
}

}  // namespace detail

// Both monoidal laws (u ◁ 1 = 1, 1^s = 1) and both identity-preservation
// laws (1 ◁ s = s, u^1 = u). These spaces are linear in |S| + |T|, so the
// sweep is always exhaustive.
template <typename SE, typename TE>
VerificationReport check_monoidal(const ActionPair<SE, TE>& a, SweepPolicy = {},
                                  std::string law = "monoidal") {
  const auto& s_mon = a.s_monoid();
  const auto& t_mon = a.t_monoid();
  const std::size_t one_s = s_mon.identity(), one_t = t_mon.identity();
  VerificationReport rep;
  rep.law = std::move(law);
  for (std::size_t s = 0; s < s_mon.size(); ++s) {
    ++rep.checked;
    if (a.left_index(one_t, s) != s) {
      rep.holds = false;
      rep.counterexample = {render_element(s_mon.element(s))};
      rep.note = "identity law 1 ◁ s = s violated";
      return rep;
    }
  }
  for (std::size_t u = 0; u < t_mon.size(); ++u) {
    ++rep.checked;
    if (a.right_index(u, one_s) != u) {
      rep.holds = false;
      rep.counterexample = {render_element(t_mon.element(u))};
      rep.note = "identity law u^1 = u violated";
      return rep;
    }
  }
  for (std::size_t u = 0; u < t_mon.size(); ++u) {
    ++rep.checked;
    if (a.left_index(u, one_s) != one_s) {
      rep.holds = false;
      rep.counterexample = {render_element(t_mon.element(u))};
      rep.note = "monoidal law u ◁ 1 = 1 violated";
      return rep;
    }
  }
  for (std::size_t s = 0; s < s_mon.size(); ++s) {
    ++rep.checked;
    if (a.right_index(one_t, s) != one_t) {
      rep.holds = false;
      rep.counterexample = {render_element(s_mon.element(s))};
      rep.note = "monoidal law 1^s = 1 violated";
      return rep;
    }
  }
  return rep;
}

// (uv) ◁ s = u ◁ (v ◁ s) over (u, v, s), plus 1 ◁ s = s.
template <typename SE, typename TE>
VerificationReport check_left_antihom(const ActionPair<SE, TE>& a, SweepPolicy policy = {},
                                      std::string law = "left-antihom") {
  const auto& s_mon = a.s_monoid();
  const auto& t_mon = a.t_monoid();
  for (std::size_t s = 0; s < s_mon.size(); ++s) {
    if (a.left_index(t_mon.identity(), s) != s) {
      VerificationReport rep;
      rep.law = std::move(law);
      rep.holds = false;
      rep.checked = s + 1;
      rep.counterexample = {render_element(s_mon.element(s))};
      rep.note = "identity law 1 ◁ s = s violated";
      return rep;
    }
  }
  const std::uint64_t ts = t_mon.size(), ss = s_mon.size();
  const auto outcome = run_sweep(ts * ts * ss, policy, [&](std::uint64_t t) {
    const auto u = static_cast<std::size_t>(t / (ts * ss));
    const auto v = static_cast<std::size_t>((t / ss) % ts);
    const auto s = static_cast<std::size_t>(t % ss);
    return a.left_index(t_mon.mult(u, v), s) != a.left_index(u, a.left_index(v, s));
  });
  return detail::finish_report(std::move(law), outcome, [&](std::uint64_t t) {
    return std::vector<std::string>{
        render_element(t_mon.element(static_cast<std::size_t>(t / (ts * ss)))),
        render_element(t_mon.element(static_cast<std::size_t>((t / ss) % ts))),
        render_element(s_mon.element(static_cast<std::size_t>(t % ss)))};
  });
}

// u^(sr) = (u^s)^r over (u, s, r), plus u^1 = u.
template <typename SE, typename TE>
VerificationReport check_right_hom(const ActionPair<SE, TE>& a, SweepPolicy policy = {},
                                   std::string law = "right-hom") {
  const auto& s_mon = a.s_monoid();
  const auto& t_mon = a.t_monoid();
  for (std::size_t u = 0; u < t_mon.size(); ++u) {
    if (a.right_index(u, s_mon.identity()) != u) {
      VerificationReport rep;
      rep.law = std::move(law);
      rep.holds = false;
      rep.checked = u + 1;
      rep.counterexample = {render_element(t_mon.element(u))};
      rep.note = "identity law u^1 = u violated";
      return rep;
    }
  }
  const std::uint64_t ts = t_mon.size(), ss = s_mon.size();
  const auto outcome = run_sweep(ts * ss * ss, policy, [&](std::uint64_t t) {
    const auto u = static_cast<std::size_t>(t / (ss * ss));
    const auto s = static_cast<std::size_t>((t / ss) % ss);
    const auto r = static_cast<std::size_t>(t % ss);
    return a.right_index(u, s_mon.mult(s, r)) != a.right_index(a.right_index(u, s), r);
  });
  return detail::finish_report(std::move(law), outcome, [&](std::uint64_t t) {
    return std::vector<std::string>{
        render_element(t_mon.element(static_cast<std::size_t>(t / (ss * ss)))),
        render_element(s_mon.element(static_cast<std::size_t>((t / ss) % ss))),
        render_element(s_mon.element(static_cast<std::size_t>(t % ss)))};
  });
}

// Sequential processing: (uv)^s = u^(v ◁ s) v^s over (u, v, s).
template <typename SE, typename TE>
VerificationReport check_spr(const ActionPair<SE, TE>& a, SweepPolicy policy = {},
                             std::string law = "spr") {
  const auto& s_mon = a.s_monoid();
  const auto& t_mon = a.t_monoid();
  const std::uint64_t ts = t_mon.size(), ss = s_mon.size();
  const auto outcome = run_sweep(ts * ts * ss, policy, [&](std::uint64_t t) {
    const auto u = static_cast<std::size_t>(t / (ts * ss));
    const auto v = static_cast<std::size_t>((t / ss) % ts);
    const auto s = static_cast<std::size_t>(t % ss);
    const std::size_t lhs = a.right_index(t_mon.mult(u, v), s);
    const std::size_t rhs =
        t_mon.mult(a.right_index(u, a.left_index(v, s)), a.right_index(v, s));
    return lhs != rhs;
  });
  return detail::finish_report(std::move(law), outcome, [&](std::uint64_t t) {
    return std::vector<std::string>{
        render_element(t_mon.element(static_cast<std::size_t>(t / (ts * ss)))),
        render_element(t_mon.element(static_cast<std::size_t>((t / ss) % ts))),
        render_element(s_mon.element(static_cast<std::size_t>(t % ss)))};
  });
}

// Serial composition: u ◁ (sr) = (u ◁ s)(u^s ◁ r) over (u, s, r).
template <typename SE, typename TE>
VerificationReport check_scr(const ActionPair<SE, TE>& a, SweepPolicy policy = {},
                             std::string law = "scr") {
  const auto& s_mon = a.s_monoid();
  const auto& t_mon = a.t_monoid();
  const std::uint64_t ts = t_mon.size(), ss = s_mon.size();
  const auto outcome = run_sweep(ts * ss * ss, policy, [&](std::uint64_t t) {
    const auto u = static_cast<std::size_t>(t / (ss * ss));
    const auto s = static_cast<std::size_t>((t / ss) % ss);
    const auto r = static_cast<std::size_t>(t % ss);
    const std::size_t lhs = a.left_index(u, s_mon.mult(s, r));
    const std::size_t rhs =
        s_mon.mult(a.left_index(u, s), a.left_index(a.right_index(u, s), r));
    return lhs != rhs;
  });
  return detail::finish_report(std::move(law), outcome, [&](std::uint64_t t) {
    return std::vector<std::string>{
        render_element(t_mon.element(static_cast<std::size_t>(t / (ss * ss)))),
        render_element(s_mon.element(static_cast<std::size_t>((t / ss) % ss))),
        render_element(s_mon.element(static_cast<std::size_t>(t % ss)))};
  });
}

// All five axiom checks, cheapest first, so a failure points at the most
// primitive violated law. Law names get "<label>/" prefixed when a label
// is given.
template <typename SE, typename TE>
std::vector<VerificationReport> check_all(const ActionPair<SE, TE>& a, SweepPolicy policy = {},
                                          const std::string& label = "") {
  const std::string prefix = label.empty() ? "" : label + "/";
  std::vector<VerificationReport> out;
  out.push_back(check_monoidal(a, policy, prefix + "monoidal"));
  out.push_back(check_left_antihom(a, policy, prefix + "left-antihom"));
  out.push_back(check_right_hom(a, policy, prefix + "right-hom"));
  out.push_back(check_spr(a, policy, prefix + "spr"));
  out.push_back(check_scr(a, policy, prefix + "scr"));
  return out;
}

// The bilateral semidirect product on S x T with multiplication
//   (s, u)(r, v) = (s(u ◁ r), u^r v).
// All five axiom checks must pass first; the first failing report is
// thrown as InvalidAction. Associativity is re-verified independently by
// FiniteMonoid::build.
template <typename SE, typename TE>
FiniteMonoid<std::pair<SE, TE>> build_bilateral(const ActionPair<SE, TE>& a,
                                                SweepPolicy policy = {},
                                                const std::string& label = "") {
  for (auto& rep : check_all(a, policy, label))
    if (!rep.holds) throw InvalidAction(std::move(rep));

  using P = std::pair<SE, TE>;
  const auto& s_mon = a.s_monoid();
  const auto& t_mon = a.t_monoid();
  std::vector<P> elems;
  elems.reserve(s_mon.size() * t_mon.size());
  for (const auto& s : s_mon.elements())
    for (const auto& u : t_mon.elements()) elems.emplace_back(s, u);

  auto mult = [a](const P& x, const P& y) -> P {
    const auto& s_mon = a.s_monoid();
    const auto& t_mon = a.t_monoid();
    const std::size_t s = *s_mon.index_of(x.first);
    const std::size_t u = *t_mon.index_of(x.second);
    const std::size_t r = *s_mon.index_of(y.first);
    const std::size_t v = *t_mon.index_of(y.second);
    return P(s_mon.element(s_mon.mult(s, a.left_index(u, r))),
             t_mon.element(t_mon.mult(a.right_index(u, r), v)));
  };
  return FiniteMonoid<P>::build(std::move(elems), std::move(mult), policy);
}

// Semidirect product S ⋊ T: bilateral product with the trivial right
// action u^s = u, which reduces the multiplication to (s(u ◁ r), uv).
template <typename SE, typename TE>
FiniteMonoid<std::pair<SE, TE>> build_semidirect(const FiniteMonoid<SE>& s_mon,
                                                 const FiniteMonoid<TE>& t_mon,
                                                 typename ActionPair<SE, TE>::LeftFn left,
                                                 SweepPolicy policy = {},
                                                 const std::string& label = "") {
  ActionPair<SE, TE> a(s_mon, t_mon, std::move(left),
                       [](const TE& u, const SE&) { return u; });
  return build_bilateral(a, policy, label);
}

// Reverse semidirect product: trivial left action u ◁ s = s, so the
// multiplication reduces to (sr, u^r v).
template <typename SE, typename TE>
FiniteMonoid<std::pair<SE, TE>> build_reverse_semidirect(
    const FiniteMonoid<SE>& s_mon, const FiniteMonoid<TE>& t_mon,
    typename ActionPair<SE, TE>::RightFn right, SweepPolicy policy = {},
    const std::string& label = "") {
  ActionPair<SE, TE> a(s_mon, t_mon, [](const TE&, const SE& s) { return s; },
                       std::move(right));
  return build_bilateral(a, policy, label);
}

}  // namespace sgf

#endif  // SGF_BILATERAL_HPP
