#ifndef SGF_MONOID_HPP
#define SGF_MONOID_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sgf/errors.hpp"
#include "sgf/parallel.hpp"
#include "sgf/report.hpp"

namespace sgf {

template <typename A, typename B>
std::string render_element(const std::pair<A, B>& e) {
  return "(" + render_element(e.first) + ", " + render_element(e.second) + ")";
}

// A finite monoid given extensionally: an ordered element list plus a total
// binary operation. Elements are opaque here; equality and ordering are
// delegated to the element type's canonical order, so the same engine hosts
// partial permutations and product pairs alike.
//
// build() sorts the elements, verifies closure, locates the identity and
// checks associativity (exhaustively for small carriers, on sampled triples
// above that). The multiplication table is materialized up to kTableLimit
// elements; larger monoids stay call-based with a bounded memo.
//
// Instances are immutable after build and safe to share across threads.
template <typename E>
class FiniteMonoid {
 public:
  using Element = E;
  using Mult = std::function<E(const E&, const E&)>;

  static constexpr std::size_t kTableLimit = 4096;
  static constexpr std::size_t kAssocExhaustiveLimit = 300;
  static constexpr std::size_t kMemoCap = 1 << 22;

  static FiniteMonoid build(std::vector<E> elements, Mult mult, SweepPolicy policy = {}) {
    if (elements.empty()) throw InvalidParameter("a monoid needs at least one element");
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
      throw InvalidParameter("monoid elements must be pairwise distinct");

    FiniteMonoid m;
    m.elements_ = std::move(elements);
    m.op_ = std::move(mult);
    m.memo_ = std::make_unique<Memo>();
    const std::uint64_t size = m.size();

    if (size <= kTableLimit) {
      m.table_.assign(static_cast<std::size_t>(size * size), 0);
      const auto bad = parallel_find_first(size * size, [&m, size](std::uint64_t t) {
        const auto i = static_cast<std::size_t>(t / size);
        const auto j = static_cast<std::size_t>(t % size);
        const auto k = m.index_of(m.op_(m.elements_[i], m.elements_[j]));
        if (!k) return true;
        m.table_[static_cast<std::size_t>(t)] = static_cast<std::uint32_t>(*k);
        return false;
      });
      if (bad) m.throw_closure(*bad);
    } else {
      const auto outcome = run_sweep(size * size, policy, [&m, size](std::uint64_t t) {
        const auto i = static_cast<std::size_t>(t / size);
        const auto j = static_cast<std::size_t>(t % size);
        return !m.index_of(m.op_(m.elements_[i], m.elements_[j])).has_value();
      });
      if (!outcome.holds) m.throw_closure(*outcome.violation);
    }

    m.id_ = m.locate_identity();
    m.check_associativity(policy);
    return m;
  }

  std::size_t size() const { return elements_.size(); }
  const std::vector<E>& elements() const { return elements_; }
  const E& element(std::size_t i) const { return elements_[i]; }
  std::size_t identity() const { return id_; }
  bool has_table() const { return !table_.empty(); }
  const Mult& op() const { return op_; }

  std::optional<std::size_t> index_of(const E& e) const {
    const auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
    if (it != elements_.end() && *it == e)
      return static_cast<std::size_t>(it - elements_.begin());
    return std::nullopt;
  }

  std::size_t mult(std::size_t i, std::size_t j) const {
    if (!table_.empty()) return table_[i * size() + j];
    const std::uint64_t key = static_cast<std::uint64_t>(i) * size() + j;
    {
      std::lock_guard<std::mutex> lock(memo_->mutex);
      const auto it = memo_->products.find(key);
      if (it != memo_->products.end()) return it->second;
    }
    const E prod = op_(elements_[i], elements_[j]);
    const auto k = index_of(prod);
    if (!k) throw_closure(key);
    {
      std::lock_guard<std::mutex> lock(memo_->mutex);
      if (memo_->products.size() < kMemoCap) memo_->products.emplace(key, *k);
    }
    return *k;
  }

  E mult_values(const E& a, const E& b) const { return op_(a, b); }

 private:
  FiniteMonoid() = default;

  struct Memo {
    std::mutex mutex;
    std::unordered_map<std::uint64_t, std::size_t> products;
  };

  [[noreturn]] void throw_closure(std::uint64_t pair_key) const {
    const auto i = static_cast<std::size_t>(pair_key / size());
    const auto j = static_cast<std::size_t>(pair_key % size());
    const std::string lhs = render_element(elements_[i]);
    const std::string rhs = render_element(elements_[j]);
    throw ClosureViolation("product " + lhs + " * " + rhs + " is not in the element list", lhs,
                           rhs);
  }

  std::size_t locate_identity() const {
    const std::size_t count = size();
    for (std::size_t e = 0; e < count; ++e) {
      if (mult(e, 0) != 0) continue;
      bool ok = true;
      for (std::size_t x = 0; x < count && ok; ++x)
        ok = mult(e, x) == x && mult(x, e) == x;
      if (ok) return e;
    }
    throw NotAMonoid("no identity element found");
  }

  void check_associativity(const SweepPolicy& policy) const {
    const std::uint64_t count = size();
    auto violated = [this, count](std::uint64_t t) {
      const auto i = static_cast<std::size_t>(t / (count * count));
      const auto j = static_cast<std::size_t>((t / count) % count);
      const auto k = static_cast<std::size_t>(t % count);
      return mult(mult(i, j), k) != mult(i, mult(j, k));
    };
    std::optional<std::uint64_t> bad;
    if (count <= kAssocExhaustiveLimit) {
      bad = parallel_find_first(count * count * count, violated);
    } else {
      SweepPolicy sampled = policy;
      sampled.mode = SweepPolicy::Mode::kSampled;
      const auto outcome = run_sweep(count * count * count, sampled, violated);
      if (!outcome.holds) bad = outcome.violation;
    }
    if (bad) {
      const auto i = static_cast<std::size_t>(*bad / (count * count));
      const auto j = static_cast<std::size_t>((*bad / count) % count);
      const auto k = static_cast<std::size_t>(*bad % count);
      throw NotAMonoid("multiplication is not associative at (" + render_element(elements_[i]) +
                       ", " + render_element(elements_[j]) + ", " + render_element(elements_[k]) +
                       ")");
    }
  }

  std::vector<E> elements_;
  Mult op_;
  std::size_t id_ = 0;
  std::vector<std::uint32_t> table_;
  std::unique_ptr<Memo> memo_;
};

// ---------------------------------------------------------------------------
// Partitions and Green's relations

struct Partition {
  std::vector<std::size_t> class_of;
  std::size_t class_count = 0;

  bool all_singletons() const { return class_count == class_of.size(); }

  // True when every class of this partition lies inside one class of
  // `coarser`.
  bool refines(const Partition& coarser) const {
    std::vector<std::size_t> seen(class_count, SIZE_MAX);
    for (std::size_t x = 0; x < class_of.size(); ++x) {
      const std::size_t mine = class_of[x];
      if (seen[mine] == SIZE_MAX)
        seen[mine] = coarser.class_of[x];
      else if (seen[mine] != coarser.class_of[x])
        return false;
    }
    return true;
  }

  std::vector<std::vector<std::size_t>> classes() const {
    std::vector<std::vector<std::size_t>> out(class_count);
    for (std::size_t x = 0; x < class_of.size(); ++x) out[class_of[x]].push_back(x);
    return out;
  }

  bool operator==(const Partition&) const = default;

  // Renumber class ids in order of each class's smallest member.
  void canonicalize() {
    std::vector<std::size_t> rename(class_count, SIZE_MAX);
    std::size_t next = 0;
    for (auto& c : class_of) {
      if (rename[c] == SIZE_MAX) rename[c] = next++;
      c = rename[c];
    }
  }
};

namespace detail {

// Strongly connected components of the graph on [0, node_count) whose
// successor lists are given implicitly: successor(v, t) for t < degree.
// Iterative Tarjan; components come out canonically renumbered.
inline Partition scc_partition(std::size_t node_count, std::size_t degree,
                               const std::function<std::size_t(std::size_t, std::size_t)>& succ) {
  constexpr std::size_t kUnset = SIZE_MAX;
  Partition part;
  part.class_of.assign(node_count, kUnset);

  std::vector<std::size_t> index(node_count, kUnset), low(node_count, 0);
  std::vector<bool> on_stack(node_count, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0, next_class = 0;

  struct Frame {
    std::size_t node;
    std::size_t next_edge;
  };
  std::vector<Frame> call;

  for (std::size_t root = 0; root < node_count; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& fr = call.back();
      const std::size_t v = fr.node;
      if (fr.next_edge == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (fr.next_edge < degree) {
        const std::size_t w = succ(v, fr.next_edge++);
        if (index[w] == kUnset) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        for (;;) {
          const std::size_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          part.class_of[w] = next_class;
          if (w == v) break;
        }
        ++next_class;
      }
      call.pop_back();
      if (!call.empty()) {
        auto& parent = call.back();
        low[parent.node] = std::min(low[parent.node], low[v]);
      }
    }
  }
  part.class_count = next_class;
  part.canonicalize();
  return part;
}

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace detail

struct GreenRelations {
  Partition r, l, j, h, d;
};

// R-, L- and J-classes as strongly connected components of the right, left
// and two-sided Cayley graphs over all elements; H as the meet of R and L;
// D as the join of R and L. In a finite monoid D coincides with J, but the
// two are computed independently so the coincidence can be asserted.
template <typename E>
GreenRelations green(const FiniteMonoid<E>& m) {
  const std::size_t count = m.size();
  GreenRelations g;
  g.r = detail::scc_partition(count, count,
                              [&m](std::size_t v, std::size_t t) { return m.mult(v, t); });
  g.l = detail::scc_partition(count, count,
                              [&m](std::size_t v, std::size_t t) { return m.mult(t, v); });
  g.j = detail::scc_partition(count, 2 * count, [&m, count](std::size_t v, std::size_t t) {
    return t < count ? m.mult(v, t) : m.mult(t - count, v);
  });

  // H = R meet L
  std::unordered_map<std::uint64_t, std::size_t> h_ids;
  g.h.class_of.resize(count);
  for (std::size_t x = 0; x < count; ++x) {
    const std::uint64_t key =
        static_cast<std::uint64_t>(g.r.class_of[x]) * count + g.l.class_of[x];
    const auto [it, fresh] = h_ids.emplace(key, h_ids.size());
    g.h.class_of[x] = it->second;
    (void)fresh;
  }
  g.h.class_count = h_ids.size();
  g.h.canonicalize();

  // D = R join L: merge every R-class and every L-class.
  detail::UnionFind uf(count);
  std::vector<std::size_t> r_rep(g.r.class_count, SIZE_MAX), l_rep(g.l.class_count, SIZE_MAX);
  for (std::size_t x = 0; x < count; ++x) {
    auto& rr = r_rep[g.r.class_of[x]];
    if (rr == SIZE_MAX) rr = x; else uf.merge(x, rr);
    auto& lr = l_rep[g.l.class_of[x]];
    if (lr == SIZE_MAX) lr = x; else uf.merge(x, lr);
  }
  std::unordered_map<std::size_t, std::size_t> d_ids;
  g.d.class_of.resize(count);
  for (std::size_t x = 0; x < count; ++x) {
    const auto [it, fresh] = d_ids.emplace(uf.find(x), d_ids.size());
    g.d.class_of[x] = it->second;
    (void)fresh;
  }
  g.d.class_count = d_ids.size();
  g.d.canonicalize();
  return g;
}

template <typename E>
std::vector<std::size_t> idempotents(const FiniteMonoid<E>& m) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < m.size(); ++x)
    if (m.mult(x, x) == x) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------
// Structural law checks

// x^k = x^{k+1} for some k <= |M|.
template <typename E>
bool element_stabilizes(const FiniteMonoid<E>& m, std::size_t x) {
  std::size_t power = x;
  for (std::size_t step = 0; step < m.size(); ++step) {
    const std::size_t next = m.mult(power, x);
    if (next == power) return true;
    power = next;
  }
  return false;
}

template <typename E>
VerificationReport is_aperiodic(const FiniteMonoid<E>& m, std::string law = "aperiodic") {
  VerificationReport rep;
  rep.law = std::move(law);
  const auto bad = parallel_find_first(
      m.size(), [&m](std::uint64_t x) { return !element_stabilizes(m, x); });
  rep.holds = !bad.has_value();
  rep.checked = bad ? *bad + 1 : m.size();
  if (bad) {
    rep.counterexample = {render_element(m.element(static_cast<std::size_t>(*bad)))};
    rep.note = "powers of this element never stabilize";
  }
  return rep;
}

template <typename E>
VerificationReport is_j_trivial(const FiniteMonoid<E>& m, std::string law = "j-trivial") {
  VerificationReport rep;
  rep.law = std::move(law);
  rep.checked = m.size();
  const Partition j = green(m).j;
  rep.holds = j.all_singletons();
  if (!rep.holds) {
    for (const auto& cls : j.classes()) {
      if (cls.size() > 1) {
        rep.counterexample = {render_element(m.element(cls[0])), render_element(m.element(cls[1]))};
        rep.note = "distinct elements generating the same two-sided ideal";
        break;
      }
    }
  }
  return rep;
}

template <typename E>
bool is_regular_element(const FiniteMonoid<E>& m, std::size_t x) {
  for (std::size_t y = 0; y < m.size(); ++y)
    if (m.mult(m.mult(x, y), x) == x) return true;
  return false;
}

template <typename E>
VerificationReport is_regular(const FiniteMonoid<E>& m, std::string law = "regular") {
  VerificationReport rep;
  rep.law = std::move(law);
  const auto bad = parallel_find_first(
      m.size(), [&m](std::uint64_t x) { return !is_regular_element(m, static_cast<std::size_t>(x)); });
  rep.holds = !bad.has_value();
  rep.checked = bad ? *bad + 1 : m.size();
  if (bad) {
    rep.counterexample = {render_element(m.element(static_cast<std::size_t>(*bad)))};
    rep.note = "no y with xyx = x";
  }
  return rep;
}

template <typename E>
VerificationReport idempotents_commute(const FiniteMonoid<E>& m,
                                       std::string law = "idempotents-commute") {
  VerificationReport rep;
  rep.law = std::move(law);
  const auto es = idempotents(m);
  rep.checked = es.size() * es.size();
  for (std::size_t a = 0; a < es.size(); ++a) {
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      const std::size_t ef = m.mult(es[a], es[b]);
      const std::size_t fe = m.mult(es[b], es[a]);
      if (ef != fe) {
        rep.holds = false;
        rep.counterexample = {render_element(m.element(es[a])), render_element(m.element(es[b]))};
        rep.note = "ef = " + render_element(m.element(ef)) +
                   " but fe = " + render_element(m.element(fe));
        return rep;
      }
    }
  }
  return rep;
}

// Regular with commuting idempotents, i.e. an inverse monoid.
template <typename E>
VerificationReport is_inverse(const FiniteMonoid<E>& m, std::string law = "inverse-monoid") {
  VerificationReport regular = is_regular(m);
  VerificationReport commute = idempotents_commute(m);
  VerificationReport rep;
  rep.law = std::move(law);
  rep.holds = regular.holds && commute.holds;
  rep.checked = regular.checked + commute.checked;
  if (!regular.holds) {
    rep.counterexample = regular.counterexample;
    rep.note = "not regular: " + regular.note;
  } else if (!commute.holds) {
    rep.counterexample = commute.counterexample;
    rep.note = "idempotents do not commute: " + commute.note;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Monoid maps

// A function between two finite monoids, stored as an index table on the
// source. Both monoids must outlive the map.
template <typename SE, typename TE>
struct MonoidMap {
  const FiniteMonoid<SE>* source = nullptr;
  const FiniteMonoid<TE>* target = nullptr;
  std::vector<std::size_t> map;

  static MonoidMap from_function(const FiniteMonoid<SE>& source, const FiniteMonoid<TE>& target,
                                 const std::function<TE(const SE&)>& f) {
    MonoidMap m;
    m.source = &source;
    m.target = &target;
    m.map.reserve(source.size());
    for (std::size_t x = 0; x < source.size(); ++x) {
      const auto idx = target.index_of(f(source.element(x)));
      if (!idx)
        throw InvalidParameter("map image of " + render_element(source.element(x)) +
                               " is not in the target monoid");
      m.map.push_back(*idx);
    }
    return m;
  }
};

// (xy)f = (xf)(yf) over all pairs, plus identity preservation.
template <typename SE, typename TE>
VerificationReport verify_hom(const MonoidMap<SE, TE>& m, SweepPolicy policy = {},
                              std::string law = "homomorphism") {
  VerificationReport rep;
  rep.law = std::move(law);
  const auto& src = *m.source;
  const auto& tgt = *m.target;
  if (m.map[src.identity()] != tgt.identity()) {
    rep.holds = false;
    rep.checked = 1;
    rep.counterexample = {render_element(src.element(src.identity()))};
    rep.note = "identity is not preserved";
    return rep;
  }
  const std::uint64_t count = src.size();
  const auto outcome = run_sweep(count * count, policy, [&](std::uint64_t t) {
    const auto x = static_cast<std::size_t>(t / count);
    const auto y = static_cast<std::size_t>(t % count);
    return m.map[src.mult(x, y)] != tgt.mult(m.map[x], m.map[y]);
  });
  rep.holds = outcome.holds;
  rep.checked = outcome.checked;
  rep.sampled = outcome.sampled;
  rep.seed = outcome.seed;
  if (!outcome.holds) {
    const auto x = static_cast<std::size_t>(*outcome.violation / count);
    const auto y = static_cast<std::size_t>(*outcome.violation % count);
    rep.counterexample = {render_element(src.element(x)), render_element(src.element(y))};
    rep.note = "(xy)f = " + render_element(tgt.element(m.map[src.mult(x, y)])) +
               " but (xf)(yf) = " + render_element(tgt.element(tgt.mult(m.map[x], m.map[y])));
  }
  return rep;
}

template <typename SE, typename TE>
VerificationReport is_surjective(const MonoidMap<SE, TE>& m, std::string law = "surjective") {
  VerificationReport rep;
  rep.law = std::move(law);
  rep.checked = m.target->size();
  std::vector<bool> hit(m.target->size(), false);
  for (const std::size_t t : m.map) hit[t] = true;
  for (std::size_t t = 0; t < hit.size(); ++t) {
    if (!hit[t]) {
      rep.holds = false;
      rep.counterexample = {render_element(m.target->element(t))};
      rep.note = "target element with no preimage";
      return rep;
    }
  }
  return rep;
}

namespace detail {

template <typename SE, typename TE>
VerificationReport injective_on(const MonoidMap<SE, TE>& m, const std::vector<std::size_t>& domain,
                                std::string law) {
  VerificationReport rep;
  rep.law = std::move(law);
  rep.checked = domain.size();
  std::unordered_map<std::size_t, std::size_t> seen;
  for (const std::size_t x : domain) {
    const auto [it, fresh] = seen.emplace(m.map[x], x);
    if (!fresh) {
      rep.holds = false;
      rep.counterexample = {render_element(m.source->element(it->second)),
                            render_element(m.source->element(x))};
      rep.note = "both map to " + render_element(m.target->element(m.map[x]));
      return rep;
    }
  }
  return rep;
}

}  // namespace detail

template <typename SE, typename TE>
VerificationReport is_injective(const MonoidMap<SE, TE>& m, std::string law = "injective") {
  std::vector<std::size_t> all(m.source->size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return detail::injective_on(m, all, std::move(law));
}

template <typename SE, typename TE>
VerificationReport separates_idempotents(const MonoidMap<SE, TE>& m,
                                         std::string law = "separates-idempotents") {
  return detail::injective_on(m, idempotents(*m.source), std::move(law));
}

// ---------------------------------------------------------------------------

template <typename A, typename B>
FiniteMonoid<std::pair<A, B>> direct_product(const FiniteMonoid<A>& m, const FiniteMonoid<B>& n,
                                             SweepPolicy policy = {}) {
  using P = std::pair<A, B>;
  std::vector<P> elems;
  elems.reserve(m.size() * n.size());
  for (const auto& a : m.elements())
    for (const auto& b : n.elements()) elems.emplace_back(a, b);
  auto mult = [op_a = m.op(), op_b = n.op()](const P& x, const P& y) {
    return P(op_a(x.first, y.first), op_b(x.second, y.second));
  };
  return FiniteMonoid<P>::build(std::move(elems), std::move(mult), policy);
}

}  // namespace sgf

#endif  // SGF_MONOID_HPP
