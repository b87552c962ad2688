#include "sgf/families.hpp"

#include <algorithm>
#include <string>

#include "sgf/errors.hpp"
#include "sgf/parallel.hpp"

namespace sgf {

namespace {

// All k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int next, int depth) -> void {
    if (depth == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n - (k - depth - 1); ++v) {
      cur[static_cast<std::size_t>(depth)] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 1, 0);
  return out;
}

std::vector<PartialPerm> enumerate_all(int n) {
  std::vector<PartialPerm> out;
  for (int k = 0; k <= n; ++k) {
    const auto doms = subsets_of_size(n, k);
    const auto ims = subsets_of_size(n, k);
    for (const auto& d : doms) {
      for (const auto& m : ims) {
        std::vector<int> arrangement = m;
        std::sort(arrangement.begin(), arrangement.end());
        do {
          PartialPerm::Graph g;
          g.reserve(static_cast<std::size_t>(k));
          for (int t = 0; t < k; ++t)
            g.emplace_back(d[static_cast<std::size_t>(t)], arrangement[static_cast<std::size_t>(t)]);
          out.push_back(PartialPerm::from_graph(n, std::move(g)));
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
      }
    }
  }
  return out;
}

// Order-preserving elements are exactly the order isomorphisms between
// equal-size subset pairs (dom, im); `keep` filters the pair.
template <typename Keep>
std::vector<PartialPerm> enumerate_subset_pairs(int n, Keep keep) {
  std::vector<PartialPerm> out;
  for (int k = 0; k <= n; ++k) {
    const auto doms = subsets_of_size(n, k);
    for (const auto& d : doms)
      for (const auto& m : subsets_of_size(n, k))
        if (keep(d, m)) out.push_back(PartialPerm::order_iso(d, m, n));
  }
  return out;
}

// Order-preserving isometries are the translations i -> i + c restricted
// to subsets of the valid window for the offset c.
std::vector<PartialPerm> enumerate_translations(int n, int min_offset, int max_offset) {
  std::vector<PartialPerm> out;
  out.push_back(PartialPerm::empty(n));
  for (int c = min_offset; c <= max_offset; ++c) {
    const int lo = std::max(1, 1 - c);
    const int hi = std::min(n, n - c);
    if (lo > hi) continue;
    const int width = hi - lo + 1;
    // nonempty subsets of the window {lo..hi}
    for (unsigned long mask = 1; mask < (1UL << width); ++mask) {
      PartialPerm::Graph g;
      for (int b = 0; b < width; ++b)
        if (mask & (1UL << b)) g.emplace_back(lo + b, lo + b + c);
      out.push_back(PartialPerm::from_graph(n, std::move(g)));
    }
  }
  return out;
}

std::vector<PartialPerm> append_reversal_coset(std::vector<PartialPerm> base, int n) {
  const PartialPerm h = PartialPerm::reversal(n);
  const std::size_t count = base.size();
  for (std::size_t k = 0; k < count; ++k) base.push_back(base[k].compose(h));
  return base;
}

void canonicalize(std::vector<PartialPerm>& elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
}

// Every family list is a monoid: the identity is present and the list is
// closed under composition. Exhaustive up to the auto sweep limit,
// sampled above it.
void post_check_monoid(const std::vector<PartialPerm>& elems, FamilyId f, int n) {
  const PartialPerm one = PartialPerm::identity(n);
  if (!std::binary_search(elems.begin(), elems.end(), one))
    throw Error(std::string("family ") + std::string(family_tag(f)) + " lost its identity at n=" +
                std::to_string(n));
  const std::uint64_t count = elems.size();
  const auto outcome = run_sweep(count * count, SweepPolicy{}, [&](std::uint64_t t) {
    const auto& a = elems[static_cast<std::size_t>(t / count)];
    const auto& b = elems[static_cast<std::size_t>(t % count)];
    return !std::binary_search(elems.begin(), elems.end(), a.compose(b));
  });
  if (!outcome.holds)
    throw Error(std::string("family ") + std::string(family_tag(f)) +
                " is not closed under composition at n=" + std::to_string(n));
}

}  // namespace

std::string_view family_tag(FamilyId f) {
  switch (f) {
    case FamilyId::kI: return "i";
    case FamilyId::kPoi: return "poi";
    case FamilyId::kPodi: return "podi";
    case FamilyId::kOdp: return "odp";
    case FamilyId::kDp: return "dp";
    case FamilyId::kPoiMinus: return "poi-minus";
    case FamilyId::kPoiPlus: return "poi-plus";
    case FamilyId::kOdpMinus: return "odp-minus";
    case FamilyId::kOdpPlus: return "odp-plus";
    case FamilyId::kC2: return "c2";
  }
  return "?";
}

std::optional<FamilyId> family_from_tag(std::string_view tag) {
  for (FamilyId f : kAllFamilies)
    if (family_tag(f) == tag) return f;
  return std::nullopt;
}

bool member(FamilyId f, const PartialPerm& s) {
  switch (f) {
    case FamilyId::kI: return true;
    case FamilyId::kPoi: return s.is_order_preserving();
    case FamilyId::kPodi: return s.is_monotone();
    case FamilyId::kOdp: return s.is_isometry() && s.is_order_preserving();
    case FamilyId::kDp: return s.is_isometry();
    case FamilyId::kPoiMinus: return s.is_order_preserving() && s.is_coextensive();
    case FamilyId::kPoiPlus: return s.is_order_preserving() && s.is_extensive();
    case FamilyId::kOdpMinus:
      return s.is_isometry() && s.is_order_preserving() && s.is_coextensive();
    case FamilyId::kOdpPlus:
      return s.is_isometry() && s.is_order_preserving() && s.is_extensive();
    case FamilyId::kC2:
      return s == PartialPerm::identity(s.chain_size()) ||
             s == PartialPerm::reversal(s.chain_size());
  }
  return false;
}

std::vector<PartialPerm> enumerate(FamilyId f, int n) {
  if (n < 1) throw InvalidParameter("chain size must be at least 1, got " + std::to_string(n));
  std::vector<PartialPerm> out;
  switch (f) {
    case FamilyId::kI:
      out = enumerate_all(n);
      break;
    case FamilyId::kPoi:
      out = enumerate_subset_pairs(n, [](const auto&, const auto&) { return true; });
      break;
    case FamilyId::kPoiMinus:
      out = enumerate_subset_pairs(n, [](const std::vector<int>& d, const std::vector<int>& m) {
        for (std::size_t k = 0; k < d.size(); ++k)
          if (m[k] > d[k]) return false;
        return true;
      });
      break;
    case FamilyId::kPoiPlus:
      out = enumerate_subset_pairs(n, [](const std::vector<int>& d, const std::vector<int>& m) {
        for (std::size_t k = 0; k < d.size(); ++k)
          if (m[k] < d[k]) return false;
        return true;
      });
      break;
    case FamilyId::kPodi:
      out = append_reversal_coset(
          enumerate_subset_pairs(n, [](const auto&, const auto&) { return true; }), n);
      break;
    case FamilyId::kOdp:
      out = enumerate_translations(n, -(n - 1), n - 1);
      break;
    case FamilyId::kOdpMinus:
      out = enumerate_translations(n, -(n - 1), 0);
      break;
    case FamilyId::kOdpPlus:
      out = enumerate_translations(n, 0, n - 1);
      break;
    case FamilyId::kDp:
      out = append_reversal_coset(enumerate_translations(n, -(n - 1), n - 1), n);
      break;
    case FamilyId::kC2:
      out = {PartialPerm::identity(n), PartialPerm::reversal(n)};
      break;
  }
  canonicalize(out);
  post_check_monoid(out, f, n);
  return out;
}

std::vector<PartialPerm> enumerate_by_filter(FamilyId f, int n) {
  if (n < 1) throw InvalidParameter("chain size must be at least 1, got " + std::to_string(n));
  std::vector<PartialPerm> out;
  for (const auto& s : enumerate_all(n))
    if (member(f, s)) out.push_back(s);
  canonicalize(out);
  return out;
}

}  // namespace sgf
