#ifndef SGF_PPERM_HPP
#define SGF_PPERM_HPP

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sgf {

// An injective partial self-map of the chain {1 < 2 < ... < n}, i.e. an
// element of the symmetric inverse monoid on n points. Values are immutable
// after construction and the graph is kept sorted by domain point, so all
// operations are pure and safe to evaluate concurrently.
//
// Composition applies the left factor first: x(st) = (xs)t.
class PartialPerm {
 public:
  using Graph = std::vector<std::pair<int, int>>;

  // Total map i -> i. Throws InvalidParameter when n < 1.
  static PartialPerm identity(int n);
  // The empty transformation on the chain of size n.
  static PartialPerm empty(int n);
  // Total map i -> n + 1 - i, the order-reversing permutation h.
  static PartialPerm reversal(int n);
  // Builds from an explicit graph; validates range, functionality and
  // injectivity (InvalidParameter otherwise). The graph need not be sorted.
  static PartialPerm from_graph(int n, Graph graph);
  // Unique order-preserving bijection dom -> im, matching by rank.
  // Throws SizeMismatch when |dom| != |im|.
  static PartialPerm order_iso(std::vector<int> dom, std::vector<int> im, int n);
  // Inverse of str(): accepts "[1 3 / 2 1]" and the empty-map symbol.
  static PartialPerm parse(const std::string& text, int n);

  int chain_size() const { return n_; }
  const Graph& graph() const { return graph_; }
  int rank() const { return static_cast<int>(graph_.size()); }
  bool is_empty_map() const { return graph_.empty(); }
  bool is_identity() const;

  // is when i is in the domain, nullopt otherwise (partiality is a value,
  // not an error). Throws InvalidParameter when i is outside {1..n}.
  std::optional<int> apply(int i) const;

  std::vector<int> dom() const;  // sorted ascending
  std::vector<int> im() const;   // sorted ascending

  // this applied first, then t. Throws ChainSizeMismatch when the chain
  // sizes differ.
  PartialPerm compose(const PartialPerm& t) const;
  PartialPerm inverse() const;

  bool is_order_preserving() const;
  bool is_order_reversing() const;
  bool is_monotone() const;
  bool is_isometry() const;           // |is - js| = |i - j| on the domain
  bool is_extensive() const;          // i <= is on the domain
  bool is_coextensive() const;        // is <= i on the domain
  bool is_partial_identity() const;

  // Two-row rendering "[1 3 / 2 1]" (domain row, then images); the empty
  // map renders as the empty-set symbol.
  std::string str() const;

  bool operator==(const PartialPerm&) const = default;

  // Canonical total order: rank first, then the flattened graph
  // lexicographically. Every deterministic element ordering in the engine
  // derives from this.
  std::strong_ordering operator<=>(const PartialPerm& o) const;

 private:
  PartialPerm(int n, Graph graph) : n_(n), graph_(std::move(graph)) {}

  int n_;
  Graph graph_;
};

inline PartialPerm compose(const PartialPerm& s, const PartialPerm& t) {
  return s.compose(t);
}

std::string render_element(const PartialPerm& p);
std::ostream& operator<<(std::ostream& os, const PartialPerm& p);

}  // namespace sgf

#endif  // SGF_PPERM_HPP
