#include "sgf/pperm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "sgf/errors.hpp"

namespace sgf {

namespace {

void require_chain_size(int n) {
  if (n < 1) throw InvalidParameter("chain size must be at least 1, got " + std::to_string(n));
}

constexpr const char* kEmptySymbol = "∅";

}  // namespace

PartialPerm PartialPerm::identity(int n) {
  require_chain_size(n);
  Graph g;
  g.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) g.emplace_back(i, i);
  return PartialPerm(n, std::move(g));
}

PartialPerm PartialPerm::empty(int n) {
  require_chain_size(n);
  return PartialPerm(n, {});
}

PartialPerm PartialPerm::reversal(int n) {
  require_chain_size(n);
  Graph g;
  g.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) g.emplace_back(i, n + 1 - i);
  return PartialPerm(n, std::move(g));
}

PartialPerm PartialPerm::from_graph(int n, Graph graph) {
  require_chain_size(n);
  std::sort(graph.begin(), graph.end());
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  int prev = 0;
  for (const auto& [i, j] : graph) {
    if (i < 1 || i > n || j < 1 || j > n)
      throw InvalidParameter("graph point outside the chain {1.." + std::to_string(n) + "}");
    if (i == prev) throw InvalidParameter("graph maps point " + std::to_string(i) + " twice");
    if (hit[static_cast<std::size_t>(j)])
      throw InvalidParameter("graph repeats image point " + std::to_string(j));
    hit[static_cast<std::size_t>(j)] = true;
    prev = i;
  }
  return PartialPerm(n, std::move(graph));
}

PartialPerm PartialPerm::order_iso(std::vector<int> dom, std::vector<int> im, int n) {
  require_chain_size(n);
  if (dom.size() != im.size())
    throw SizeMismatch("order_iso needs equal-size point sets, got " +
                       std::to_string(dom.size()) + " and " + std::to_string(im.size()));
  std::sort(dom.begin(), dom.end());
  std::sort(im.begin(), im.end());
  Graph g;
  g.reserve(dom.size());
  for (std::size_t k = 0; k < dom.size(); ++k) g.emplace_back(dom[k], im[k]);
  return from_graph(n, std::move(g));
}

bool PartialPerm::is_identity() const {
  if (rank() != n_) return false;
  for (const auto& [i, j] : graph_)
    if (i != j) return false;
  return true;
}

std::optional<int> PartialPerm::apply(int i) const {
  if (i < 1 || i > n_)
    throw InvalidParameter("point " + std::to_string(i) + " outside the chain {1.." +
                           std::to_string(n_) + "}");
  auto it = std::lower_bound(graph_.begin(), graph_.end(), std::make_pair(i, 0));
  if (it != graph_.end() && it->first == i) return it->second;
  return std::nullopt;
}

std::vector<int> PartialPerm::dom() const {
  std::vector<int> d;
  d.reserve(graph_.size());
  for (const auto& [i, j] : graph_) d.push_back(i);
  return d;
}

std::vector<int> PartialPerm::im() const {
  std::vector<int> m;
  m.reserve(graph_.size());
  for (const auto& [i, j] : graph_) m.push_back(j);
  std::sort(m.begin(), m.end());
  return m;
}

PartialPerm PartialPerm::compose(const PartialPerm& t) const {
  if (n_ != t.n_)
    throw ChainSizeMismatch("cannot compose maps on chains of size " + std::to_string(n_) +
                            " and " + std::to_string(t.n_));
  Graph g;
  for (const auto& [i, j] : graph_) {
    auto it = std::lower_bound(t.graph_.begin(), t.graph_.end(), std::make_pair(j, 0));
    if (it != t.graph_.end() && it->first == j) g.emplace_back(i, it->second);
  }
  return PartialPerm(n_, std::move(g));
}

PartialPerm PartialPerm::inverse() const {
  Graph g;
  g.reserve(graph_.size());
  for (const auto& [i, j] : graph_) g.emplace_back(j, i);
  std::sort(g.begin(), g.end());
  return PartialPerm(n_, std::move(g));
}

bool PartialPerm::is_order_preserving() const {
  for (std::size_t k = 1; k < graph_.size(); ++k)
    if (graph_[k - 1].second > graph_[k].second) return false;
  return true;
}

bool PartialPerm::is_order_reversing() const {
  for (std::size_t k = 1; k < graph_.size(); ++k)
    if (graph_[k - 1].second < graph_[k].second) return false;
  return true;
}

bool PartialPerm::is_monotone() const { return is_order_preserving() || is_order_reversing(); }

bool PartialPerm::is_isometry() const {
  for (std::size_t a = 0; a < graph_.size(); ++a)
    for (std::size_t b = a + 1; b < graph_.size(); ++b)
      if (std::abs(graph_[a].second - graph_[b].second) !=
          std::abs(graph_[a].first - graph_[b].first))
        return false;
  return true;
}

bool PartialPerm::is_extensive() const {
  for (const auto& [i, j] : graph_)
    if (j < i) return false;
  return true;
}

bool PartialPerm::is_coextensive() const {
  for (const auto& [i, j] : graph_)
    if (j > i) return false;
  return true;
}

bool PartialPerm::is_partial_identity() const {
  for (const auto& [i, j] : graph_)
    if (i != j) return false;
  return true;
}

std::string PartialPerm::str() const {
  if (graph_.empty()) return kEmptySymbol;
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < graph_.size(); ++k) os << (k ? " " : "") << graph_[k].first;
  os << " / ";
  for (std::size_t k = 0; k < graph_.size(); ++k) os << (k ? " " : "") << graph_[k].second;
  os << ']';
  return os.str();
}

PartialPerm PartialPerm::parse(const std::string& text, int n) {
  require_chain_size(n);
  std::string body = text;
  auto strip = [](std::string v) {
    const auto b = v.find_first_not_of(" \t");
    const auto e = v.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
  };
  body = strip(body);
  if (body == kEmptySymbol) return empty(n);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw InvalidParameter("cannot parse partial permutation from \"" + text + "\"");
  body = body.substr(1, body.size() - 2);
  const auto slash = body.find('/');
  if (slash == std::string::npos)
    throw InvalidParameter("missing '/' in partial permutation \"" + text + "\"");

  auto read_row = [&](const std::string& row) {
    std::vector<int> out;
    std::istringstream is(row);
    int v = 0;
    while (is >> v) out.push_back(v);
    if (!is.eof())
      throw InvalidParameter("bad point in partial permutation \"" + text + "\"");
    return out;
  };
  const std::vector<int> doms = read_row(body.substr(0, slash));
  const std::vector<int> ims = read_row(body.substr(slash + 1));
  if (doms.size() != ims.size())
    throw InvalidParameter("rows of \"" + text + "\" have different lengths");
  Graph g;
  g.reserve(doms.size());
  for (std::size_t k = 0; k < doms.size(); ++k) g.emplace_back(doms[k], ims[k]);
  return from_graph(n, std::move(g));
}

std::strong_ordering PartialPerm::operator<=>(const PartialPerm& o) const {
  if (auto c = graph_.size() <=> o.graph_.size(); c != 0) return c;
  for (std::size_t k = 0; k < graph_.size(); ++k) {
    if (auto c = graph_[k].first <=> o.graph_[k].first; c != 0) return c;
    if (auto c = graph_[k].second <=> o.graph_[k].second; c != 0) return c;
  }
  return n_ <=> o.n_;
}

std::string render_element(const PartialPerm& p) { return p.str(); }

std::ostream& operator<<(std::ostream& os, const PartialPerm& p) { return os << p.str(); }

}  // namespace sgf
