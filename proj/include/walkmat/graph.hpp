#ifndef WALKMAT_GRAPH_HPP
#define WALKMAT_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "walkmat/error.hpp"
#include "walkmat/matrix.hpp"

namespace walkmat {

/// Simple undirected graph on vertices 0..n-1 (printed as v1..vn).
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : n_(n), bits_(n * n, 0), nbrs_(n) {}

  /// Builds a graph from one-based vertex pairs.
  static Graph from_edge_list(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
      if (u < 1 || v < 1 || u > n || v > n) {
        throw Error(Errc::IndexOutOfRange,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
      }
      if (u == v) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(u));
      if (g.has_edge(u - 1, v - 1)) {
        throw Error(Errc::DuplicateEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      }
      g.add_edge(u - 1, v - 1);
    }
    g.sort_neighbors();
    return g;
  }

  static Graph from_edge_list(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges) {
    const std::vector<std::pair<std::size_t, std::size_t>> v(edges);
    return from_edge_list(n, std::span<const std::pair<std::size_t, std::size_t>>(v));
  }

  /// Rejects anything that is not a symmetric 0/1 matrix with zero diagonal.
  static Graph from_adjacency(const ExactMatrix& a) {
    if (!a.is_square()) throw Error(Errc::DimensionMismatch, "adjacency matrix must be square");
    const std::size_t n = a.rows();
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!a(i, i).is_zero()) throw Error(Errc::LoopEdge, "nonzero diagonal at " + std::to_string(i + 1));
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& x = a(i, j);
        if (!(x.is_zero() || x == Rational(1))) {
          throw Error(Errc::MalformedInput, "adjacency entry " + x.to_string() + " is not 0/1");
        }
        if (x != a(j, i)) throw Error(Errc::MalformedInput, "adjacency matrix is not symmetric");
        if (j > i && !x.is_zero()) g.add_edge(i, j);
      }
    }
    g.sort_neighbors();
    return g;
  }

  std::size_t order() const noexcept { return n_; }

  bool has_edge(std::size_t u, std::size_t v) const { return bits_[u * n_ + v] != 0; }

  std::span<const std::size_t> neighbors(std::size_t v) const { return nbrs_[v]; }

  std::size_t degree(std::size_t v) const { return nbrs_[v].size(); }

  std::vector<std::size_t> degree_sequence() const {
    std::vector<std::size_t> d(n_);
    for (std::size_t v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
  }

  std::size_t edge_count() const {
    std::size_t sum = 0;
    for (std::size_t v = 0; v < n_; ++v) sum += degree(v);
    return sum / 2;
  }

  /// One-based edge list with u < v, lexicographically ordered.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v : nbrs_[u])
        if (u < v) out.emplace_back(u + 1, v + 1);
    return out;
  }

  ExactMatrix adjacency() const {
    return ExactMatrix(n_, n_, [&](std::size_t i, std::size_t j) { return Rational(has_edge(i, j) ? 1 : 0); });
  }

  /// The graph G^g in which vertex i of this graph becomes vertex perm[i].
  Graph relabel(std::span<const std::size_t> perm) const {
    if (perm.size() != n_) throw Error(Errc::DimensionMismatch, "permutation size");
    Graph g(n_);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v : nbrs_[u])
        if (u < v) g.add_edge(perm[u], perm[v]);
    g.sort_neighbors();
    return g;
  }

  Graph complement() const {
    Graph g(n_);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (!has_edge(u, v)) g.add_edge(u, v);
    g.sort_neighbors();
    return g;
  }

  static std::string label(std::size_t v) { return "v" + std::to_string(v + 1); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  void add_edge(std::size_t u, std::size_t v) {
    bits_[u * n_ + v] = bits_[v * n_ + u] = 1;
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
  }

  void sort_neighbors() {
    for (auto& l : nbrs_) std::sort(l.begin(), l.end());
  }

  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
  std::vector<std::vector<std::size_t>> nbrs_;
};

/// Subset of the vertices of an order-n graph, kept sorted (0-based).
class VertexSet {
 public:
  VertexSet() = default;

  VertexSet(std::size_t n, std::vector<std::size_t> members) : n_(n), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (std::size_t v : members_)
      if (v >= n_) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(v + 1) + " > n");
  }

  static VertexSet all(std::size_t n) {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = i;
    return {n, std::move(m)};
  }

  /// From one-based indices.
  static VertexSet from_one_based(std::size_t n, const std::vector<std::size_t>& idx) {
    std::vector<std::size_t> m;
    for (std::size_t i : idx) {
      if (i < 1 || i > n) throw Error(Errc::IndexOutOfRange, "vertex " + std::to_string(i) + " out of 1.." + std::to_string(n));
      m.push_back(i - 1);
    }
    return {n, std::move(m)};
  }

  /// From a 0/1 characteristic vector.
  static VertexSet from_characteristic(const Vector& e) {
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == Rational(1)) {
        m.push_back(i);
      } else if (!e[i].is_zero()) {
        throw Error(Errc::InvalidWalkMatrix, "characteristic vector entry " + e[i].to_string());
      }
    }
    return {e.size(), std::move(m)};
  }

  std::size_t universe() const noexcept { return n_; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool is_all() const noexcept { return members_.size() == n_; }

  bool contains(std::size_t v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  Vector characteristic() const {
    Vector e(n_);
    for (std::size_t v : members_) e[v] = 1;
    return e;
  }

  std::vector<std::size_t> one_based() const {
    std::vector<std::size_t> out;
    for (std::size_t v : members_) out.push_back(v + 1);
    return out;
  }

  bool disjoint_with(const VertexSet& o) const {
    for (std::size_t v : members_)
      if (o.contains(v)) return false;
    return true;
  }

  VertexSet united(const VertexSet& o) const {
    std::vector<std::size_t> m = members_;
    m.insert(m.end(), o.members_.begin(), o.members_.end());
    return {n_, std::move(m)};
  }

  /// Image of the set under a vertex permutation.
  VertexSet mapped(std::span<const std::size_t> perm) const {
    std::vector<std::size_t> m;
    for (std::size_t v : members_) m.push_back(perm[v]);
    return {n_, std::move(m)};
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> members_;
};

inline std::vector<std::size_t> degree_sequence(const Graph& g) { return g.degree_sequence(); }
inline std::size_t edge_count(const Graph& g) { return g.edge_count(); }

}  // namespace walkmat

#endif  // WALKMAT_GRAPH_HPP
