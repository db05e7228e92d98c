#ifndef WALKMAT_WALK_HPP
#define WALKMAT_WALK_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "walkmat/error.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/matrix.hpp"

namespace walkmat {

/// The n x n matrix [e, Ae, ..., A^{n-1}e] for the characteristic vector e of a vertex set.
class WalkMatrix {
 public:
  WalkMatrix() = default;

  /// Validates a bare matrix: square, nonnegative integer entries, column 0 a nonzero 0/1 vector.
  static WalkMatrix from_matrix(ExactMatrix w) {
    if (!w.is_square() || w.rows() == 0) throw Error(Errc::InvalidWalkMatrix, "walk matrix must be square and non-empty");
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j)
        if (!w(i, j).is_integer() || w(i, j).sign() < 0)
          throw Error(Errc::InvalidWalkMatrix, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                   ") is not a nonnegative integer");
    VertexSet s = VertexSet::from_characteristic(w.col(0));
    if (s.empty()) throw Error(Errc::EmptySet, "column 0 of the walk matrix is zero");
    return WalkMatrix(std::move(w), std::move(s));
  }

  std::size_t order() const noexcept { return w_.rows(); }
  const ExactMatrix& matrix() const noexcept { return w_; }
  const VertexSet& set() const noexcept { return set_; }

  /// Columns lo..hi (inclusive, hi < n).
  ExactMatrix columns(std::size_t lo, std::size_t hi) const { return w_.columns(lo, hi); }

  friend bool operator==(const WalkMatrix& a, const WalkMatrix& b) { return a.w_ == b.w_; }

 private:
  WalkMatrix(ExactMatrix w, VertexSet s) : w_(std::move(w)), set_(std::move(s)) {}
  friend WalkMatrix walk_matrix(const Graph& g, const VertexSet& s);

  ExactMatrix w_;
  VertexSet set_;
};

/// Columns A^i e .. A^j e.
struct WalkSlice {
  std::size_t lo = 0;
  std::size_t hi = 0;
  ExactMatrix m;
};

namespace detail {

inline void require_nonempty(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw Error(Errc::EmptySet, "vertex set is empty");
  if (s.universe() != g.order()) throw Error(Errc::OrderMismatch, "vertex set universe differs from graph order");
}

/// Columns A^0 e .. A^last e by repeated neighbor summation.
inline std::vector<std::vector<Integer>> walk_columns(const Graph& g, const VertexSet& s, std::size_t last) {
  const std::size_t n = g.order();
  std::vector<std::vector<Integer>> cols;
  cols.reserve(last + 1);
  std::vector<Integer> cur(n, 0);
  for (std::size_t v : s.members()) cur[v] = 1;
  cols.push_back(cur);
  for (std::size_t k = 1; k <= last; ++k) {
    std::vector<Integer> next(n, 0);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t u : g.neighbors(v)) next[v] += cols.back()[u];
    cols.push_back(std::move(next));
  }
  return cols;
}

inline ExactMatrix columns_to_matrix(const std::vector<std::vector<Integer>>& cols, std::size_t lo, std::size_t hi,
                                     std::size_t n) {
  return ExactMatrix(n, hi - lo + 1, [&](std::size_t i, std::size_t j) { return Rational(cols[lo + j][i]); });
}

}  // namespace detail

inline WalkMatrix walk_matrix(const Graph& g, const VertexSet& s) {
  detail::require_nonempty(g, s);
  const std::size_t n = g.order();
  auto cols = detail::walk_columns(g, s, n - 1);
  return WalkMatrix(detail::columns_to_matrix(cols, 0, n - 1, n), s);
}

/// W_[i,j]; j may exceed n-1, the recurrence simply continues.
inline WalkSlice slice(const Graph& g, const VertexSet& s, std::size_t i, std::size_t j) {
  detail::require_nonempty(g, s);
  if (i > j) throw Error(Errc::IndexOutOfRange, "slice requires i <= j");
  auto cols = detail::walk_columns(g, s, j);
  return {i, j, detail::columns_to_matrix(cols, i, j, g.order())};
}

/// A * lower == upper, where upper should be the slice shifted by one.
inline bool shift_identity_holds(const Graph& g, const WalkSlice& lower, const WalkSlice& upper) {
  return g.adjacency() * lower.m == upper.m;
}

inline bool shift_identity_check(const Graph& g, const VertexSet& s, std::size_t i, std::size_t j) {
  return shift_identity_holds(g, slice(g, s, i, j), slice(g, s, i + 1, j + 1));
}

inline bool additivity_check(const Graph& g, const VertexSet& s, const VertexSet& t) {
  detail::require_nonempty(g, s);
  detail::require_nonempty(g, t);
  if (!s.disjoint_with(t)) throw Error(Errc::NotDisjoint, "vertex sets overlap");
  return walk_matrix(g, s).matrix() + walk_matrix(g, t).matrix() == walk_matrix(g, s.united(t)).matrix();
}

/// (W_[i,j])^T W_[i,j]; entry (p,q) counts walks of length 2i+p+q with both ends in S.
inline ExactMatrix hankel_matrix(const Graph& g, const VertexSet& s, std::size_t i, std::size_t j) {
  if (i >= j) throw Error(Errc::IndexOutOfRange, "hankel_matrix requires i < j");
  const WalkSlice sl = slice(g, s, i, j);
  return sl.m.transpose() * sl.m;
}

/// Walk numbers n_0 .. n_{2n-2} read off W^T W.
inline std::vector<Integer> walk_numbers(const WalkMatrix& w) {
  const ExactMatrix& m = w.matrix();
  const std::size_t n = m.rows();
  std::vector<Integer> out(2 * n - 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::size_t p = k < n ? 0 : k - (n - 1);
    const std::size_t q = k - p;
    Integer acc = 0;
    for (std::size_t v = 0; v < n; ++v) acc += m(v, p).num() * m(v, q).num();
    out[k] = acc;
  }
  return out;
}

}  // namespace walkmat

#endif  // WALKMAT_WALK_HPP
