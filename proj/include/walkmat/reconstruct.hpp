#ifndef WALKMAT_RECONSTRUCT_HPP
#define WALKMAT_RECONSTRUCT_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "walkmat/error.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/linalg.hpp"
#include "walkmat/matrix.hpp"
#include "walkmat/spectral.hpp"
#include "walkmat/walk.hpp"

namespace walkmat {

enum class UndeterminedReason { RankTooLow, NoValidCandidate, MissingEdgeCount };

constexpr std::string_view to_string(UndeterminedReason r) noexcept {
  switch (r) {
    case UndeterminedReason::RankTooLow: return "RankTooLow";
    case UndeterminedReason::NoValidCandidate: return "NoValidCandidate";
    case UndeterminedReason::MissingEdgeCount: return "MissingEdgeCount";
  }
  return "Unknown";
}

struct ReconstructionResult {
  enum class Status { Unique, Pair, Undetermined };

  Status status = Status::Undetermined;
  std::vector<Graph> graphs;  // one for Unique, two distinct for Pair
  std::optional<UndeterminedReason> reason;
  std::string detail;

  static ReconstructionResult unique(Graph g) { return {Status::Unique, {std::move(g)}, std::nullopt, {}}; }
  static ReconstructionResult pair(Graph a, Graph b) {
    return {Status::Pair, {std::move(a), std::move(b)}, std::nullopt, {}};
  }
  static ReconstructionResult undetermined(UndeterminedReason why, std::string detail = {}) {
    return {Status::Undetermined, {}, why, std::move(detail)};
  }
};

struct ReconstructionInput {
  WalkMatrix w;
  std::optional<std::size_t> edge_count_hint;
};

/// True iff a is a symmetric 0/1 matrix with zero diagonal whose graph regenerates w exactly.
inline bool verify_candidate(const ExactMatrix& a, const WalkMatrix& w) {
  if (a.rows() != w.order() || !a.is_square()) return false;
  try {
    const Graph g = Graph::from_adjacency(a);
    return walk_matrix(g, w.set()) == w;
  } catch (const Error&) {
    return false;
  }
}

namespace detail {

inline Graph accept_candidate(const ExactMatrix& a, const WalkMatrix& w, const char* path) {
  if (!verify_candidate(a, w)) {
    throw Error(Errc::CandidateNotGraph, std::string(path) + ": recovered matrix does not regenerate W");
  }
  return Graph::from_adjacency(a);
}

inline std::size_t require_rank(const WalkMatrix& w, std::size_t expected, const char* path) {
  const std::size_t r = rank(w.matrix());
  if (r != expected) {
    throw Error(Errc::InvalidWalkMatrix, std::string(path) + ": rank " + std::to_string(r) + ", expected " +
                                             std::to_string(expected));
  }
  return r;
}

}  // namespace detail

/// rank n: A W = W_[1,n], with A^n e from the characteristic recurrence.
inline Graph rank_n(const WalkMatrix& w) {
  const std::size_t n = w.order();
  detail::require_rank(w, n, "rank_n");
  const IntPolynomial chi = char_poly_from_hankel(w);
  const ExactMatrix ext = extend_columns(w, chi, n);
  const ExactMatrix a = ext.columns(1, n) * inverse(w.matrix());
  return detail::accept_candidate(a, w, "rank_n");
}

/// rank n-1: A = W_[1,n-1] W^dagger + lambda_n (I - W_[0,n-2] W^dagger), where the single
/// non-main eigenvalue lambda_n = -(sum of main eigenvalues) is the x^{n-2} coefficient of main_poly.
inline Graph rank_n1(const WalkMatrix& w) {
  const std::size_t n = w.order();
  const std::size_t r = detail::require_rank(w, n - 1, "rank_n1");
  const IntPolynomial main = main_poly_from_dependence(w.matrix(), r);
  const Rational lambda(main.coeff(r - 1));
  const ExactMatrix pinv = walk_pseudo_inverse(w, r);
  const ExactMatrix projector = ExactMatrix::identity(n) - w.columns(0, r - 1) * pinv;
  const ExactMatrix a = w.columns(1, r) * pinv + lambda * projector;
  return detail::accept_candidate(a, w, "rank_n1");
}

struct RankN2Options {
  double tolerance = 1e-6;
};

namespace detail {

using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using LongVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

inline LongMatrix to_long(const ExactMatrix& m) {
  LongMatrix out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_long_double();
  return out;
}

/// Orthonormal (Gram-Schmidt, long double) version of an exact 2-dimensional kernel basis.
inline std::pair<LongVector, LongVector> orthonormal_pair(const std::vector<Vector>& basis) {
  const auto n = static_cast<Eigen::Index>(basis.front().size());
  LongVector u(n);
  LongVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    u(i) = basis[0][static_cast<std::size_t>(i)].to_long_double();
    v(i) = basis[1][static_cast<std::size_t>(i)].to_long_double();
  }
  u.normalize();
  v -= u.dot(v) * u;
  v.normalize();
  return {u, v};
}

/// Unit vectors f in span{u, v} with f_k^2 == q_k for every coordinate (within tol), one per
/// +-f class.
inline std::vector<LongVector> kernel_vectors_matching(const LongVector& u, const LongVector& v, const LongVector& q,
                                                       long double tol) {
  const Eigen::Index n = u.size();
  std::vector<LongVector> out;
  auto consider = [&](long double alpha, long double beta) {
    const LongVector f = alpha * u + beta * v;
    if (std::fabs(alpha * alpha + beta * beta - 1) > tol) return;
    for (Eigen::Index k = 0; k < n; ++k)
      if (std::fabs(f(k) * f(k) - q(k)) > tol) return;
    for (const auto& g : out)
      if ((g - f).cwiseAbs().maxCoeff() <= tol || (g + f).cwiseAbs().maxCoeff() <= tol) return;
    out.push_back(f);
  };

  long double best = 0;
  Eigen::Index bi = -1;
  Eigen::Index bj = -1;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (q(i) <= tol) continue;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (q(j) <= tol) continue;
      const long double det = std::fabs(u(i) * v(j) - u(j) * v(i));
      if (det > best) {
        best = det;
        bi = i;
        bj = j;
      }
    }
  }
  if (bi >= 0 && best > tol) {
    const long double det = u(bi) * v(bj) - u(bj) * v(bi);
    const long double fi = std::sqrt(q(bi));
    for (long double sign : {1.0L, -1.0L}) {
      const long double fj = sign * std::sqrt(q(bj));
      // [u_i v_i; u_j v_j] (alpha, beta) = (f_i, f_j)
      const long double alpha = (fi * v(bj) - fj * v(bi)) / det;
      const long double beta = (u(bi) * fj - u(bj) * fi) / det;
      consider(alpha, beta);
    }
    return out;
  }
  // Support rows are collinear (or a single coordinate): f must vanish on some coordinate k
  // whose kernel row (u_k, v_k) is nonzero, which fixes f up to sign.
  long double row_norm = 0;
  Eigen::Index zk = -1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (q(k) > tol) continue;
    const long double norm = std::hypot(u(k), v(k));
    if (norm > row_norm) {
      row_norm = norm;
      zk = k;
    }
  }
  if (zk >= 0 && row_norm > tol) consider(-v(zk) / row_norm, u(zk) / row_norm);
  return out;
}

}  // namespace detail

/// rank n-2: the two non-main eigenvalues come from main_poly and the edge count m; when they
/// differ, the eigenvector f_n is pinned down (up to at most two choices) by the zero diagonal of A.
inline ReconstructionResult rank_n2(const WalkMatrix& w, std::optional<std::size_t> m,
                                    const RankN2Options& opt = {}) {
  using detail::LongMatrix;
  using detail::LongVector;
  const std::size_t n = w.order();
  const std::size_t r = detail::require_rank(w, n - 2, "rank_n2");
  if (!m) {
    if (!w.set().is_all()) throw Error(Errc::MissingEdgeCount, "S != V and no edge count supplied");
    Integer deg_sum = 0;
    for (std::size_t v = 0; v < n; ++v) deg_sum += w.matrix()(v, 1).num();
    m = static_cast<std::size_t>(Integer(deg_sum / 2).get_ui());
  }
  const IntPolynomial main = main_poly_from_dependence(w.matrix(), r);
  const Integer a1 = main.coeff(r - 1);
  const Integer a2 = r >= 2 ? main.coeff(r - 2) : Integer(0);
  const Integer disc = 4 * (a2 + Integer(static_cast<unsigned long>(*m))) - 3 * a1 * a1;
  if (disc < 0) throw Error(Errc::NegativeDiscriminant, "d = " + disc.get_str());

  const ExactMatrix pinv = walk_pseudo_inverse(w, r);
  const ExactMatrix visible = w.columns(1, r) * pinv;
  const ExactMatrix projector = ExactMatrix::identity(n) - w.columns(0, r - 1) * pinv;

  if (disc == 0) {
    const ExactMatrix a = visible + Rational(a1, Integer(2)) * projector;
    if (!verify_candidate(a, w)) return ReconstructionResult::undetermined(UndeterminedReason::NoValidCandidate, "d = 0");
    return ReconstructionResult::unique(Graph::from_adjacency(a));
  }

  const long double root = std::sqrt(to_long_double(disc));
  const long double lam_lo = (to_long_double(a1) - root) / 2;  // lambda_{n-1}
  const long double lam_hi = (to_long_double(a1) + root) / 2;  // lambda_n
  const long double gap = lam_hi - lam_lo;
  const LongMatrix base = detail::to_long(visible) + lam_lo * detail::to_long(projector);
  const auto ni = static_cast<Eigen::Index>(n);
  LongVector q(ni);
  for (Eigen::Index i = 0; i < ni; ++i) q(i) = -base(i, i) / gap;

  const std::vector<Vector> kernel = kernel_basis(w.matrix().transpose());
  if (kernel.size() != 2) throw Error(Errc::InvalidWalkMatrix, "kernel of W^T is not 2-dimensional");
  const auto [u, v] = detail::orthonormal_pair(kernel);
  const auto tol = static_cast<long double>(opt.tolerance);
  if (q.maxCoeff() <= tol) {
    return ReconstructionResult::undetermined(UndeterminedReason::NoValidCandidate, "all diagonal targets vanish");
  }

  std::vector<Graph> found;
  for (const LongVector& f : detail::kernel_vectors_matching(u, v, q, tol)) {
    const LongMatrix cand = base + gap * (f * f.transpose());
    bool ok = true;
    std::vector<Rational> entries;
    entries.reserve(n * n);
    for (Eigen::Index i = 0; i < ni && ok; ++i) {
      for (Eigen::Index j = 0; j < ni; ++j) {
        const long double x = cand(i, j);
        const long double rounded = std::nearbyint(x);
        if (std::fabs(x - rounded) > tol || (rounded != 0 && rounded != 1)) {
          ok = false;
          break;
        }
        entries.emplace_back(static_cast<int>(rounded));
      }
    }
    if (!ok) continue;
    const ExactMatrix a(n, n, std::move(entries));
    if (!verify_candidate(a, w)) continue;
    Graph g = Graph::from_adjacency(a);
    if (std::find(found.begin(), found.end(), g) == found.end()) found.push_back(std::move(g));
  }
  if (found.empty()) return ReconstructionResult::undetermined(UndeterminedReason::NoValidCandidate, "no candidate verified");
  if (found.size() == 1) return ReconstructionResult::unique(std::move(found[0]));
  if (found.size() == 2) return ReconstructionResult::pair(std::move(found[0]), std::move(found[1]));
  throw Error(Errc::TheoremViolation, "more than two adjacency matrices share one rank n-2 walk matrix");
}

inline ReconstructionResult reconstruct(const ReconstructionInput& input) {
  const WalkMatrix& w = input.w;
  const std::size_t n = w.order();
  const std::size_t r = rank(w.matrix());
  try {
    if (r == n) return ReconstructionResult::unique(rank_n(w));
    if (r + 1 == n) return ReconstructionResult::unique(rank_n1(w));
    if (r + 2 == n) return rank_n2(w, input.edge_count_hint);
  } catch (const Error& e) {
    if (e.code() == Errc::MissingEdgeCount) {
      return ReconstructionResult::undetermined(UndeterminedReason::MissingEdgeCount, e.what());
    }
    if (e.code() == Errc::TheoremViolation) throw;
    return ReconstructionResult::undetermined(UndeterminedReason::NoValidCandidate, e.what());
  }
  return ReconstructionResult::undetermined(UndeterminedReason::RankTooLow,
                                            "rank " + std::to_string(r) + " < n-2 = " + std::to_string(n - 2));
}

}  // namespace walkmat

#endif  // WALKMAT_RECONSTRUCT_HPP
