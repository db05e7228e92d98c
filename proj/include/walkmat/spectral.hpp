#ifndef WALKMAT_SPECTRAL_HPP
#define WALKMAT_SPECTRAL_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "walkmat/error.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/linalg.hpp"
#include "walkmat/matrix.hpp"
#include "walkmat/polynomial.hpp"
#include "walkmat/walk.hpp"

namespace walkmat {

struct SpectralSummary {
  std::size_t rank = 0;
  IntPolynomial main_poly;                 // monic, degree == rank
  bool full_rank = false;
  std::optional<IntPolynomial> char_poly;  // present exactly when full_rank
};

/// Characteristic polynomial of A recovered from a full-rank walk matrix alone: solve
/// (W_[0,n-2]^T W_[0,n-2]) c = -(n_n, ..., n_{2n-2}) with c_{n-1} = 0 (A has zero trace).
inline IntPolynomial char_poly_from_hankel(const WalkMatrix& w) {
  const std::size_t n = w.order();
  if (n == 1) return IntPolynomial::monomial(1);
  const std::vector<Integer> nums = walk_numbers(w);
  const ExactMatrix head = w.columns(0, n - 2);
  Vector rhs(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) rhs[k] = -Rational(nums[n + k]);
  const SolveResult sol = solve(head.transpose() * head, rhs);
  if (!sol.ok()) throw Error(Errc::InvalidWalkMatrix, "Gram matrix of W_[0,n-2] is singular");
  Vector lower = sol.x;
  lower.emplace_back(0);  // c_{n-1}
  return IntPolynomial::monic_from(lower);
}

/// Monic annihilator of e read from the first dependence among the columns of cols:
/// A^r e = f_0 e + ... + f_{r-1} A^{r-1} e  gives  x^r - f_{r-1} x^{r-1} - ... - f_0.
inline IntPolynomial main_poly_from_dependence(const ExactMatrix& cols, std::size_t r) {
  const SolveResult sol = solve(cols.columns(0, r - 1), cols.col(r));
  if (!sol.ok()) throw Error(Errc::InvalidWalkMatrix, "leading columns are not a Krylov basis");
  Vector lower(r);
  for (std::size_t k = 0; k < r; ++k) lower[k] = -sol.x[k];
  return IntPolynomial::monic_from(lower);
}

inline SpectralSummary spectral_summary(const WalkMatrix& w) {
  const std::size_t n = w.order();
  SpectralSummary out;
  out.rank = rank(w.matrix());
  out.full_rank = out.rank == n;
  if (out.full_rank) {
    out.main_poly = char_poly_from_hankel(w);
    out.char_poly = out.main_poly;
  } else {
    out.main_poly = main_poly_from_dependence(w.matrix(), out.rank);
  }
  return out;
}

inline SpectralSummary spectral_summary(const Graph& g, const VertexSet& s) {
  return spectral_summary(walk_matrix(g, s));
}

/// Columns A^0 e .. A^last e, continuing past the stored columns with the recurrence of the
/// monic annihilator p.
inline ExactMatrix extend_columns(const WalkMatrix& w, const IntPolynomial& p, std::size_t last) {
  const std::size_t n = w.order();
  const auto d = static_cast<std::size_t>(p.degree());
  std::vector<Vector> cols;
  for (std::size_t k = 0; k <= last; ++k) {
    if (k < n) {
      cols.push_back(w.matrix().col(k));
      continue;
    }
    Vector next(n);
    for (std::size_t t = 0; t < d; ++t) {
      const Rational c(p.coeff(t));
      if (c.is_zero()) continue;
      const Vector& src = cols[k - d + t];
      for (std::size_t i = 0; i < n; ++i) next[i] -= c * src[i];
    }
    cols.push_back(std::move(next));
  }
  return ExactMatrix::from_columns(cols);
}

/// W^dagger = (W_r^T W_r)^{-1} W_r^T with W_r = W_[0,r-1]; an r x n left inverse of W_r.
inline ExactMatrix walk_pseudo_inverse(const WalkMatrix& w, std::size_t r) {
  const ExactMatrix wr = w.columns(0, r - 1);
  const ExactMatrix wt = wr.transpose();
  return inverse(wt * wr) * wt;
}

/// A_W = W_[1,r] W^dagger.
inline ExactMatrix restriction(const WalkMatrix& w, const SpectralSummary& summary) {
  const std::size_t r = summary.rank;
  const ExactMatrix ext = extend_columns(w, summary.main_poly, r);
  return ext.columns(1, r) * walk_pseudo_inverse(w, r);
}

inline ExactMatrix restriction(const WalkMatrix& w) { return restriction(w, spectral_summary(w)); }

inline ExactMatrix restriction(const Graph& g, const VertexSet& s) { return restriction(walk_matrix(g, s)); }

/// I - W_[0,r-1] W^dagger: the orthogonal projector onto ker(W^T).
inline ExactMatrix kernel_projector(const WalkMatrix& w, std::size_t r) {
  const std::size_t n = w.order();
  if (r == n) return ExactMatrix(n, n);
  return ExactMatrix::identity(n) - w.columns(0, r - 1) * walk_pseudo_inverse(w, r);
}

inline ExactMatrix kernel_projector(const WalkMatrix& w) { return kernel_projector(w, rank(w.matrix())); }

inline ExactMatrix kernel_projector(const Graph& g, const VertexSet& s) { return kernel_projector(walk_matrix(g, s)); }

// ---------------------------------------------------------------------------------------------
// Numeric realization W = E M.

struct RealizationOptions {
  double root_tol = 1e-10;   // relative residual for Newton-polished roots
  double check_tol = 1e-8;   // realization checks
};

struct NumericRealization {
  std::vector<double> mu;    // ascending
  FloatMatrix eig_matrix;    // r x n, rows (1, mu_i, mu_i^2, ...)
  FloatMatrix vec_matrix;    // n x r, columns are the main eigenvectors
  double tolerance = 0;
  double reconstruction_error = 0;  // max|E M - W| / max|W|
  double sum_error = 0;             // max|sum_i E(:,i) - e|
  double vandermonde_det_squared = 0;
};

namespace detail {

using LongMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

/// Real roots of a polynomial with simple real roots, ascending: companion eigenvalues
/// refined by Newton steps in long double.
inline std::vector<long double> real_roots(const IntPolynomial& p, double root_tol) {
  const int d = p.degree();
  std::vector<long double> roots;
  if (d <= 0) return roots;
  if (d == 1) {
    roots.push_back(-to_long_double(p.coeff(0)));
    return roots;
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -static_cast<double>(to_long_double(p.coeff(static_cast<std::size_t>(i))));
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  for (int i = 0; i < d; ++i) roots.push_back(es.eigenvalues()(i).real());

  auto magnitude = [&](long double x) {
    long double acc = 0;
    for (std::size_t k = p.coefficients().size(); k-- > 0;) acc = acc * std::fabs(x) + std::fabs(to_long_double(p.coeff(k)));
    return acc;
  };
  for (auto& x : roots) {
    for (int it = 0; it < 100; ++it) {
      const long double fx = p.evaluate(x);
      const long double dfx = p.evaluate_derivative(x);
      if (dfx == 0) break;
      const long double step = fx / dfx;
      x -= step;
      if (std::fabs(step) <= 1e-18L * std::max(1.0L, std::fabs(x))) break;
    }
    if (std::fabs(p.evaluate(x)) > root_tol * magnitude(x)) {
      throw Error(Errc::RootsNotSeparated, "Newton refinement did not converge");
    }
  }
  std::sort(roots.begin(), roots.end());
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (roots[i] - roots[i - 1] <= root_tol * std::max(1.0L, std::fabs(roots[i]))) {
      throw Error(Errc::RootsNotSeparated, "two main eigenvalues coincide within tolerance");
    }
  }
  return roots;
}

}  // namespace detail

inline NumericRealization main_eigen_realize(const WalkMatrix& w, const SpectralSummary& summary,
                                             const RealizationOptions& opt = {}) {
  using detail::LongMatrix;
  const std::size_t n = w.order();
  const std::size_t r = summary.rank;
  const std::vector<long double> mu = detail::real_roots(summary.main_poly, opt.root_tol);
  const auto ri = static_cast<Eigen::Index>(r);
  const auto ni = static_cast<Eigen::Index>(n);

  long double scale = 1;
  for (long double m : mu) scale = std::max(scale, std::fabs(m));

  // Column k of both sides scaled by scale^{-k} before solving E M_r = W_r.
  LongMatrix m_scaled(ri, ri);
  LongMatrix w_scaled(ni, ri);
  for (Eigen::Index k = 0; k < ri; ++k) {
    const long double s = std::pow(scale, -static_cast<long double>(k));
    for (Eigen::Index i = 0; i < ri; ++i) m_scaled(i, k) = std::pow(mu[static_cast<std::size_t>(i)], static_cast<long double>(k)) * s;
    for (Eigen::Index v = 0; v < ni; ++v) w_scaled(v, k) = w.matrix()(static_cast<std::size_t>(v), static_cast<std::size_t>(k)).to_long_double() * s;
  }
  const LongMatrix et = m_scaled.transpose().fullPivLu().solve(w_scaled.transpose());
  const LongMatrix e = et.transpose();

  LongMatrix m_full(ri, ni);
  for (Eigen::Index i = 0; i < ri; ++i)
    for (Eigen::Index k = 0; k < ni; ++k) m_full(i, k) = std::pow(mu[static_cast<std::size_t>(i)], static_cast<long double>(k));

  NumericRealization out;
  out.tolerance = opt.check_tol;
  for (long double m : mu) out.mu.push_back(static_cast<double>(m));
  out.eig_matrix = m_full.cast<double>();
  out.vec_matrix = e.cast<double>();

  const LongMatrix product = e * m_full;
  long double wmax = 0;
  long double err = 0;
  for (Eigen::Index v = 0; v < ni; ++v) {
    for (Eigen::Index k = 0; k < ni; ++k) {
      const long double x = w.matrix()(static_cast<std::size_t>(v), static_cast<std::size_t>(k)).to_long_double();
      wmax = std::max(wmax, std::fabs(x));
      err = std::max(err, std::fabs(product(v, k) - x));
    }
  }
  out.reconstruction_error = static_cast<double>(err / wmax);
  long double sum_err = 0;
  for (Eigen::Index v = 0; v < ni; ++v) {
    const long double ev = w.matrix()(static_cast<std::size_t>(v), 0).to_long_double();
    sum_err = std::max(sum_err, std::fabs(e.row(v).sum() - ev));
  }
  out.sum_error = static_cast<double>(sum_err);
  long double det2 = 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) det2 *= (mu[j] - mu[i]) * (mu[j] - mu[i]);
  out.vandermonde_det_squared = static_cast<double>(det2);
  return out;
}

inline NumericRealization main_eigen_realize(const Graph& g, const VertexSet& s, const RealizationOptions& opt = {}) {
  const WalkMatrix w = walk_matrix(g, s);
  return main_eigen_realize(w, spectral_summary(w), opt);
}

}  // namespace walkmat

#endif  // WALKMAT_SPECTRAL_HPP
