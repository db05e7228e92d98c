#ifndef WALKMAT_LINALG_HPP
#define WALKMAT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "walkmat/error.hpp"
#include "walkmat/matrix.hpp"
#include "walkmat/polynomial.hpp"
#include "walkmat/rational.hpp"

namespace walkmat {

namespace detail {

/// Integer working copy of [m | extra]; every row is scaled by the lcm of its denominators,
/// which leaves row space, rank and solution sets unchanged.
struct IntegerRows {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> a;

  Integer& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(at(i, j), at(k, j));
  }
};

inline IntegerRows integerize(const ExactMatrix& m, const ExactMatrix* extra = nullptr) {
  if (extra != nullptr && extra->rows() != m.rows()) {
    throw Error(Errc::DimensionMismatch, "right-hand side row count");
  }
  IntegerRows out;
  out.rows = m.rows();
  out.cols = m.cols() + (extra ? extra->cols() : 0);
  out.a.resize(out.rows * out.cols);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (const auto& x : m.row(i)) scale = lcm(scale, x.den());
    if (extra)
      for (const auto& x : extra->row(i)) scale = lcm(scale, x.den());
    std::size_t j = 0;
    for (const auto& x : m.row(i)) out.at(i, j++) = x.num() * (scale / x.den());
    if (extra)
      for (const auto& x : extra->row(i)) out.at(i, j++) = x.num() * (scale / x.den());
  }
  return out;
}

struct Echelon {
  IntegerRows m;
  std::vector<std::size_t> pivot_cols;  // pivot of row k sits at (k, pivot_cols[k])
  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

/// Fraction-free (Bareiss) forward elimination over the first `elim_cols` columns,
/// first-nonzero pivot selection. Columns beyond `elim_cols` are carried along.
inline Echelon bareiss(IntegerRows m, std::size_t elim_cols) {
  Echelon e{std::move(m), {}};
  IntegerRows& a = e.m;
  Integer prev = 1;
  Integer t;
  std::size_t k = 0;
  for (std::size_t c = 0; c < elim_cols && k < a.rows; ++c) {
    std::size_t p = k;
    while (p < a.rows && a.at(p, c) == 0) ++p;
    if (p == a.rows) continue;
    a.swap_rows(p, k);
    const Integer& piv = a.at(k, c);
    for (std::size_t i = k + 1; i < a.rows; ++i) {
      const Integer lead = a.at(i, c);
      for (std::size_t j = c + 1; j < a.cols; ++j) {
        Integer& x = a.at(i, j);
        x *= piv;
        t = lead * a.at(k, j);
        x -= t;
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, c) = 0;
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++k;
  }
  return e;
}

/// Back substitution on the pivot rows for one right-hand-side column `rhs` (or zero when
/// rhs is absent), with the free variables already fixed in `x`.
inline void back_substitute(const Echelon& e, std::size_t unknowns, std::optional<std::size_t> rhs,
                            Vector& x) {
  for (std::size_t k = e.rank(); k-- > 0;) {
    const std::size_t c = e.pivot_cols[k];
    Rational acc = rhs ? Rational(e.m.at(k, *rhs)) : Rational(0);
    for (std::size_t j = c + 1; j < unknowns; ++j) {
      const Integer& a = e.m.at(k, j);
      if (a != 0 && !x[j].is_zero()) acc -= Rational(a) * x[j];
    }
    x[c] = acc / Rational(e.m.at(k, c));
  }
}

}  // namespace detail

inline std::size_t rank(const ExactMatrix& m) {
  return detail::bareiss(detail::integerize(m), m.cols()).rank();
}

enum class SolveStatus { Unique, NoSolution, NonUnique };

struct SolveResult {
  SolveStatus status = SolveStatus::NoSolution;
  Vector x;  // populated only when status == Unique

  bool ok() const noexcept { return status == SolveStatus::Unique; }
};

/// Solves a x = b exactly. Inconsistency takes precedence over underdetermination.
inline SolveResult solve(const ExactMatrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw Error(Errc::DimensionMismatch, "solve: row count of b");
  const ExactMatrix rhs = ExactMatrix::column(b);
  const detail::Echelon e = detail::bareiss(detail::integerize(a, &rhs), a.cols());
  for (std::size_t i = e.rank(); i < a.rows(); ++i)
    if (e.m.at(i, a.cols()) != 0) return {SolveStatus::NoSolution, {}};
  if (e.rank() < a.cols()) return {SolveStatus::NonUnique, {}};
  Vector x(a.cols());
  detail::back_substitute(e, a.cols(), a.cols(), x);
  return {SolveStatus::Unique, std::move(x)};
}

/// Exact inverse of a square full-rank matrix; throws Singular otherwise.
inline ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const ExactMatrix id = ExactMatrix::identity(n);
  const detail::Echelon e = detail::bareiss(detail::integerize(m, &id), n);
  if (e.rank() < n) throw Error(Errc::Singular, "rank " + std::to_string(e.rank()) + " < " + std::to_string(n));
  std::vector<Vector> cols(n, Vector(n));
  for (std::size_t j = 0; j < n; ++j) detail::back_substitute(e, n, n + j, cols[j]);
  return ExactMatrix::from_columns(cols);
}

/// Basis of the right null space, one vector per free column in increasing column order.
inline std::vector<Vector> kernel_basis(const ExactMatrix& m) {
  const detail::Echelon e = detail::bareiss(detail::integerize(m), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(m.cols());
    x[f] = 1;
    detail::back_substitute(e, m.cols(), std::nullopt, x);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// det(xI - a) for an integer matrix, via Faddeev-LeVerrier in exact integer arithmetic.
inline IntPolynomial char_poly(const ExactMatrix& a) {
  if (!a.is_square()) throw Error(Errc::DimensionMismatch, "char_poly of a non-square matrix");
  if (!a.is_integer()) throw Error(Errc::NonInteger, "char_poly needs integer entries");
  const std::size_t n = a.rows();
  std::vector<Integer> ai(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ai[i * n + j] = a(i, j).num();

  std::vector<Integer> c(n + 1);
  c[n] = 1;
  std::vector<Integer> mk(n * n, 0);  // M_0 = 0
  std::vector<Integer> prod(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Integer s = 0;
        for (std::size_t l = 0; l < n; ++l)
          if (ai[i * n + l] != 0 && mk[l * n + j] != 0) s += ai[i * n + l] * mk[l * n + j];
        prod[i * n + j] = std::move(s);
      }
    }
    for (std::size_t i = 0; i < n; ++i) prod[i * n + i] += c[n - k + 1];
    mk.swap(prod);
    // c_{n-k} = -tr(A M_k) / k
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (ai[i * n + l] != 0) tr += ai[i * n + l] * mk[l * n + i];
    Integer q = -tr;
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = std::move(q);
  }
  return IntPolynomial(std::move(c));
}

}  // namespace walkmat

#endif  // WALKMAT_LINALG_HPP
