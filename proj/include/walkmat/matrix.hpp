#ifndef WALKMAT_MATRIX_HPP
#define WALKMAT_MATRIX_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "walkmat/error.hpp"
#include "walkmat/rational.hpp"

namespace walkmat {

using Vector = std::vector<Rational>;
using FloatMatrix = Eigen::MatrixXd;

/// Dense row-major matrix of exact rationals. Values are immutable once built.
class ExactMatrix {
 public:
  ExactMatrix() = default;

  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(Errc::DimensionMismatch, "entry count does not match shape");
    }
  }

  ExactMatrix(std::size_t rows, std::size_t cols,
              const std::function<Rational(std::size_t, std::size_t)>& fill)
      : rows_(rows), cols_(cols), data_(rows * cols) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) data_[i * cols_ + j] = fill(i, j);
  }

  static ExactMatrix identity(std::size_t n) {
    return ExactMatrix(n, n, [](std::size_t i, std::size_t j) { return Rational(i == j ? 1 : 0); });
  }

  static ExactMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<Rational> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw Error(Errc::DimensionMismatch, "ragged rows");
      for (long v : row) entries.emplace_back(v);
    }
    return ExactMatrix(r, c, std::move(entries));
  }

  static ExactMatrix from_columns(const std::vector<Vector>& columns) {
    if (columns.empty()) return {};
    const std::size_t r = columns.front().size();
    ExactMatrix m(r, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != r) throw Error(Errc::DimensionMismatch, "ragged columns");
      for (std::size_t i = 0; i < r; ++i) m.data_[i * m.cols_ + j] = columns[j][i];
    }
    return m;
  }

  static ExactMatrix column(const Vector& v) { return from_columns({v}); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  Vector col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  /// Columns lo..hi inclusive.
  ExactMatrix columns(std::size_t lo, std::size_t hi) const {
    if (lo > hi || hi >= cols_) throw Error(Errc::IndexOutOfRange, "column range");
    return ExactMatrix(rows_, hi - lo + 1,
                       [&](std::size_t i, std::size_t j) { return (*this)(i, lo + j); });
  }

  ExactMatrix transpose() const {
    return ExactMatrix(cols_, rows_, [&](std::size_t i, std::size_t j) { return (*this)(j, i); });
  }

  /// Row i of the result is row perm_inverse(i) of this; i.e. result row perm[i] = row i.
  ExactMatrix permute_rows(std::span<const std::size_t> perm) const {
    if (perm.size() != rows_) throw Error(Errc::DimensionMismatch, "permutation size");
    ExactMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.data_[perm[i] * cols_ + j] = (*this)(i, j);
    return m;
  }

  bool is_integer() const {
    for (const auto& x : data_)
      if (!x.is_integer()) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  FloatMatrix to_float() const {
    FloatMatrix f(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        f(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*this)(i, j).to_double();
    return f;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    a.require_same_shape(b);
    ExactMatrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] + b.data_[k];
    return m;
  }

  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    a.require_same_shape(b);
    ExactMatrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = a.data_[k] - b.data_[k];
    return m;
  }

  friend ExactMatrix operator*(const Rational& s, const ExactMatrix& a) {
    ExactMatrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) m.data_[k] = s * a.data_[k];
    return m;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product shape");
    ExactMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b(k, j);
          if (!bkj.is_zero()) m.data_[i * m.cols_ + j] += aik * bkj;
        }
      }
    }
    return m;
  }

  friend Vector operator*(const ExactMatrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw Error(Errc::DimensionMismatch, "matrix-vector shape");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
      os << '\n';
    }
    return os;
  }

 private:
  void require_same_shape(const ExactMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace walkmat

#endif  // WALKMAT_MATRIX_HPP
