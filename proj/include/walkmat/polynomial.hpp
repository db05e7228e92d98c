#ifndef WALKMAT_POLYNOMIAL_HPP
#define WALKMAT_POLYNOMIAL_HPP

#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "walkmat/error.hpp"
#include "walkmat/matrix.hpp"
#include "walkmat/rational.hpp"

namespace walkmat {

/// Polynomial with arbitrary-precision integer coefficients, stored in ascending degree.
/// The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

  static IntPolynomial from_ints(std::initializer_list<long> ascending) {
    std::vector<Integer> c;
    for (long v : ascending) c.emplace_back(v);
    return IntPolynomial(std::move(c));
  }

  static IntPolynomial monomial(std::size_t degree) {
    std::vector<Integer> c(degree + 1);
    c.back() = 1;
    return IntPolynomial(std::move(c));
  }

  /// Monic polynomial from rational coefficients c_0..c_{d-1} (leading 1 implied).
  /// Throws NonInteger if any coefficient is not an integer.
  static IntPolynomial monic_from(const Vector& lower) {
    std::vector<Integer> c;
    c.reserve(lower.size() + 1);
    for (const auto& x : lower) {
      if (!x.is_integer()) throw Error(Errc::NonInteger, "coefficient " + x.to_string());
      c.push_back(x.num());
    }
    c.emplace_back(1);
    return IntPolynomial(std::move(c));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of x^k (zero beyond the degree).
  Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

  long double evaluate(long double x) const {
    long double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_long_double(*it);
    return acc;
  }

  long double evaluate_derivative(long double x) const {
    long double acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 1;)
      acc = acc * x + to_long_double(coeffs_[k]) * static_cast<long double>(k);
    return acc;
  }

  IntPolynomial derivative() const {
    std::vector<Integer> c;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) c.push_back(coeffs_[k] * static_cast<long>(k));
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, e.g. "x^3 - x^2 - 3x + 1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Integer& c = coeffs_[k];
      if (c == 0) continue;
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (mag != 1 || k == 0) os << mag.get_str();
      if (k >= 1) os << "x";
      if (k >= 2) os << "^" << k;
      first = false;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

/// Exact division over the rationals; true iff q = p * s for some polynomial s.
inline bool poly_divides(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero()) throw Error(Errc::Singular, "division by the zero polynomial");
  if (q.is_zero()) return true;
  if (q.degree() < p.degree()) return false;
  std::vector<Rational> rem;
  for (const auto& c : q.coefficients()) rem.emplace_back(c);
  const Rational lead(p.coefficients().back());
  const auto dp = static_cast<std::size_t>(p.degree());
  for (std::size_t top = rem.size(); top-- > dp;) {
    if (rem[top].is_zero()) continue;
    const Rational factor = rem[top] / lead;
    for (std::size_t k = 0; k <= dp; ++k) rem[top - dp + k] -= factor * Rational(p.coefficients()[k]);
  }
  for (std::size_t k = 0; k < dp; ++k)
    if (!rem[k].is_zero()) return false;
  return true;
}

}  // namespace walkmat

#endif  // WALKMAT_POLYNOMIAL_HPP
