#ifndef WALKMAT_RATIONAL_HPP
#define WALKMAT_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "walkmat/error.hpp"

namespace walkmat {

using Integer = mpz_class;

/// Converts an arbitrary-precision integer to long double keeping the top 64 bits.
inline long double to_long_double(const Integer& z) {
  const std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
  if (bits <= 64) {
    Integer a = abs(z);
    const auto mag = static_cast<long double>(static_cast<std::uint64_t>(mpz_get_ui(a.get_mpz_t())));
    return sgn(z) < 0 ? -mag : mag;
  }
  const auto shift = static_cast<mp_bitcnt_t>(bits - 64);
  Integer top;
  mpz_tdiv_q_2exp(top.get_mpz_t(), z.get_mpz_t(), shift);
  Integer a = abs(top);
  long double mag = std::ldexp(
      static_cast<long double>(static_cast<std::uint64_t>(mpz_get_ui(a.get_mpz_t()))),
      static_cast<int>(shift));
  return sgn(z) < 0 ? -mag : mag;
}

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(const Integer& z) : q_(z) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(Errc::Singular, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text) {
    std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) {
      throw Error(Errc::MalformedInput, "not a rational: '" + s + "'");
    }
    if (q.get_den() == 0) throw Error(Errc::MalformedInput, "zero denominator: '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
  }

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const noexcept { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }

  long double to_long_double() const {
    if (is_integer()) return walkmat::to_long_double(q_.get_num());
    // Scale so the integer quotient carries at least 64 significant bits.
    const long nb = static_cast<long>(mpz_sizeinbase(q_.get_num_mpz_t(), 2));
    const long db = static_cast<long>(mpz_sizeinbase(q_.get_den_mpz_t(), 2));
    const long shift = 70 - (nb - db);
    if (shift <= 0) return walkmat::to_long_double(Integer(q_.get_num() / q_.get_den()));
    Integer scaled = q_.get_num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    Integer quot = scaled / q_.get_den();
    return std::ldexp(walkmat::to_long_double(quot), static_cast<int>(-shift));
  }

  std::string to_string() const { return q_.get_str(10); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::Singular, "division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace walkmat

#endif  // WALKMAT_RATIONAL_HPP
