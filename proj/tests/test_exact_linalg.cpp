#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"

using namespace walkmat;
using fixtures::rows;

namespace {

// Textbook elimination over Q with partial row swaps; independent of the fraction-free kernels.
Rational det_oracle(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
    }
  }
  return det;
}

std::size_t rank_oracle(const ExactMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) m[i].assign(a.row(i).begin(), a.row(i).end());
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && m[p][c].is_zero()) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < a.cols(); ++k) m[i][k] = m[i][k] - f * m[r][k];
    }
    ++r;
  }
  return r;
}

ExactMatrix random_int_matrix(std::size_t r, std::size_t c, long lo, long hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(lo, hi);
  return ExactMatrix(r, c, [&](std::size_t, std::size_t) { return Rational(d(rng)); });
}

Vector ints(std::initializer_list<long> v) {
  Vector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational a(Integer(6), Integer(-4));
  EXPECT_EQ(a.num(), Integer(-3));
  EXPECT_EQ(a.den(), Integer(2));
  EXPECT_EQ(Rational(Integer(0), Integer(-7)).den(), Integer(1));
  EXPECT_EQ(Rational::parse("-10/4"), Rational(Integer(-5), Integer(2)));
  EXPECT_THROW(Rational(Integer(1), Integer(0)), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(Rational, LongDoubleConversionOfLargeValues) {
  const Integer big = Integer(1) << 200;
  EXPECT_NEAR(static_cast<double>(Rational(big, big * 3).to_long_double()), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(Rational(big * 7, Integer(2)).to_long_double() / to_long_double(big)), 3.5, 1e-15);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(ExactMatrix::identity(4)), 4u);
  EXPECT_EQ(rank(fixtures::quad4_wv()), 3u);
  EXPECT_EQ(rank(fixtures::pair8_w()), 6u);
  EXPECT_EQ(rank(ExactMatrix(3, 5)), 0u);
}

TEST(Rank, AgreesWithOracleAndRowPermutation) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    ExactMatrix m = random_int_matrix(r, c, -2, 2, rng);
    if (t % 3 == 0 && r > 1) {
      // force a dependent row
      m = ExactMatrix(r, c, [&](std::size_t i, std::size_t j) { return i + 1 == r ? m(0, j) * Rational(3) : m(i, j); });
    }
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(rank(m), rank_oracle(m));
    EXPECT_EQ(rank(m.permute_rows(perm)), rank(m));
  }
}

TEST(Solve, Examples) {
  const Vector b = ints({3, -1, 4});
  const SolveResult id = solve(ExactMatrix::identity(3), b);
  ASSERT_TRUE(id.ok());
  EXPECT_EQ(id.x, b);

  const ExactMatrix w1 = fixtures::quad4_w1();
  const SolveResult r = solve(w1.columns(0, 2), w1.col(3));
  ASSERT_EQ(r.status, SolveStatus::Unique);
  EXPECT_EQ(r.x, ints({-1, 3, 1}));

  const ExactMatrix sing = rows({{1, 1}, {1, 1}});
  EXPECT_EQ(solve(sing, ints({1, 2})).status, SolveStatus::NoSolution);
  EXPECT_EQ(solve(sing, ints({2, 2})).status, SolveStatus::NonUnique);
}

TEST(Solve, RandomSystemsSatisfyEquation) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const ExactMatrix a = random_int_matrix(n, n, -3, 3, rng);
    const Vector b = random_int_matrix(n, 1, -5, 5, rng).col(0);
    const SolveResult s = solve(a, b);
    if (rank(a) == n) {
      ASSERT_TRUE(s.ok());
      EXPECT_EQ(a * s.x, b);
    } else {
      EXPECT_NE(s.status, SolveStatus::Unique);
    }
  }
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(ExactMatrix::identity(3)), ExactMatrix::identity(3));
  const ExactMatrix d = rows({{2, 0}, {0, 4}});
  const ExactMatrix di = inverse(d);
  EXPECT_EQ(di(0, 0), Rational(Integer(1), Integer(2)));
  EXPECT_EQ(di(1, 1), Rational(Integer(1), Integer(4)));
  EXPECT_TRUE(di(0, 1).is_zero());

  const ExactMatrix w = fixtures::quad4_w1().columns(0, 2);
  const ExactMatrix h = w.transpose() * w;
  EXPECT_EQ(h * inverse(h), ExactMatrix::identity(3));
  EXPECT_THROW(inverse(rows({{1, 2}, {2, 4}})), Error);
}

TEST(Inverse, RandomProductIsIdentity) {
  std::mt19937_64 rng(13);
  int inverted = 0;
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const ExactMatrix a = random_int_matrix(n, n, -4, 4, rng);
    try {
      const ExactMatrix ai = inverse(a);
      EXPECT_EQ(a * ai, ExactMatrix::identity(n));
      EXPECT_EQ(ai * a, ExactMatrix::identity(n));
      ++inverted;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::Singular);
      EXPECT_LT(rank(a), n);
    }
  }
  EXPECT_GT(inverted, 100);
}

TEST(KernelBasis, Examples) {
  EXPECT_TRUE(kernel_basis(ExactMatrix::identity(4)).empty());

  const auto k = kernel_basis(fixtures::quad4_wv().transpose());
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(k[0][0].is_zero());
  EXPECT_TRUE(k[0][1].is_zero());
  EXPECT_EQ(k[0][2], -k[0][3]);
  EXPECT_FALSE(k[0][2].is_zero());

  EXPECT_EQ(kernel_basis(fixtures::pair8_w().transpose()).size(), 2u);
}

TEST(KernelBasis, RandomVectorsAnnihilate) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    const ExactMatrix m = random_int_matrix(r, c, -1, 1, rng);
    const auto basis = kernel_basis(m);
    EXPECT_EQ(basis.size(), c - rank(m));
    for (const Vector& v : basis) {
      for (const Rational& x : m * v) EXPECT_TRUE(x.is_zero());
    }
    if (!basis.empty()) {
      EXPECT_EQ(rank(ExactMatrix::from_columns(basis)), basis.size());
    }
  }
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(ExactMatrix(2, 2)), IntPolynomial::monomial(2));
  EXPECT_EQ(char_poly(fixtures::quad4().adjacency()), IntPolynomial::from_ints({1, -2, -4, 0, 1}));
  EXPECT_EQ(char_poly(fixtures::cycle(3).adjacency()), IntPolynomial::from_ints({-2, -3, 0, 1}));
  EXPECT_EQ(char_poly(fixtures::quad4().adjacency()).to_string(), "x^4 - 4x^2 - 2x + 1");
  EXPECT_THROW(char_poly(ExactMatrix(2, 2, [](std::size_t, std::size_t) { return Rational(Integer(1), Integer(2)); })),
               Error);
}

TEST(CharPoly, MatchesDeterminantAtIntegerPoints) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const ExactMatrix a = random_int_matrix(n, n, -3, 3, rng);
    const IntPolynomial p = char_poly(a);
    ASSERT_EQ(p.degree(), static_cast<int>(n));
    ASSERT_TRUE(p.is_monic());
    for (long x = -3; x <= 3; ++x) {
      std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? Rational(x) : Rational(0)) - a(i, j);
      Integer value = 0, power = 1;
      for (int k = 0; k <= p.degree(); ++k) {
        value += p.coeff(static_cast<std::size_t>(k)) * power;
        power *= x;
      }
      EXPECT_EQ(Rational(value), det_oracle(m)) << "x=" << x;
    }
  }
}

TEST(CharPoly, GraphCoefficients) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 8;
    const Graph g = random_graph(n, rng);
    const IntPolynomial p = char_poly(g.adjacency());
    EXPECT_TRUE(p.is_monic());
    EXPECT_EQ(p.coeff(n - 1), Integer(0));
    EXPECT_EQ(p.coeff(n - 2), -Integer(static_cast<long>(g.edge_count())));
  }
}

TEST(Polynomial, Divides) {
  EXPECT_TRUE(poly_divides(IntPolynomial::from_ints({-1, 1}), IntPolynomial::from_ints({-1, 0, 1})));
  EXPECT_TRUE(poly_divides(IntPolynomial::from_ints({1, -3, -1, 1}), IntPolynomial::from_ints({1, -2, -4, 0, 1})));
  EXPECT_FALSE(poly_divides(IntPolynomial::monomial(1), IntPolynomial::from_ints({-1, 0, 1})));
  EXPECT_THROW(poly_divides(IntPolynomial(), IntPolynomial::monomial(1)), Error);
}

TEST(Polynomial, Formatting) {
  EXPECT_EQ(IntPolynomial::from_ints({1, -3, -1, 1}).to_string(), "x^3 - x^2 - 3x + 1");
  EXPECT_EQ(IntPolynomial::monomial(1).to_string(), "x");
  EXPECT_EQ(IntPolynomial().to_string(), "0");
  EXPECT_EQ((IntPolynomial::from_ints({1, 1}) * IntPolynomial::from_ints({1, -3, -1, 1})),
            IntPolynomial::from_ints({1, -2, -4, 0, 1}));
}
