#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"

using namespace walkmat;
using fixtures::set_of;

namespace {

const IntPolynomial kQuad4Main = IntPolynomial::from_ints({1, -3, -1, 1});
const IntPolynomial kQuad4Char = IntPolynomial::from_ints({1, -2, -4, 0, 1});

std::pair<Graph, VertexSet> random_instance(std::mt19937_64& rng, std::size_t max_n) {
  const std::size_t n = 1 + rng() % max_n;
  Graph g = random_graph(n, rng);
  return {std::move(g), rng() % 3 == 0 ? VertexSet::all(n) : random_vertex_set(n, rng)};
}

// p(A) e by Horner's rule over the adjacency matrix.
Vector annihilate(const IntPolynomial& p, const Graph& g, const VertexSet& s) {
  const ExactMatrix a = g.adjacency();
  Vector acc(g.order(), Rational(0));
  for (int k = p.degree(); k >= 0; --k) {
    acc = a * acc;
    const Vector e = s.characteristic();
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += Rational(p.coeff(static_cast<std::size_t>(k))) * e[i];
  }
  return acc;
}

bool is_zero(const Vector& v) {
  for (const Rational& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

TEST(SpectralSummary, Quad4) {
  const Graph g = fixtures::quad4();
  const SpectralSummary v = spectral_summary(g, VertexSet::all(4));
  EXPECT_EQ(v.rank, 3u);
  EXPECT_EQ(v.main_poly, kQuad4Main);
  EXPECT_FALSE(v.char_poly.has_value());

  const SpectralSummary s1 = spectral_summary(g, set_of(4, {1}));
  EXPECT_EQ(s1.rank, 3u);
  EXPECT_EQ(s1.main_poly, kQuad4Main);

  const SpectralSummary s3 = spectral_summary(g, set_of(4, {3}));
  EXPECT_EQ(s3.rank, 4u);
  EXPECT_TRUE(s3.full_rank);
  EXPECT_EQ(s3.main_poly, kQuad4Char);
  ASSERT_TRUE(s3.char_poly.has_value());
  EXPECT_EQ(*s3.char_poly, kQuad4Char);
}

TEST(SpectralSummary, SingleVertex) {
  const SpectralSummary s = spectral_summary(Graph(1), VertexSet::all(1));
  EXPECT_EQ(s.rank, 1u);
  EXPECT_EQ(s.main_poly, IntPolynomial::monomial(1));
}

TEST(SpectralSummary, FullRankMatchesCharPoly) {
  std::mt19937_64 rng(71);
  int full = 0;
  for (int t = 0; t < 300 && full < 40; ++t) {
    const std::size_t n = 2 + rng() % 7;
    const Graph g = random_graph(n, rng);
    const WalkMatrix w = walk_matrix(g, VertexSet::all(n));
    if (rank(w.matrix()) != n) continue;
    ++full;
    EXPECT_EQ(char_poly_from_hankel(w), char_poly(g.adjacency()));
    // the dependence route, given one extra column, finds the same polynomial
    EXPECT_EQ(main_poly_from_dependence(slice(g, VertexSet::all(n), 0, n).m, n), char_poly(g.adjacency()));
  }
  EXPECT_GE(full, 20);
}

TEST(SpectralSummary, MainPolyInvariants) {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 200; ++t) {
    const auto [g, s] = random_instance(rng, 9);
    const SpectralSummary sum = spectral_summary(g, s);
    ASSERT_EQ(sum.main_poly.degree(), static_cast<int>(sum.rank));
    EXPECT_TRUE(sum.main_poly.is_monic());
    EXPECT_TRUE(poly_divides(sum.main_poly, char_poly(g.adjacency())));
    EXPECT_TRUE(is_zero(annihilate(sum.main_poly, g, s)));
    // minimality: e, Ae, ..., A^{r-1} e are independent
    EXPECT_EQ(rank(slice(g, s, 0, sum.rank - 1).m), sum.rank);
  }
}

TEST(Restriction, RegularGraphIsScaledAllOnes) {
  for (const Graph& g : {fixtures::cube(), fixtures::wagner(), fixtures::cycle(5), fixtures::complete(4)}) {
    const std::size_t n = g.order();
    const Rational k(static_cast<long>(g.degree(0)));
    const ExactMatrix aw = restriction(g, VertexSet::all(n));
    EXPECT_EQ(aw, ExactMatrix(n, n, [&](std::size_t, std::size_t) { return k / Rational(static_cast<long>(n)); }));
  }
}

TEST(Restriction, FullRankGivesAdjacency) {
  const Graph g = fixtures::quad4();
  EXPECT_EQ(restriction(g, set_of(4, {3})), g.adjacency());
  EXPECT_EQ(rank(restriction(g, VertexSet::all(4))), 3u);
}

TEST(Restriction, Properties) {
  std::mt19937_64 rng(79);
  for (int t = 0; t < 150; ++t) {
    const auto [g, s] = random_instance(rng, 9);
    const WalkMatrix w = walk_matrix(g, s);
    const SpectralSummary sum = spectral_summary(w);
    const ExactMatrix aw = restriction(w, sum);
    const ExactMatrix a = g.adjacency();
    EXPECT_TRUE(aw.is_symmetric());
    EXPECT_EQ(a * aw, aw * a);
    const std::size_t expected = sum.main_poly.coeff(0) != 0 ? sum.rank : sum.rank - 1;
    EXPECT_EQ(rank(aw), expected);
    // columns of A_W lie in the column space of W
    EXPECT_EQ(rank(ExactMatrix::from_columns([&] {
                auto cols = std::vector<Vector>{};
                for (std::size_t k = 0; k < sum.rank; ++k) cols.push_back(w.matrix().col(k));
                for (std::size_t j = 0; j < aw.cols(); ++j) cols.push_back(aw.col(j));
                return cols;
              }())),
              sum.rank);
  }
}

TEST(KernelProjector, Examples) {
  const Graph g = fixtures::quad4();
  EXPECT_EQ(kernel_projector(g, set_of(4, {3})), ExactMatrix(4, 4));
  const Rational h(Integer(1), Integer(2));
  ExactMatrix expected(4, 4, [&](std::size_t i, std::size_t j) {
    if (i < 2 || j < 2) return Rational(0);
    return i == j ? h : -h;
  });
  EXPECT_EQ(kernel_projector(g, VertexSet::all(4)), expected);
}

TEST(KernelProjector, Properties) {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 150; ++t) {
    const auto [g, s] = random_instance(rng, 9);
    const WalkMatrix w = walk_matrix(g, s);
    const std::size_t r = rank(w.matrix());
    const ExactMatrix p = kernel_projector(w);
    EXPECT_TRUE(p.is_symmetric());
    EXPECT_EQ(p * p, p);
    EXPECT_EQ(rank(p), g.order() - r);
    EXPECT_TRUE((p * w.matrix()).is_zero());
  }
}

TEST(PseudoInverse, LeftInverseOnColumnSpace) {
  const WalkMatrix w = walk_matrix(fixtures::quad4(), VertexSet::all(4));
  const ExactMatrix wr = w.columns(0, 2);
  EXPECT_EQ(walk_pseudo_inverse(w, 3) * wr, ExactMatrix::identity(3));
}

TEST(NumericRealization, Quad4MainEigenvalues) {
  const NumericRealization r = main_eigen_realize(fixtures::quad4(), VertexSet::all(4));
  ASSERT_EQ(r.mu.size(), 3u);
  EXPECT_NEAR(r.mu[0], -1.48, 0.005);
  EXPECT_NEAR(r.mu[1], 0.31, 0.005);
  EXPECT_NEAR(r.mu[2], 2.17, 0.005);
  EXPECT_LE(r.reconstruction_error, 1e-8);
  EXPECT_LE(r.sum_error, 1e-8);
}

TEST(NumericRealization, RegularGraph) {
  const NumericRealization r = main_eigen_realize(fixtures::cube(), VertexSet::all(8));
  ASSERT_EQ(r.mu.size(), 1u);
  EXPECT_NEAR(r.mu[0], 3.0, 1e-12);
  for (Eigen::Index v = 0; v < 8; ++v) EXPECT_NEAR(r.vec_matrix(v, 0), 1.0, 1e-10);
}

TEST(NumericRealization, Properties) {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 150; ++t) {
    const auto [g, s] = random_instance(rng, 12);
    const NumericRealization r = main_eigen_realize(g, s);
    EXPECT_LE(r.reconstruction_error, 1e-8);
    EXPECT_LE(r.sum_error, 1e-8);
    const double d = r.vandermonde_det_squared;
    EXPECT_LE(std::abs(d - std::round(d)), 1e-6 * std::max(1.0, std::abs(d)));
    // A e_i = mu_i e_i
    const auto n = static_cast<Eigen::Index>(g.order());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) a(static_cast<Eigen::Index>(u - 1), static_cast<Eigen::Index>(v - 1)) =
        a(static_cast<Eigen::Index>(v - 1), static_cast<Eigen::Index>(u - 1)) = 1;
    for (std::size_t i = 0; i < r.mu.size(); ++i) {
      const Eigen::VectorXd e = r.vec_matrix.col(static_cast<Eigen::Index>(i));
      EXPECT_LE((a * e - r.mu[i] * e).cwiseAbs().maxCoeff(), 1e-7 * std::max(1.0, e.cwiseAbs().maxCoeff()));
    }
  }
}
