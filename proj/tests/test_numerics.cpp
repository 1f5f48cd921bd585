#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lts;

TEST(ParseRational, CanonicalFormsAndDecimals) {
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(format_rational(parse_rational("-6/8")), "-3/4");
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("1.25e-1"), Rational(1, 8));
  EXPECT_EQ(parse_rational("-0.5"), Rational(-1, 2));
  EXPECT_ANY_THROW(parse_rational("3/-6"));
  EXPECT_EQ(format_rational(Rational(4, 2)), "2");
}

TEST(ParseRational, RejectsGarbage) {
  EXPECT_ANY_THROW(parse_rational(""));
  EXPECT_ANY_THROW(parse_rational("1/0"));
  EXPECT_ANY_THROW(parse_rational("abc"));
  EXPECT_ANY_THROW(parse_rational("1/2/3"));
}

TEST(ParseRational, FormatRoundTripProperty) {
  oracle::Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational r(gen.integer(-1000000, 1000000), gen.integer(1, 99999));
    EXPECT_EQ(parse_rational(format_rational(r)), r);
  }
}

TEST(Rank, ExactMatchesEliminationOracle) {
  oracle::Gen gen(3);
  for (int trial = 0; trial < 60; ++trial) {
    const Index r = gen.integer(1, 5);
    const Index c = gen.integer(1, 5);
    const Index k = gen.integer(1, 4);
    // Product of r x k and k x c has rank <= k.
    const Matrix<Rational> a = gen.rational_matrix(r, k) * gen.rational_matrix(k, c);
    EXPECT_EQ(rank(a), oracle::rank(a));
    EXPECT_LE(rank(a), k);
  }
}

TEST(Rank, FloatAgreesOnRationalInputs) {
  oracle::Gen gen(4);
  for (int trial = 0; trial < 60; ++trial) {
    const Index k = gen.integer(1, 4);
    const Matrix<Rational> a = gen.rational_matrix(5, k) * gen.rational_matrix(k, 6);
    EXPECT_EQ(rank(to_double_matrix(a)), oracle::rank(a));
  }
}

TEST(Rank, NoiseVectorIsRankZero) {
  Matrix<double> noise = Matrix<double>::Zero(4, 1);
  noise(0, 0) = 5e-17;
  EXPECT_EQ(rank(noise), 0);
}

TEST(Nullspace, AnnihilatesAndHasComplementaryDimension) {
  oracle::Gen gen(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Index k = gen.integer(1, 4);
    const Matrix<Rational> a = gen.rational_matrix(4, k) * gen.rational_matrix(k, 6);
    const Matrix<Rational> n = nullspace(a);
    EXPECT_EQ(n.cols() + oracle::rank(a), 6);
    EXPECT_TRUE(all_zero<Rational>(Matrix<Rational>(a * n), 0));
    const Matrix<double> af = to_double_matrix(a);
    const Matrix<double> nf = nullspace(af);
    EXPECT_EQ(nf.cols(), n.cols());
    EXPECT_LT(max_abs(Matrix<double>(af * nf)), 1e-10);
  }
}

TEST(SpanBasis, KeepsFirstIndependentColumns) {
  Matrix<Rational> v(3, 4);
  v << 1, 2, 0, 1,
       0, 0, 1, 1,
       0, 0, 0, 0;
  std::vector<Index> picked;
  const Matrix<Rational> b = span_basis(v, {}, &picked);
  EXPECT_EQ(picked, (std::vector<Index>{0, 2}));
  EXPECT_EQ(b.cols(), 2);
}

TEST(Coordinates, RoundTripBothModes) {
  oracle::Gen gen(6);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix<Rational> basis = gen.invertible(5).leftCols(3);
    const Vector<Rational> c = gen.rational_vector(3);
    const auto got = coordinates<Rational>(basis, Vector<Rational>(basis * c));
    ASSERT_TRUE(got);
    EXPECT_EQ(*got, c);
    const auto gotf = coordinates<double>(to_double_matrix(basis), Vector<double>(to_double_matrix(basis) * to_double_matrix<Rational>(c)));
    ASSERT_TRUE(gotf);
    EXPECT_LT((*gotf - to_double_matrix<Rational>(c)).norm(), 1e-9);
  }
  Matrix<Rational> e1 = Matrix<Rational>::Zero(2, 1);
  e1(0, 0) = 1;
  EXPECT_FALSE(coordinates<Rational>(e1, Vector<Rational>::Unit(2, 1)));
  EXPECT_THROW(coordinates_or_throw<Rational>(e1, Matrix<Rational>::Identity(2, 2), {}, "test"), std::domain_error);
}

TEST(MatrixExp, PhaseMatchesCosSin) {
  for (Index n = 1; n <= 4; ++n)
    for (double t : {0.0, 0.3, 1.0, 3.14159, -2.5}) {
      const Matrix<double> x = t * realify<double>(Matrix<double>::Zero(n, n), Matrix<double>::Identity(n, n));
      EXPECT_LT((matrix_exp(x) - oracle::phase(n, t)).norm(), 1e-13);
    }
  EXPECT_ANY_THROW(matrix_exp(Matrix<Rational>(Matrix<Rational>::Zero(2, 2))));
}

TEST(MatrixExp, CommutingSumProperty) {
  oracle::Gen gen(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix<double> a = gen.real_matrix(3, 3);
    const double s = gen.real(-1, 1);
    const double t = gen.real(-1, 1);
    EXPECT_LT((matrix_exp(Matrix<double>((s + t) * a)) - matrix_exp(Matrix<double>(s * a)) * matrix_exp(Matrix<double>(t * a))).norm(), 1e-12);
  }
}

TEST(Realify, IsAnAlgebraHomomorphism) {
  oracle::Gen gen(8);
  for (int trial = 0; trial < 30; ++trial) {
    Eigen::MatrixXcd a(3, 3), b(3, 3);
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 3; ++j) {
        a(i, j) = {gen.real(-1, 1), gen.real(-1, 1)};
        b(i, j) = {gen.real(-1, 1), gen.real(-1, 1)};
      }
    EXPECT_LT((realify(Eigen::MatrixXcd(a * b)) - realify(a) * realify(b)).norm(), 1e-12);
    EXPECT_LT((realify(Eigen::MatrixXcd(a + b)) - realify(a) - realify(b)).norm(), 1e-12);
  }
}
