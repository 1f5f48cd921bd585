#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace lts;

namespace {

Vector<double> vec(std::initializer_list<double> xs) {
  Vector<double> v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

Vector<double> replay(const std::vector<Vector<double>>& gens, const std::vector<std::int64_t>& c) {
  Vector<double> w = Vector<double>::Zero(gens[0].size());
  for (std::size_t i = 0; i < gens.size(); ++i) w += static_cast<double>(c[i]) * gens[i];
  return w;
}

}  // namespace

TEST(SubgroupDiscreteness, TrivialLattices) {
  EXPECT_EQ(subgroup_discreteness({vec({std::numbers::pi})}).verdict, Verdict::Discrete);
  EXPECT_EQ(subgroup_discreteness({vec({1, 0}), vec({0, 1})}).verdict, Verdict::Discrete);
  EXPECT_EQ(subgroup_discreteness({vec({std::numbers::pi, 0}), vec({0, std::numbers::pi})}).verdict, Verdict::Discrete);
  const auto dep = subgroup_discreteness({vec({1}), vec({2})});
  EXPECT_EQ(dep.verdict, Verdict::Discrete);
  EXPECT_EQ(dep.relations, 1u);
}

TEST(SubgroupDiscreteness, SqrtTwoWitnessIsAConvergent) {
  const std::vector<Vector<double>> gens{vec({1}), vec({std::sqrt(2.0)})};
  const auto r = subgroup_discreteness(gens);
  ASSERT_EQ(r.verdict, Verdict::NonDiscreteWitness);
  ASSERT_TRUE(r.witness);
  ASSERT_EQ(r.coefficients.size(), 2u);
  const double norm = r.witness->norm();
  EXPECT_GT(norm, 0.0);
  EXPECT_LT(norm, 1e-6);
  EXPECT_LE(std::abs(r.coefficients[0]), 1'000'000);
  EXPECT_LE(std::abs(r.coefficients[1]), 1'000'000);
  EXPECT_NEAR(replay(gens, r.coefficients)(0), (*r.witness)(0), 1e-12);
  // |a + b sqrt2| small means (|a|, |b|) = (p, q) for a convergent p/q.
  bool convergent = false;
  for (const auto& [p, q] : oracle::sqrt2_convergents(30))
    if (std::abs(r.coefficients[0]) == p && std::abs(r.coefficients[1]) == q) convergent = true;
  EXPECT_TRUE(convergent) << r.coefficients[0] << " " << r.coefficients[1];
}

TEST(SubgroupDiscreteness, TruncatedSqrtTwoFromTheCommandLineExample) {
  const auto r = subgroup_discreteness({vec({1}), vec({1.41421356237})});
  EXPECT_EQ(r.verdict, Verdict::NonDiscreteWitness);
  EXPECT_LT(r.witness->norm(), 1e-6);
}

TEST(SubgroupDiscreteness, GrayZoneIsInconclusive) {
  SubgroupSearchConfig cfg;
  cfg.epsilon = 1e-7;
  // The shortest combination with |c| <= 1e6 is about 7.5e-7, inside [eps, 1e3 eps].
  EXPECT_EQ(subgroup_discreteness({vec({1}), vec({std::sqrt(2.0)})}, cfg).verdict, Verdict::Inconclusive);
}

TEST(SubgroupDiscreteness, WitnessValidityProperty) {
  oracle::Gen gen(51);
  for (int trial = 0; trial < 25; ++trial) {
    const Index d = gen.integer(1, 2);
    const Index k = d + gen.integer(1, 2);
    std::vector<Vector<double>> gens;
    for (Index i = 0; i < k; ++i) gens.push_back(gen.real_matrix(d, 1, 3.0).col(0));
    SubgroupSearchConfig cfg;
    cfg.epsilon = 1e-3;
    cfg.coefficient_bound = 2000;
    const auto r = subgroup_discreteness(gens, cfg);
    if (r.verdict != Verdict::NonDiscreteWitness) continue;
    ASSERT_TRUE(r.witness);
    EXPECT_GT(r.witness->norm(), 0.0);
    EXPECT_LT(r.witness->norm(), cfg.epsilon);
    for (auto c : r.coefficients) EXPECT_LE(std::abs(c), cfg.coefficient_bound);
    EXPECT_LT((replay(gens, r.coefficients) - *r.witness).norm(), 1e-9);
  }
}

TEST(SubgroupDiscreteness, ShrinkingEpsilonNeverFlipsWitnessToDiscrete) {
  oracle::Gen gen(52);
  for (int trial = 0; trial < 15; ++trial) {
    const std::vector<Vector<double>> gens{vec({1.0}), vec({gen.real(0.1, 5.0)})};
    bool saw_witness = false;
    for (double eps : {1e-2, 1e-3, 1e-4, 1e-5}) {
      SubgroupSearchConfig cfg;
      cfg.epsilon = eps;
      cfg.coefficient_bound = 10'000;
      const Verdict v = subgroup_discreteness(gens, cfg).verdict;
      if (saw_witness) EXPECT_NE(v, Verdict::Discrete);
      if (v == Verdict::NonDiscreteWitness) saw_witness = true;
    }
  }
}

TEST(SubgroupDiscreteness, ConfigurationErrors) {
  SubgroupSearchConfig bad;
  bad.epsilon = 0;
  EXPECT_THROW(subgroup_discreteness({vec({1})}, bad), std::invalid_argument);
  std::vector<Vector<double>> many(9, vec({1}));
  EXPECT_THROW(subgroup_discreteness(many), TooManyGenerators);
  EXPECT_THROW(subgroup_discreteness({vec({1}), vec({1, 2})}), DimensionMismatch);
}

TEST(ExactDiscreteness, NeverInconclusiveAndHnfGeneratesTheSameGroupProperty) {
  oracle::Gen gen(53);
  for (int trial = 0; trial < 40; ++trial) {
    const Index d = gen.integer(1, 3);
    const Index k = gen.integer(1, 5);
    std::vector<Vector<Rational>> gens;
    for (Index i = 0; i < k; ++i) gens.push_back(gen.rational_vector(d));
    const auto r = subgroup_discreteness_exact(gens);
    EXPECT_EQ(r.verdict, Verdict::Discrete);
    const Matrix<Rational>& b = r.lattice_basis;
    ASSERT_EQ(b.cols(), d);
    EXPECT_LE(b.rows(), d);
    // Each generator is an integer combination of the basis rows, and each
    // basis row lies in the span (rank check) of the generators.
    for (const auto& g : gens) {
      if (b.rows() == 0) {
        EXPECT_TRUE(g.isZero());
        continue;
      }
      const auto c = coordinates<Rational>(Matrix<Rational>(b.transpose()), g);
      ASSERT_TRUE(c);
      for (Index i = 0; i < c->size(); ++i) EXPECT_EQ(boost::multiprecision::denominator((*c)(i)), 1);
    }
    Matrix<Rational> all(d, k);
    for (Index i = 0; i < k; ++i) all.col(i) = gens[static_cast<std::size_t>(i)];
    EXPECT_EQ(oracle::rank(all), b.rows());
  }
}

TEST(HermiteNormalForm, KnownExample) {
  Matrix<Integer> a(3, 2);
  a << 2, 4,
       4, 2,
       6, 6;
  const Matrix<Integer> h = hermite_normal_form(a);
  // Row lattice of a is {(x, y): x, y even, x + y = 0 mod 6}... basis (2, 4), (0, 6).
  ASSERT_EQ(h.rows(), 2);
  EXPECT_EQ(h(0, 0), 2);
  EXPECT_EQ(h(1, 0), 0);
  EXPECT_EQ(h(1, 1), 6);
  EXPECT_EQ(h(0, 1) % 6, 4);
}

TEST(QuotientProjection, ControlsAndSqrtTwoIdeal) {
  const std::vector<Vector<double>> z2{vec({1, 0}), vec({0, 1})};
  EXPECT_EQ(quotient_projection_discreteness(z2, Matrix<double>(2, 0)).discreteness.verdict, Verdict::Discrete);

  Matrix<Rational> slope2(2, 1);
  slope2 << 1, 2;
  EXPECT_EQ(quotient_projection_discreteness_exact({Vector<Rational>::Unit(2, 0), Vector<Rational>::Unit(2, 1)}, slope2)
                .discreteness.verdict,
            Verdict::Discrete);

  Matrix<double> root(2, 1);
  root << 1, std::sqrt(2.0);
  const auto r = quotient_projection_discreteness(z2, root);
  ASSERT_EQ(r.discreteness.verdict, Verdict::NonDiscreteWitness);
  ASSERT_TRUE(r.replay);
  // x is an integer point off the ideal line, y on it, and 2x - y is small.
  const Vector<double>& x = r.replay->x;
  const Vector<double>& y = r.replay->y;
  EXPECT_NEAR(x(0), std::round(x(0)), 1e-12);
  EXPECT_NEAR(x(1), std::round(x(1)), 1e-12);
  EXPECT_NEAR(y(1), std::sqrt(2.0) * y(0), 1e-6 * std::max(1.0, std::abs(y(0))));
  EXPECT_NEAR((2.0 * x - y).norm(), r.replay->norm_2x_minus_y, 1e-6);
  EXPECT_LT(r.replay->norm_2x_minus_y, 2e-6 * 1.0001);
  EXPECT_THROW(quotient_projection_discreteness(z2, Matrix<double>(3, 1)), DimensionMismatch);
}

TEST(QuotientProjection, SequenceTendsToZeroOffTheIdeal) {
  const std::vector<Vector<double>> z2{vec({1, 0}), vec({0, 1})};
  Matrix<double> root(2, 1);
  root << 1, std::sqrt(2.0);
  const auto seq = projection_sequence(z2, root, 6);
  ASSERT_EQ(seq.size(), 6u);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    EXPECT_LT(seq[i].norm_2x_minus_y, 2.0 * std::pow(10.0, -static_cast<double>(i + 1)));
    EXPECT_GT(seq[i].x.norm(), 0.5);
  }
}
