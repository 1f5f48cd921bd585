#pragma once

// Reference computations written without the library's linear algebra, plus
// seeded generators for property tests.

#include "lts/fixtures.hpp"

#include <cmath>
#include <complex>
#include <random>

namespace oracle {

using lts::Index;
using lts::Rational;
template <typename S>
using Matrix = lts::Matrix<S>;
template <typename S>
using Vector = lts::Vector<S>;

// [x, y, z] summed straight from the structure constants.
template <typename S>
Vector<S> bracket(const lts::LieTripleSystem<S>& m, const Vector<S>& x, const Vector<S>& y, const Vector<S>& z) {
  const Index d = m.dim();
  Vector<S> out = Vector<S>::Zero(d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k) {
        const S w = x(i) * y(j) * z(k);
        if (w == 0) continue;
        for (Index l = 0; l < d; ++l) out(l) += w * m.coeff(i, j, k, l);
      }
  return out;
}

template <typename S>
Vector<S> unit(Index d, Index i) {
  Vector<S> v = Vector<S>::Zero(d);
  v(i) = 1;
  return v;
}

// All three identities on every basis tuple, exact comparison, written
// directly on the structure constants c[i][j][k][l].
inline bool axioms_hold(const lts::LieTripleSystem<Rational>& m) {
  const Index d = m.dim();
  std::vector<Rational> c(static_cast<std::size_t>(d * d * d * d));
  auto at = [d, &c](Index i, Index j, Index k, Index l) -> Rational& {
    return c[static_cast<std::size_t>(((i * d + j) * d + k) * d + l)];
  };
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k)
        for (Index l = 0; l < d; ++l) at(i, j, k, l) = m.coeff(i, j, k, l);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k)
        for (Index l = 0; l < d; ++l) {
          if (at(i, i, k, l) != 0) return false;
          if (at(i, j, k, l) + at(j, i, k, l) != 0) return false;
          if (at(i, j, k, l) + at(j, k, i, l) + at(k, i, j, l) != 0) return false;
        }
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b)
      for (Index u = 0; u < d; ++u)
        for (Index v = 0; v < d; ++v)
          for (Index w = 0; w < d; ++w)
            for (Index q = 0; q < d; ++q) {
              Rational lhs = 0, rhs = 0;
              for (Index p = 0; p < d; ++p) {
                lhs += at(u, v, w, p) * at(a, b, p, q);
                rhs += at(a, b, u, p) * at(p, v, w, q) + at(a, b, v, p) * at(u, p, w, q) + at(a, b, w, p) * at(u, v, p, q);
              }
              if (lhs != rhs) return false;
            }
  return true;
}

// Plain Gaussian elimination over Q.
inline Index rank(Matrix<Rational> a) {
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.row(p).swap(a.row(r));
    for (Index i = r + 1; i < a.rows(); ++i) {
      const Rational f = a(i, c) / a(r, c);
      if (f != 0) a.row(i) -= f * a.row(r);
    }
    ++r;
  }
  return r;
}

// Span equality by ranks: dim A = dim B = dim [A B].
inline bool same_span(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  if (a.rows() != b.rows()) return false;
  Matrix<Rational> ab(a.rows(), a.cols() + b.cols());
  ab << a, b;
  const Index ra = rank(a);
  return ra == rank(b) && ra == rank(ab);
}

// Convergents p/q of sqrt 2 = [1; 2, 2, ...]: p' = p + 2q, q' = p + q.
inline std::vector<std::pair<std::int64_t, std::int64_t>> sqrt2_convergents(int count) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out{{1, 1}};
  while (static_cast<int>(out.size()) < count) {
    const auto [p, q] = out.back();
    out.emplace_back(p + 2 * q, p + q);
  }
  return out;
}

// exp(i t I_n) realified: cos t on the diagonal blocks, sin t off them.
inline Matrix<double> phase(Index n, double t) {
  Matrix<double> m = Matrix<double>::Zero(2 * n, 2 * n);
  m.topLeftCorner(n, n) = std::cos(t) * Matrix<double>::Identity(n, n);
  m.bottomRightCorner(n, n) = std::cos(t) * Matrix<double>::Identity(n, n);
  m.topRightCorner(n, n) = -std::sin(t) * Matrix<double>::Identity(n, n);
  m.bottomLeftCorner(n, n) = std::sin(t) * Matrix<double>::Identity(n, n);
  return m;
}

// Seeded generator of small rationals and matrices.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  std::int64_t integer(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(std::int64_t num = 5, std::int64_t den = 4) {
    return Rational(integer(-num, num), integer(1, den));
  }

  Vector<Rational> rational_vector(Index n) {
    Vector<Rational> v(n);
    for (Index i = 0; i < n; ++i) v(i) = rational();
    return v;
  }

  Matrix<Rational> rational_matrix(Index r, Index c) {
    Matrix<Rational> m(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) m(i, j) = rational();
    return m;
  }

  // Product of a random unit lower and unit upper triangular matrix with a
  // random column permutation: always invertible.
  Matrix<Rational> invertible(Index n) {
    Matrix<Rational> l = Matrix<Rational>::Identity(n, n);
    Matrix<Rational> u = Matrix<Rational>::Identity(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < i; ++j) {
        l(i, j) = rational(2, 2);
        u(j, i) = rational(2, 2);
      }
    Matrix<Rational> p = l * u;
    for (Index i = n - 1; i > 0; --i) p.col(i).swap(p.col(integer(0, i)));
    return p;
  }

  Matrix<double> real_matrix(Index r, Index c, double scale = 1.0) {
    Matrix<double> m(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) m(i, j) = real(-scale, scale);
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

// theta_a (+) theta_b on a (+) b.
inline lts::SymmetricLieAlgebra<Rational> direct_sum(const lts::SymmetricLieAlgebra<Rational>& a,
                                                     const lts::SymmetricLieAlgebra<Rational>& b) {
  Matrix<Rational> theta = Matrix<Rational>::Zero(a.dim() + b.dim(), a.dim() + b.dim());
  theta.topLeftCorner(a.dim(), a.dim()) = a.theta;
  theta.bottomRightCorner(b.dim(), b.dim()) = b.theta;
  return {lts::direct_sum(a.algebra, b.algebra), theta};
}

// Structured pool of symmetric Lie algebras, hidden behind a random rational
// change of basis so theta is no longer diagonal.
inline lts::SymmetricLieAlgebra<Rational> random_symmetric(Gen& gen) {
  namespace fx = lts::fixtures;
  using S = lts::SymmetricLieAlgebra<Rational>;
  auto pick = [&gen]() -> S {
    switch (gen.integer(0, 7)) {
      case 0: return fx::u_symmetric<Rational>(2);
      case 1: return fx::u_symmetric<Rational>(3);
      case 2: return fx::so_symmetric<Rational>(2);
      case 3: return fx::so_symmetric<Rational>(3);
      case 4: return fx::su2_symmetric<Rational>();
      case 5: return fx::heisenberg_symmetric<Rational>();
      case 6: return lts::flip_symmetric(fx::so_algebra<Rational>(3));
      default: return lts::flip_symmetric(fx::heisenberg_symmetric<Rational>().algebra);
    }
  };
  S s = pick();
  if (gen.integer(0, 3) == 0) {
    S t = pick();
    if (s.dim() + t.dim() <= 12) s = direct_sum(s, t);
  }
  return lts::change_basis(s, gen.invertible(s.dim()));
}

// Candidate subspaces of an LTS for ideal detection.
inline std::vector<lts::Subspace<Rational>> candidate_subspaces(const lts::LieTripleSystem<Rational>& m, Gen& gen) {
  using Sub = lts::Subspace<Rational>;
  const Index d = m.dim();
  std::vector<Sub> out{Sub::zero(d), Sub::whole(d), lts::center(m)};
  // [m, m, m]
  Matrix<Rational> derived(d, d * d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k) derived.col((i * d + j) * d + k) = m.bracket_basis(i, j, k);
  out.push_back(Sub::span(derived));
  for (int r = 0; r < 4 && d > 0; ++r) {
    const Index k = gen.integer(1, d);
    out.push_back(Sub::span(gen.rational_matrix(d, k)));
    Matrix<Rational> coord = Matrix<Rational>::Zero(d, k);
    for (Index c = 0; c < k; ++c) coord(gen.integer(0, d - 1), c) = 1;
    out.push_back(Sub::span(coord));
  }
  return out;
}

}  // namespace oracle
