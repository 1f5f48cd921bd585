#include "lts/fixtures.hpp"

namespace lts::fixtures {

namespace {

template <typename Scalar>
Matrix<Scalar> unit(Index n, Index k, Index l) {
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  m(k, l) = 1;
  return m;
}

template <typename Scalar>
Vector<Scalar> flatten(const Matrix<Scalar>& m) {
  return Eigen::Map<const Vector<Scalar>>(m.data(), m.size());
}

Matrix<double> conjugation(Index n) {
  Matrix<double> c = Matrix<double>::Identity(2 * n, 2 * n);
  c.bottomRightCorner(n, n) *= -1.0;
  return c;
}

}  // namespace

template <typename Scalar>
LieTripleSystem<Scalar> abelian(Index n) {
  return LieTripleSystem<Scalar>(n);
}

template <typename Scalar>
LieTripleSystem<Scalar> sphere(Index n) {
  LieTripleSystem<Scalar> m(n);
  // [e_i, e_j, e_k] = d_jk e_i - d_ik e_j
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      m.set_coeff(i, j, j, i, Scalar(1));
      m.set_coeff(i, j, i, j, Scalar(-1));
    }
  return m;
}

template <typename Scalar>
LieTripleSystem<Scalar> broken() {
  LieTripleSystem<Scalar> m(2);
  m.set_coeff(0, 0, 1, 1, Scalar(1));
  return m;
}

template <typename Scalar>
std::vector<Matrix<Scalar>> u_basis(Index n) {
  // A + iB -> [[A, -B], [B, A]]
  auto complex = [n](const Matrix<Scalar>& re, const Matrix<Scalar>& im) { return realify<Scalar>(re, im); };
  const Matrix<Scalar> zero = Matrix<Scalar>::Zero(n, n);
  std::vector<Matrix<Scalar>> out;
  for (Index k = 0; k < n; ++k) out.push_back(complex(zero, unit<Scalar>(n, k, k)));
  for (Index k = 0; k < n; ++k)
    for (Index l = k + 1; l < n; ++l)
      out.push_back(complex(zero, Matrix<Scalar>(unit<Scalar>(n, k, l) + unit<Scalar>(n, l, k))));
  for (Index k = 0; k < n; ++k)
    for (Index l = k + 1; l < n; ++l) out.push_back(complex(Matrix<Scalar>(unit<Scalar>(n, k, l) - unit<Scalar>(n, l, k)), zero));
  return out;
}

namespace {

std::vector<std::string> u_labels(Index n) {
  std::vector<std::string> out;
  for (Index k = 0; k < n; ++k) out.push_back("iE" + std::to_string(k) + std::to_string(k));
  for (Index k = 0; k < n; ++k)
    for (Index l = k + 1; l < n; ++l) out.push_back("iS" + std::to_string(k) + std::to_string(l));
  for (Index k = 0; k < n; ++k)
    for (Index l = k + 1; l < n; ++l) out.push_back("A" + std::to_string(k) + std::to_string(l));
  return out;
}

}  // namespace

template <typename Scalar>
LieAlgebra<Scalar> u_algebra(Index n) {
  return LieAlgebra<Scalar>::from_basis_matrices(u_basis<Scalar>(n), {}, u_labels(n));
}

template <typename Scalar>
SymmetricLieAlgebra<Scalar> u_symmetric(Index n) {
  const Index minus = n * (n + 1) / 2;
  Matrix<Scalar> theta = Matrix<Scalar>::Identity(n * n, n * n);
  for (Index i = 0; i < minus; ++i) theta(i, i) = -1;
  return SymmetricLieAlgebra<Scalar>{u_algebra<Scalar>(n), theta};
}

template <typename Scalar>
LieTripleSystem<Scalar> u_minus(Index n) {
  const Index d = n * (n + 1) / 2;
  const auto all = u_basis<Scalar>(n);
  std::vector<Matrix<Scalar>> m(all.begin(), all.begin() + d);
  Matrix<Scalar> flat(4 * n * n, d);
  for (Index a = 0; a < d; ++a) flat.col(a) = flatten<Scalar>(m[static_cast<std::size_t>(a)]);
  std::vector<Matrix<Scalar>> ops;
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) {
      const auto& x = m[static_cast<std::size_t>(a)];
      const auto& y = m[static_cast<std::size_t>(b)];
      const Matrix<Scalar> xy = x * y - y * x;
      Matrix<Scalar> images(4 * n * n, d);
      for (Index c = 0; c < d; ++c) {
        const auto& z = m[static_cast<std::size_t>(c)];
        images.col(c) = flatten<Scalar>(Matrix<Scalar>(xy * z - z * xy));
      }
      ops.push_back(coordinates_or_throw<Scalar>(flat, images, {}, "u_minus: [[x,y],z] left i Sym(n)"));
    }
  auto labels = u_labels(n);
  labels.resize(static_cast<std::size_t>(d));
  return LieTripleSystem<Scalar>(d, std::move(ops), std::move(labels));
}

Vector<double> u_center_direction(Index n) {
  Vector<double> v = Vector<double>::Zero(n * n);
  v.head(n).setOnes();
  return v;
}

template <typename Scalar>
Vector<Scalar> u_minus_center(Index n) {
  Vector<Scalar> v = Vector<Scalar>::Zero(n * (n + 1) / 2);
  for (Index k = 0; k < n; ++k) v(k) = 1;
  return v;
}

template <typename Scalar>
std::vector<Matrix<Scalar>> so_basis(Index n) {
  std::vector<Matrix<Scalar>> out;
  for (Index k = 0; k < n; ++k)
    for (Index l = k + 1; l < n; ++l) out.push_back(unit<Scalar>(n, k, l) - unit<Scalar>(n, l, k));
  return out;
}

template <typename Scalar>
LieAlgebra<Scalar> so_algebra(Index n) {
  std::vector<std::string> labels;
  for (Index k = 0; k < n; ++k)
    for (Index l = k + 1; l < n; ++l) labels.push_back("A" + std::to_string(k) + std::to_string(l));
  return LieAlgebra<Scalar>::from_basis_matrices(so_basis<Scalar>(n), {}, labels);
}

template <typename Scalar>
SymmetricLieAlgebra<Scalar> so_symmetric(Index n) {
  // E_kl - E_lk with l = n is odd under Ad(diag(1, ..., 1, -1)).
  const Index N = n + 1;
  SymmetricLieAlgebra<Scalar> s{so_algebra<Scalar>(N), Matrix<Scalar>::Identity(N * (N - 1) / 2, N * (N - 1) / 2)};
  Index idx = 0;
  for (Index k = 0; k < N; ++k)
    for (Index l = k + 1; l < N; ++l, ++idx)
      if (l == n) s.theta(idx, idx) = -1;
  return s;
}

template <typename Scalar>
SymmetricLieAlgebra<Scalar> su2_symmetric() {
  // Realified i diag(1,-1), [[0,1],[-1,0]], [[0,i],[i,0]].
  const Matrix<Scalar> zero = Matrix<Scalar>::Zero(2, 2);
  Matrix<Scalar> h = Matrix<Scalar>::Zero(2, 2);
  h(0, 0) = 1;
  h(1, 1) = -1;
  Matrix<Scalar> a = Matrix<Scalar>::Zero(2, 2);
  a(0, 1) = 1;
  a(1, 0) = -1;
  Matrix<Scalar> s = Matrix<Scalar>::Zero(2, 2);
  s(0, 1) = 1;
  s(1, 0) = 1;
  const std::vector<Matrix<Scalar>> basis{realify<Scalar>(zero, h), realify<Scalar>(a, zero), realify<Scalar>(zero, s)};
  Matrix<Scalar> theta = Matrix<Scalar>::Identity(3, 3);
  theta(1, 1) = -1;
  theta(2, 2) = -1;
  return SymmetricLieAlgebra<Scalar>{LieAlgebra<Scalar>::from_basis_matrices(basis, {}, {"H", "A", "S"}), theta};
}

template <typename Scalar>
SymmetricLieAlgebra<Scalar> heisenberg_symmetric() {
  LieAlgebra<Scalar> g(3, {"x", "y", "z"});
  g.set_coeff(0, 1, 2, Scalar(1));
  g.set_coeff(1, 0, 2, Scalar(-1));
  Matrix<Scalar> theta = Matrix<Scalar>::Identity(3, 3);
  theta(0, 0) = -1;
  theta(1, 1) = -1;
  return SymmetricLieAlgebra<Scalar>{g, theta};
}

MatrixSymmetricPair u_o_pair(Index n, FixedGroupPolicy policy, const Tolerance& tol) {
  return MatrixSymmetricPair("u" + std::to_string(n) + "_o" + std::to_string(n), 2 * n, u_basis<double>(n),
                             GroupInvolution::conjugation_by(conjugation(n)), policy, tol);
}

MatrixSymmetricPair u_plus_pair(Index n, const Tolerance& tol) {
  const auto base = u_basis<double>(n);
  std::vector<Matrix<double>> basis;
  for (int copy = 0; copy < 2; ++copy)
    for (const auto& b : base) {
      Matrix<double> m = Matrix<double>::Zero(4 * n, 4 * n);
      m.block(copy * 2 * n, copy * 2 * n, 2 * n, 2 * n) = b;
      basis.push_back(m);
    }
  Matrix<double> swap = Matrix<double>::Zero(4 * n, 4 * n);
  swap.topRightCorner(2 * n, 2 * n).setIdentity();
  swap.bottomLeftCorner(2 * n, 2 * n).setIdentity();
  return MatrixSymmetricPair("u" + std::to_string(n) + "_plus", 4 * n, std::move(basis),
                             GroupInvolution::conjugation_by(swap), FixedGroupPolicy::FullFixedGroup, tol);
}

Vector<double> u_plus_direction(Index n) {
  Vector<double> v = Vector<double>::Zero(2 * n * n);
  v.head(n).setConstant(0.5);
  v.segment(n * n, n).setConstant(-0.5);
  return v;
}

MatrixSymmetricPair so_pair(Index n, FixedGroupPolicy policy, const Tolerance& tol) {
  Matrix<double> j = Matrix<double>::Identity(n + 1, n + 1);
  j(n, n) = -1.0;
  return MatrixSymmetricPair("so" + std::to_string(n + 1) + "_so" + std::to_string(n), n + 1, so_basis<double>(n + 1),
                             GroupInvolution::conjugation_by(j), policy, tol);
}

std::vector<GalleryEntry> gallery() {
  using R = Rational;
  std::vector<GalleryEntry> out;
  auto lts = [&](std::string file, const LieTripleSystem<R>& m) {
    out.push_back({std::move(file), DocumentKind::Lts, to_json(m)});
  };
  auto la = [&](std::string file, const LieAlgebra<R>& g) {
    out.push_back({std::move(file), DocumentKind::LieAlgebra, to_json(g)});
  };
  auto sla = [&](std::string file, const SymmetricLieAlgebra<R>& s) {
    out.push_back({std::move(file), DocumentKind::SymmetricLieAlgebra, to_json(s)});
  };
  auto pair = [&](std::string file, const MatrixSymmetricPair& p, const Vector<double>& dir) {
    out.push_back({std::move(file), DocumentKind::Pair, to_json(p, dir)});
  };

  lts("abelian2.lts.json", abelian<R>(2));
  lts("abelian3.lts.json", abelian<R>(3));
  for (Index n = 2; n <= 4; ++n) lts("sphere" + std::to_string(n) + ".lts.json", sphere<R>(n));
  for (Index n = 2; n <= 4; ++n) lts("u" + std::to_string(n) + "_minus.lts.json", u_minus<R>(n));
  lts("heisenberg_plus.lts.json", g_plus(heisenberg_symmetric<R>().algebra));
  lts("u2_minus_loop_T4.lts.json", grid_path_system(u_minus<R>(2), 4, GridConstraint::LoopZeroAtBothEnds).system);
  lts("sphere3_path_T3.lts.json", grid_path_system(sphere<R>(3), 3, GridConstraint::PathZeroAtStart).system);
  lts("broken.lts.json", broken<R>());

  la("so3.la.json", so_algebra<R>(3));
  la("heisenberg.la.json", heisenberg_symmetric<R>().algebra);
  la("u2.la.json", u_algebra<R>(2));

  for (Index n = 2; n <= 4; ++n) sla("u" + std::to_string(n) + ".sla.json", u_symmetric<R>(n));
  sla("su2.sla.json", su2_symmetric<R>());
  sla("so3_so2.sla.json", so_symmetric<R>(2));
  sla("so4_so3.sla.json", so_symmetric<R>(3));
  sla("heisenberg.sla.json", heisenberg_symmetric<R>());
  sla("su2_flip.sla.json", flip_symmetric(su2_symmetric<R>().algebra));
  sla("heisenberg_flip.sla.json", flip_symmetric(heisenberg_symmetric<R>().algebra));

  for (Index n = 2; n <= 4; ++n)
    pair("u" + std::to_string(n) + "_o" + std::to_string(n) + ".pair.json", u_o_pair(n), u_center_direction(n));
  for (Index n = 2; n <= 3; ++n) pair("u" + std::to_string(n) + "_plus.pair.json", u_plus_pair(n), u_plus_direction(n));
  {
    // Unit velocity along E_02 - E_20.
    Vector<double> v = Vector<double>::Zero(3);
    v(1) = 1.0;
    pair("so3_so2.pair.json", so_pair(2), v);
    Vector<double> w = Vector<double>::Zero(6);
    w(2) = 1.0;
    pair("so4_so3.pair.json", so_pair(3), w);
  }
  return out;
}

#define LTS_INSTANTIATE(S)                                                  \
  template LieTripleSystem<S> abelian<S>(Index);                            \
  template LieTripleSystem<S> sphere<S>(Index);                             \
  template LieTripleSystem<S> broken<S>();                                  \
  template std::vector<Matrix<S>> u_basis<S>(Index);                        \
  template LieAlgebra<S> u_algebra<S>(Index);                               \
  template SymmetricLieAlgebra<S> u_symmetric<S>(Index);                    \
  template LieTripleSystem<S> u_minus<S>(Index);                            \
  template Vector<S> u_minus_center<S>(Index);                              \
  template std::vector<Matrix<S>> so_basis<S>(Index);                       \
  template LieAlgebra<S> so_algebra<S>(Index);                              \
  template SymmetricLieAlgebra<S> so_symmetric<S>(Index);                   \
  template SymmetricLieAlgebra<S> su2_symmetric<S>();                       \
  template SymmetricLieAlgebra<S> heisenberg_symmetric<S>();

LTS_INSTANTIATE(Rational)
LTS_INSTANTIATE(double)

#undef LTS_INSTANTIATE

}  // namespace lts::fixtures
