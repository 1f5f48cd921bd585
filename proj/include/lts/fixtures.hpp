#pragma once

#include "lts/io.hpp"

namespace lts::fixtures {

// [x,y,z] = 0 on R^n.
template <typename Scalar>
LieTripleSystem<Scalar> abelian(Index n);

// [x,y,z] = <y,z> x - <x,z> y on R^n.
template <typename Scalar>
LieTripleSystem<Scalar> sphere(Index n);

// Only c[0][0][1][1] = 1; fails [x,x,y] = 0.
template <typename Scalar>
LieTripleSystem<Scalar> broken();

// Realified basis of u(n) as 2n x 2n matrices, in the order
//   i E_kk (k < n), i (E_kl + E_lk) (k < l), E_kl - E_lk (k < l).
// The first n(n+1)/2 span i Sym(n), the rest o(n).
template <typename Scalar>
std::vector<Matrix<Scalar>> u_basis(Index n);

template <typename Scalar>
LieAlgebra<Scalar> u_algebra(Index n);

// u(n) with theta(X) = C X C, C = diag(I_n, -I_n) (complex conjugation).
template <typename Scalar>
SymmetricLieAlgebra<Scalar> u_symmetric(Index n);

// u(n)_- = i Sym(n) with [[x,y],z], computed from matrix commutators in the
// basis i E_kk, i (E_kl + E_lk).
template <typename Scalar>
LieTripleSystem<Scalar> u_minus(Index n);

// i I_n in u_basis coefficients (length n^2) and in u_minus coordinates.
Vector<double> u_center_direction(Index n);
template <typename Scalar>
Vector<Scalar> u_minus_center(Index n);

// E_kl - E_lk for k < l, lexicographic.
template <typename Scalar>
std::vector<Matrix<Scalar>> so_basis(Index n);

template <typename Scalar>
LieAlgebra<Scalar> so_algebra(Index n);

// so(n+1) with theta = Ad(diag(1, ..., 1, -1)); the minus part is the sphere.
template <typename Scalar>
SymmetricLieAlgebra<Scalar> so_symmetric(Index n);

// su(2) with theta = Ad(diag(1, -1)).
template <typename Scalar>
SymmetricLieAlgebra<Scalar> su2_symmetric();

// [e0, e1] = e2 with theta = diag(-1, -1, 1).
template <typename Scalar>
SymmetricLieAlgebra<Scalar> heisenberg_symmetric();

// U(n)/O(n) realified; sigma is conjugation by C = diag(I_n, -I_n).
MatrixSymmetricPair u_o_pair(Index n, FixedGroupPolicy policy = FixedGroupPolicy::FullFixedGroup,
                             const Tolerance& tol = {});

// U(n) as a symmetric space: (U(n) x U(n)) / diagonal with the swap.
MatrixSymmetricPair u_plus_pair(Index n, const Tolerance& tol = {});
// (i I_n / 2, -i I_n / 2): its image in U(n)^+ is exp(t i I_n).
Vector<double> u_plus_direction(Index n);

// SO(n+1)/SO(n) with sigma = Ad(diag(1, ..., 1, -1)).
MatrixSymmetricPair so_pair(Index n, FixedGroupPolicy policy = FixedGroupPolicy::IdentityComponentHeuristic,
                            const Tolerance& tol = {});

struct GalleryEntry {
  std::string file;
  DocumentKind kind;
  json document;
};

// Everything shipped under fixtures/.
std::vector<GalleryEntry> gallery();

}  // namespace lts::fixtures
