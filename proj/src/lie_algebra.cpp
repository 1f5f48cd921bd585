#include "lts/lie_algebra.hpp"

#include <algorithm>

namespace lts {

namespace {

std::vector<std::string> algebra_labels(Index dim, std::vector<std::string> labels) {
  if (labels.empty())
    for (Index i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  if (static_cast<Index>(labels.size()) != dim) throw DimensionMismatch("label count differs from dimension");
  return labels;
}

template <typename Scalar>
Vector<Scalar> flatten(const Matrix<Scalar>& m) {
  return Eigen::Map<const Vector<Scalar>>(m.data(), m.size());
}

template <typename Scalar>
Index cap_for(Index d) {
  return std::max(d, LieTripleSystem<Scalar>::default_max_dim);
}

}  // namespace

template <typename Scalar>
LieAlgebra<Scalar>::LieAlgebra(Index dim, std::vector<std::string> labels)
    : dim_(dim),
      ad_(static_cast<std::size_t>(dim), Matrix<Scalar>::Zero(dim, dim)),
      labels_(algebra_labels(dim, std::move(labels))) {}

template <typename Scalar>
LieAlgebra<Scalar>::LieAlgebra(Index dim, std::vector<Matrix<Scalar>> ad, std::vector<std::string> labels)
    : dim_(dim), ad_(std::move(ad)), labels_(algebra_labels(dim, std::move(labels))) {
  if (static_cast<Index>(ad_.size()) != dim) throw DimensionMismatch("expected one adjoint matrix per basis vector");
  for (const auto& a : ad_)
    if (a.rows() != dim || a.cols() != dim) throw DimensionMismatch("adjoint matrix has wrong shape");
}

template <typename Scalar>
LieAlgebra<Scalar> LieAlgebra<Scalar>::from_basis_matrices(const std::vector<Matrix<Scalar>>& basis,
                                                           const Tolerance& tol, std::vector<std::string> labels) {
  const Index k = static_cast<Index>(basis.size());
  if (k == 0) return LieAlgebra(0, std::move(labels));
  const Index n = basis[0].rows();
  Matrix<Scalar> flat(n * n, k);
  for (Index i = 0; i < k; ++i) {
    if (basis[static_cast<std::size_t>(i)].rows() != n || basis[static_cast<std::size_t>(i)].cols() != n)
      throw DimensionMismatch("basis matrices must share one square shape");
    flat.col(i) = flatten<Scalar>(basis[static_cast<std::size_t>(i)]);
  }
  if (rank<Scalar>(flat, tol) != k) throw std::domain_error("basis matrices are linearly dependent");
  std::vector<Matrix<Scalar>> ad(static_cast<std::size_t>(k), Matrix<Scalar>(k, k));
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) {
      const auto& a = basis[static_cast<std::size_t>(i)];
      const auto& b = basis[static_cast<std::size_t>(j)];
      const Matrix<Scalar> c = a * b - b * a;
      auto coords = coordinates<Scalar>(flat, flatten<Scalar>(c), tol);
      if (!coords) throw std::domain_error("basis span is not closed under the commutator");
      ad[static_cast<std::size_t>(i)].col(j) = *coords;
    }
  return LieAlgebra(k, std::move(ad), std::move(labels));
}

template <typename Scalar>
Matrix<Scalar> LieAlgebra<Scalar>::ad(const Vector<Scalar>& x) const {
  if (x.size() != dim_) throw DimensionMismatch("ad: vector length differs from dim");
  Matrix<Scalar> out = Matrix<Scalar>::Zero(dim_, dim_);
  for (Index i = 0; i < dim_; ++i)
    if (x(i) != 0) out += x(i) * ad(i);
  return out;
}

template <typename Scalar>
void LieAlgebra<Scalar>::set_coeff(Index i, Index j, Index k, const Scalar& value) {
  if (std::min({i, j, k}) < 0 || std::max({i, j, k}) >= dim_) throw std::out_of_range("set_coeff: index out of range");
  ad_[static_cast<std::size_t>(i)](k, j) = value;
}

template <typename Scalar>
bool LieAlgebra<Scalar>::operator==(const LieAlgebra& other) const {
  if (dim_ != other.dim_) return false;
  for (std::size_t i = 0; i < ad_.size(); ++i)
    if (ad_[i] != other.ad_[i]) return false;
  return true;
}

template <typename Scalar>
AxiomReport verify_lie(const LieAlgebra<Scalar>& g, const Tolerance& tol) {
  AxiomReport report;
  auto observe = [&](const Matrix<Scalar>& r, const char* identity, std::vector<Index> idx) {
    const double v = max_abs(r);
    const bool failed = !all_zero<Scalar>(r, tol.eq_tol);
    if (failed) report.ok = false;
    if (v > report.worst_violation) {
      report.worst_violation = v;
      if (failed) report.witness = AxiomWitness{identity, std::move(idx)};
    }
  };
  const Index d = g.dim();
  for (Index i = 0; i < d; ++i) {
    observe(g.ad(i).col(i), kLieAntisymmetry, {i, i});
    for (Index j = i + 1; j < d; ++j) observe(Matrix<Scalar>(g.ad(i).col(j) + g.ad(j).col(i)), kLieAntisymmetry, {i, j});
  }
  // Jacobi as ad[e_i, e_j] = [ad e_i, ad e_j]; column k is the triple (i, j, k).
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      const Matrix<Scalar> r = g.ad(Vector<Scalar>(g.ad(i).col(j))) - (g.ad(i) * g.ad(j) - g.ad(j) * g.ad(i));
      for (Index k = 0; k < d; ++k) observe(r.col(k), kJacobi, {i, j, k});
    }
  return report;
}

template <typename Scalar>
InvolutionReport check_involution(const SymmetricLieAlgebra<Scalar>& s, const Tolerance& tol) {
  InvolutionReport report;
  const Index d = s.dim();
  if (s.theta.rows() != d || s.theta.cols() != d) throw DimensionMismatch("theta has wrong shape");
  const Matrix<Scalar> sq = s.theta * s.theta - Matrix<Scalar>::Identity(d, d);
  report.worst_violation = max_abs(sq);
  report.involutive = all_zero<Scalar>(sq, tol.eq_tol);
  // theta ad(e_i) = ad(theta e_i) theta
  for (Index i = 0; i < d; ++i) {
    const Matrix<Scalar> r = s.theta * s.algebra.ad(i) - s.algebra.ad(Vector<Scalar>(s.theta.col(i))) * s.theta;
    report.worst_violation = std::max(report.worst_violation, max_abs(r));
    if (!all_zero<Scalar>(r, tol.eq_tol)) report.automorphism = false;
  }
  return report;
}

template <typename Scalar>
EigenSplit<Scalar> eigensplit(const SymmetricLieAlgebra<Scalar>& s, const Tolerance& tol) {
  const Index d = s.dim();
  if (s.theta.rows() != d || s.theta.cols() != d) throw DimensionMismatch("theta has wrong shape");
  if (!all_zero<Scalar>(Matrix<Scalar>(s.theta * s.theta - Matrix<Scalar>::Identity(d, d)), tol.eq_tol))
    throw InvolutionDefect("theta^2 differs from the identity");
  const Matrix<Scalar> I = Matrix<Scalar>::Identity(d, d);
  const Scalar half = ratio<Scalar>(1, 2);
  EigenSplit<Scalar> split{Subspace<Scalar>::span(Matrix<Scalar>(half * (I + s.theta)), tol),
                           Subspace<Scalar>::span(Matrix<Scalar>(half * (I - s.theta)), tol)};
  if (split.plus.dim() + split.minus.dim() != d) throw InvolutionDefect("eigenspaces do not span the algebra");
  for (Index a = 0; a < split.plus.dim(); ++a)
    for (Index b = a + 1; b < split.plus.dim(); ++b)
      if (!split.plus.contains(s.algebra.bracket(split.plus.basis.col(a), split.plus.basis.col(b)), tol))
        throw ClosureDefect("the +1 eigenspace is not a subalgebra");
  return split;
}

template <typename Scalar>
LieTripleSystem<Scalar> triple_from_involution(const SymmetricLieAlgebra<Scalar>& s, const Tolerance& tol) {
  const EigenSplit<Scalar> split = eigensplit(s, tol);
  const Matrix<Scalar>& M = split.minus.basis;
  const Index d = M.cols();
  std::vector<Matrix<Scalar>> ops;
  ops.reserve(static_cast<std::size_t>(d * d));
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b) {
      const Vector<Scalar> xy = s.algebra.bracket(M.col(a), M.col(b));
      const Matrix<Scalar> image = s.algebra.ad(xy) * M;
      try {
        ops.push_back(coordinates_or_throw<Scalar>(M, image, tol, "[[m,m],m] leaves the minus eigenspace"));
      } catch (const std::domain_error& e) {
        throw ClosureDefect(e.what());
      }
    }
  std::vector<std::string> labels;
  for (Index a = 0; a < d; ++a) {
    Index lead = 0;
    while (lead < M.rows() && M(lead, a) == 0) ++lead;
    labels.push_back("-" + s.algebra.labels()[static_cast<std::size_t>(std::min(lead, M.rows() - 1))]);
  }
  return LieTripleSystem<Scalar>(d, std::move(ops), std::move(labels), cap_for<Scalar>(d));
}

template <typename Scalar>
LieTripleSystem<Scalar> g_plus(const LieAlgebra<Scalar>& g) {
  const Index d = g.dim();
  const Scalar quarter = ratio<Scalar>(1, 4);
  std::vector<Matrix<Scalar>> ops;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) ops.push_back(quarter * g.ad(Vector<Scalar>(g.ad(i).col(j))));
  return LieTripleSystem<Scalar>(d, std::move(ops), g.labels(), cap_for<Scalar>(d));
}

template <typename Scalar>
Subspace<Scalar> lie_center(const LieAlgebra<Scalar>& g, const Tolerance& tol) {
  const Index d = g.dim();
  if (d == 0) return Subspace<Scalar>::zero(0);
  Matrix<Scalar> stacked(d * d, d);
  for (Index j = 0; j < d; ++j)
    for (Index i = 0; i < d; ++i) stacked.block(j * d, i, d, 1) = g.ad(i).col(j);
  return Subspace<Scalar>{d, nullspace<Scalar>(stacked, tol)};
}

template <typename Scalar>
Subspace<Scalar> lie_center(const SymmetricLieAlgebra<Scalar>& s, const Tolerance& tol) {
  Subspace<Scalar> z = lie_center(s.algebra, tol);
  if (!z.contains_all(Matrix<Scalar>(s.theta * z.basis), tol))
    throw std::logic_error("lie_center: center is not theta-invariant");
  return z;
}

template <typename Scalar>
Subspace<Scalar> minus_part(const SymmetricLieAlgebra<Scalar>& s, const Subspace<Scalar>& v, const Tolerance& tol) {
  const Index d = s.dim();
  const Matrix<Scalar> proj = ratio<Scalar>(1, 2) * (Matrix<Scalar>::Identity(d, d) - s.theta);
  return Subspace<Scalar>::span(Matrix<Scalar>(proj * v.basis), tol);
}

template <typename Scalar>
Subspace<Scalar> to_minus_coordinates(const EigenSplit<Scalar>& split, const Subspace<Scalar>& v,
                                      const Tolerance& tol) {
  return Subspace<Scalar>{split.minus.dim(), coordinates_or_throw<Scalar>(split.minus.basis, v.basis, tol,
                                                                           "subspace leaves the minus eigenspace")};
}

template <typename Scalar>
StandardEmbedding<Scalar> standard_embedding(const LieTripleSystem<Scalar>& m, const Tolerance& tol) {
  const AxiomReport axioms = verify_axioms(m, tol);
  if (!axioms.ok) throw AxiomDefect("standard_embedding: input fails " + axioms.witness->identity);
  const Index d = m.dim();

  // Greedy selection of L_{e_i,e_j} in lexicographic (i, j) order.
  Matrix<Scalar> flat(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) flat.col(i * d + j) = flatten<Scalar>(m.op(i, j));
  std::vector<Index> picked;
  const Matrix<Scalar> hflat = span_basis<Scalar>(flat, tol, &picked);
  const Index p = hflat.cols();

  StandardEmbedding<Scalar> out;
  for (Index c : picked) {
    out.h_basis.push_back(m.op(c / d, c % d));
    out.h_pairs.emplace_back(c / d, c % d);
  }

  auto h_coords = [&](const Matrix<Scalar>& op) {
    auto c = coordinates<Scalar>(hflat, flatten<Scalar>(op), tol);
    if (!c) throw AxiomDefect("standard_embedding: operator span is not closed");
    return *c;
  };

  const Index n = p + d;
  std::vector<Matrix<Scalar>> ad(static_cast<std::size_t>(n), Matrix<Scalar>::Zero(n, n));
  for (Index a = 0; a < p; ++a) {
    const Matrix<Scalar>& A = out.h_basis[static_cast<std::size_t>(a)];
    for (Index b = 0; b < p; ++b) {
      const Matrix<Scalar>& B = out.h_basis[static_cast<std::size_t>(b)];
      ad[static_cast<std::size_t>(a)].col(b).head(p) = h_coords(Matrix<Scalar>(A * B - B * A));
    }
    // [A, x] = A x
    ad[static_cast<std::size_t>(a)].block(p, p, d, d) = A;
  }
  for (Index i = 0; i < d; ++i) {
    Matrix<Scalar>& adx = ad[static_cast<std::size_t>(p + i)];
    // [x, A] = -A x
    for (Index b = 0; b < p; ++b) adx.col(b).tail(d) = -out.h_basis[static_cast<std::size_t>(b)].col(i);
    // [x, y] = L_{x,y}
    for (Index j = 0; j < d; ++j) adx.col(p + j).head(p) = h_coords(m.op(i, j));
  }

  std::vector<std::string> labels;
  for (auto [i, j] : out.h_pairs)
    labels.push_back("L(" + m.labels()[static_cast<std::size_t>(i)] + "," + m.labels()[static_cast<std::size_t>(j)] + ")");
  for (const auto& l : m.labels()) labels.push_back(l);

  out.algebra.algebra = LieAlgebra<Scalar>(n, std::move(ad), std::move(labels));
  out.algebra.theta = Matrix<Scalar>::Identity(n, n);
  for (Index i = p; i < n; ++i) out.algebra.theta(i, i) = -1;
  out.embedding = Matrix<Scalar>::Zero(n, d);
  out.embedding.bottomRows(d) = Matrix<Scalar>::Identity(d, d);
  return out;
}

template <typename Scalar>
LieAlgebra<Scalar> direct_sum(const LieAlgebra<Scalar>& a, const LieAlgebra<Scalar>& b) {
  const Index da = a.dim();
  const Index n = da + b.dim();
  std::vector<Matrix<Scalar>> ad(static_cast<std::size_t>(n), Matrix<Scalar>::Zero(n, n));
  for (Index i = 0; i < da; ++i) ad[static_cast<std::size_t>(i)].topLeftCorner(da, da) = a.ad(i);
  for (Index i = 0; i < b.dim(); ++i) ad[static_cast<std::size_t>(da + i)].bottomRightCorner(b.dim(), b.dim()) = b.ad(i);
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("1." + l);
  for (const auto& l : b.labels()) labels.push_back("2." + l);
  return LieAlgebra<Scalar>(n, std::move(ad), std::move(labels));
}

template <typename Scalar>
SymmetricLieAlgebra<Scalar> flip_symmetric(const LieAlgebra<Scalar>& g) {
  const Index d = g.dim();
  Matrix<Scalar> swap = Matrix<Scalar>::Zero(2 * d, 2 * d);
  swap.topRightCorner(d, d) = Matrix<Scalar>::Identity(d, d);
  swap.bottomLeftCorner(d, d) = Matrix<Scalar>::Identity(d, d);
  return SymmetricLieAlgebra<Scalar>{direct_sum(g, g), swap};
}

template <typename Scalar>
LtsMorphism<Scalar> flip_isomorphism(const LieAlgebra<Scalar>& g, const Tolerance& tol) {
  const auto flip = flip_symmetric(g);
  const auto split = eigensplit(flip, tol);
  const Index d = g.dim();
  // Minus basis vectors have the form (x, -x); Phi sends them to 2x.
  const Matrix<Scalar> phi = Scalar(2) * split.minus.basis.topRows(d);
  return certify_morphism(LtsMorphism<Scalar>(triple_from_involution(flip, tol), g_plus(g), phi), tol);
}

template <typename Scalar>
SymmetricLieAlgebra<Scalar> change_basis(const SymmetricLieAlgebra<Scalar>& s, const Matrix<Scalar>& p,
                                         const Tolerance& tol) {
  const Index d = s.dim();
  const Matrix<Scalar> pinv =
      coordinates_or_throw<Scalar>(p, Matrix<Scalar>::Identity(d, d), tol, "change_basis: matrix is singular");
  std::vector<Matrix<Scalar>> ad;
  for (Index i = 0; i < d; ++i) ad.push_back(pinv * s.algebra.ad(Vector<Scalar>(p.col(i))) * p);
  return SymmetricLieAlgebra<Scalar>{LieAlgebra<Scalar>(d, std::move(ad)), pinv * s.theta * p};
}

LieAlgebra<double> to_float(const LieAlgebra<Rational>& g) {
  std::vector<Matrix<double>> ad;
  for (Index i = 0; i < g.dim(); ++i) ad.push_back(to_double_matrix(g.ad(i)));
  return LieAlgebra<double>(g.dim(), std::move(ad), g.labels());
}

SymmetricLieAlgebra<double> to_float(const SymmetricLieAlgebra<Rational>& s) {
  return SymmetricLieAlgebra<double>{to_float(s.algebra), to_double_matrix(s.theta)};
}

#define LTS_INSTANTIATE(S)                                                                                   \
  template class LieAlgebra<S>;                                                                              \
  template AxiomReport verify_lie(const LieAlgebra<S>&, const Tolerance&);                                   \
  template InvolutionReport check_involution(const SymmetricLieAlgebra<S>&, const Tolerance&);               \
  template EigenSplit<S> eigensplit(const SymmetricLieAlgebra<S>&, const Tolerance&);                        \
  template LieTripleSystem<S> triple_from_involution(const SymmetricLieAlgebra<S>&, const Tolerance&);       \
  template LieTripleSystem<S> g_plus(const LieAlgebra<S>&);                                                  \
  template Subspace<S> lie_center(const LieAlgebra<S>&, const Tolerance&);                                   \
  template Subspace<S> lie_center(const SymmetricLieAlgebra<S>&, const Tolerance&);                          \
  template Subspace<S> minus_part(const SymmetricLieAlgebra<S>&, const Subspace<S>&, const Tolerance&);      \
  template Subspace<S> to_minus_coordinates(const EigenSplit<S>&, const Subspace<S>&, const Tolerance&);     \
  template StandardEmbedding<S> standard_embedding(const LieTripleSystem<S>&, const Tolerance&);             \
  template LieAlgebra<S> direct_sum(const LieAlgebra<S>&, const LieAlgebra<S>&);                             \
  template SymmetricLieAlgebra<S> flip_symmetric(const LieAlgebra<S>&);                                      \
  template LtsMorphism<S> flip_isomorphism(const LieAlgebra<S>&, const Tolerance&);                          \
  template SymmetricLieAlgebra<S> change_basis(const SymmetricLieAlgebra<S>&, const Matrix<S>&, const Tolerance&);

LTS_INSTANTIATE(Rational)
LTS_INSTANTIATE(double)

#undef LTS_INSTANTIATE

}  // namespace lts
