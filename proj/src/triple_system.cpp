#include "lts/triple_system.hpp"

#include <algorithm>

namespace lts {

namespace {

std::vector<std::string> default_labels(Index dim, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (Index i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (static_cast<Index>(labels.size()) != dim) throw DimensionMismatch("label count differs from dimension");
  return labels;
}

void check_dim(Index dim, Index max_dim) {
  if (dim < 0) throw std::invalid_argument("dimension must be non-negative");
  if (dim > max_dim)
    throw std::invalid_argument("dimension " + std::to_string(dim) + " exceeds the configured cap " +
                                std::to_string(max_dim));
}

// Tracks the worst violation over a sweep and the tuple that produced it.
struct ViolationTracker {
  double tol;
  bool exact;
  AxiomReport report;

  template <typename Derived>
  void observe(const Eigen::MatrixBase<Derived>& residual, const char* identity, std::vector<Index> indices) {
    const double v = max_abs(residual);
    bool failed;
    if (exact) {
      failed = false;
      for (Index i = 0; i < residual.size(); ++i)
        if (residual(i) != 0) failed = true;
    } else {
      failed = v > tol;
    }
    if (failed) report.ok = false;
    if (v > report.worst_violation) {
      report.worst_violation = v;
      if (failed) report.witness = AxiomWitness{identity, std::move(indices)};
    }
  }
};

}  // namespace

template <typename Scalar>
LieTripleSystem<Scalar>::LieTripleSystem(Index dim, std::vector<std::string> labels, Index max_dim) {
  check_dim(dim, max_dim);
  dim_ = dim;
  ops_.assign(static_cast<std::size_t>(dim * dim), Matrix<Scalar>::Zero(dim, dim));
  labels_ = default_labels(dim, std::move(labels));
}

template <typename Scalar>
LieTripleSystem<Scalar>::LieTripleSystem(Index dim, std::vector<Matrix<Scalar>> ops,
                                         std::vector<std::string> labels, Index max_dim) {
  check_dim(dim, max_dim);
  if (static_cast<Index>(ops.size()) != dim * dim) throw DimensionMismatch("expected dim*dim operators");
  for (const auto& o : ops)
    if (o.rows() != dim || o.cols() != dim) throw DimensionMismatch("operator has wrong shape");
  dim_ = dim;
  ops_ = std::move(ops);
  labels_ = default_labels(dim, std::move(labels));
}

template <typename Scalar>
Matrix<Scalar> LieTripleSystem<Scalar>::op(const Vector<Scalar>& x, const Vector<Scalar>& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("op: vector length differs from dim");
  Matrix<Scalar> out = Matrix<Scalar>::Zero(dim_, dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (x(i) == 0) continue;
    for (Index j = 0; j < dim_; ++j) {
      if (y(j) == 0) continue;
      out += (x(i) * y(j)) * op(i, j);
    }
  }
  return out;
}

template <typename Scalar>
void LieTripleSystem<Scalar>::set_coeff(Index i, Index j, Index k, Index l, const Scalar& value) {
  if (std::min({i, j, k, l}) < 0 || std::max({i, j, k, l}) >= dim_)
    throw std::out_of_range("set_coeff: index out of range");
  ops_[static_cast<std::size_t>(i * dim_ + j)](l, k) = value;
}

template <typename Scalar>
Vector<Scalar> LieTripleSystem<Scalar>::bracket(const Vector<Scalar>& x, const Vector<Scalar>& y,
                                                const Vector<Scalar>& z) const {
  if (z.size() != dim_) throw DimensionMismatch("bracket: vector length differs from dim");
  return op(x, y) * z;
}

template <typename Scalar>
bool LieTripleSystem<Scalar>::operator==(const LieTripleSystem& other) const {
  if (dim_ != other.dim_) return false;
  for (std::size_t k = 0; k < ops_.size(); ++k)
    if (ops_[k] != other.ops_[k]) return false;
  return true;
}

LieTripleSystem<double> to_float(const LieTripleSystem<Rational>& m) {
  std::vector<Matrix<double>> ops;
  for (Index i = 0; i < m.dim(); ++i)
    for (Index j = 0; j < m.dim(); ++j) ops.push_back(to_double_matrix(m.op(i, j)));
  return LieTripleSystem<double>(m.dim(), std::move(ops), m.labels(), std::max(m.dim(), Index{1}));
}

// ---------------------------------------------------------------------------
// Subspace

template <typename Scalar>
bool Subspace<Scalar>::contains(const Vector<Scalar>& v, const Tolerance& tol) const {
  if (v.size() != parent_dim) throw DimensionMismatch("subspace membership: wrong vector length");
  // Float mode treats vectors below eq_tol in every entry as zero, so
  // rounding noise from brackets of central elements stays inside.
  if (all_zero<Scalar>(Matrix<Scalar>(v), tol.eq_tol)) return true;
  if (basis.cols() == 0) return false;
  return coordinates<Scalar>(basis, v, tol).has_value();
}

template <typename Scalar>
bool Subspace<Scalar>::contains_all(const Matrix<Scalar>& vectors, const Tolerance& tol) const {
  for (Index j = 0; j < vectors.cols(); ++j)
    if (!contains(vectors.col(j), tol)) return false;
  return true;
}

template <typename Scalar>
Subspace<Scalar> Subspace<Scalar>::zero(Index parent_dim) {
  return Subspace{parent_dim, Matrix<Scalar>(parent_dim, 0)};
}

template <typename Scalar>
Subspace<Scalar> Subspace<Scalar>::whole(Index parent_dim) {
  return Subspace{parent_dim, Matrix<Scalar>::Identity(parent_dim, parent_dim)};
}

template <typename Scalar>
Subspace<Scalar> Subspace<Scalar>::span(const Matrix<Scalar>& vectors, const Tolerance& tol) {
  return Subspace{vectors.rows(), span_basis<Scalar>(vectors, tol)};
}

template <typename Scalar>
bool same_subspace(const Subspace<Scalar>& a, const Subspace<Scalar>& b, const Tolerance& tol) {
  if (a.parent_dim != b.parent_dim) return false;
  if (a.dim() != b.dim()) return false;
  return a.contains_all(b.basis, tol) && b.contains_all(a.basis, tol);
}

// ---------------------------------------------------------------------------
// Axioms

template <typename Scalar>
AxiomReport verify_axioms(const LieTripleSystem<Scalar>& m, const Tolerance& tol) {
  const Index d = m.dim();
  ViolationTracker t{tol.eq_tol, is_exact_v<Scalar>, {}};

  // Antisymmetry, polarized: L_ii = 0 and L_ij + L_ji = 0.
  for (Index i = 0; i < d; ++i)
    for (Index k = 0; k < d; ++k) t.observe(m.op(i, i).col(k), kAntisymmetry, {i, i, k});
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j)
      for (Index k = 0; k < d; ++k) {
        const Vector<Scalar> r = m.op(i, j).col(k) + m.op(j, i).col(k);
        t.observe(r, kAntisymmetry, {i, j, k});
      }

  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k) {
        const Vector<Scalar> r = m.op(i, j).col(k) + m.op(j, k).col(i) + m.op(k, i).col(j);
        t.observe(r, kCyclic, {i, j, k});
      }

  // Derivation identity in operator form, column w of
  //   [D, L_ab] - L(D e_a, e_b) - L(e_a, D e_b),  D = L_ij.
  // D_ji = -D_ij once antisymmetry holds, so i < j suffices.
  auto combo_left = [&](const Vector<Scalar>& u, Index b) {
    Matrix<Scalar> out = Matrix<Scalar>::Zero(d, d);
    for (Index p = 0; p < d; ++p)
      if (u(p) != 0) out += u(p) * m.op(p, b);
    return out;
  };
  auto combo_right = [&](Index a, const Vector<Scalar>& u) {
    Matrix<Scalar> out = Matrix<Scalar>::Zero(d, d);
    for (Index p = 0; p < d; ++p)
      if (u(p) != 0) out += u(p) * m.op(a, p);
    return out;
  };
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      const Matrix<Scalar>& D = m.op(i, j);
      if (all_zero<Scalar>(D, 0.0)) continue;
      for (Index a = 0; a < d; ++a)
        for (Index b = 0; b < d; ++b) {
          const Matrix<Scalar> r =
              D * m.op(a, b) - m.op(a, b) * D - combo_left(D.col(a), b) - combo_right(a, D.col(b));
          for (Index w = 0; w < d; ++w) t.observe(r.col(w), kDerivation, {i, j, a, b, w});
        }
    }
  return t.report;
}

// ---------------------------------------------------------------------------
// Center, subsystems, ideals

template <typename Scalar>
Subspace<Scalar> center(const LieTripleSystem<Scalar>& m, const Tolerance& tol) {
  const Index d = m.dim();
  if (d == 0) return Subspace<Scalar>::zero(0);
  // Row block (j, k) holds the map x -> [x, e_j, e_k].
  Matrix<Scalar> stacked(d * d * d, d);
  for (Index j = 0; j < d; ++j)
    for (Index k = 0; k < d; ++k)
      for (Index i = 0; i < d; ++i) stacked.block((j * d + k) * d, i, d, 1) = m.op(i, j).col(k);
  Subspace<Scalar> z{d, nullspace<Scalar>(stacked, tol)};

  const double lat_tol = tol.eq_tol * std::max(1.0, max_abs(stacked));
  for (Index c = 0; c < z.dim(); ++c) {
    const Vector<Scalar> v = z.basis.col(c);
    for (Index a = 0; a < d; ++a) {
      const Vector<Scalar> ea = Vector<Scalar>::Unit(d, a);
      if (!all_zero<Scalar>(m.op(ea, v), lat_tol))
        throw std::logic_error("center: [m, z, m] does not vanish");
      for (Index b = 0; b < d; ++b)
        if (!all_zero<Scalar>(Matrix<Scalar>(m.op(a, b) * v), lat_tol))
          throw std::logic_error("center: [m, m, z] does not vanish");
    }
  }
  return z;
}

template <typename Scalar>
bool is_subsystem(const LieTripleSystem<Scalar>& m, const Subspace<Scalar>& n, const Tolerance& tol) {
  if (n.parent_dim != m.dim()) throw DimensionMismatch("is_subsystem: subspace lives in another space");
  const Index r = n.dim();
  for (Index a = 0; a < r; ++a)
    for (Index b = 0; b < r; ++b) {
      const Matrix<Scalar> L = m.op(n.basis.col(a), n.basis.col(b));
      if (!n.contains_all(L * n.basis, tol)) return false;
    }
  return true;
}

namespace {

// [n, m, m] in n  (slot 0), [m, n, m] (slot 1), [m, m, n] (slot 2).
template <typename Scalar>
bool ideal_slot(const LieTripleSystem<Scalar>& m, const Subspace<Scalar>& n, int slot, const Tolerance& tol) {
  const Index d = m.dim();
  for (Index c = 0; c < n.dim(); ++c) {
    const Vector<Scalar> v = n.basis.col(c);
    for (Index a = 0; a < d; ++a) {
      const Vector<Scalar> ea = Vector<Scalar>::Unit(d, a);
      if (slot == 2) {
        for (Index b = 0; b < d; ++b)
          if (!n.contains(m.op(a, b) * v, tol)) return false;
        continue;
      }
      const Matrix<Scalar> L = slot == 0 ? m.op(v, ea) : m.op(ea, v);
      if (!n.contains_all(L, tol)) return false;
    }
  }
  return true;
}

}  // namespace

template <typename Scalar>
bool is_ideal(const LieTripleSystem<Scalar>& m, const Subspace<Scalar>& n, const Tolerance& tol) {
  if (n.parent_dim != m.dim()) throw DimensionMismatch("is_ideal: subspace lives in another space");
  if (!ideal_slot(m, n, 0, tol)) return false;
  if (!ideal_slot(m, n, 1, tol) || !ideal_slot(m, n, 2, tol))
    throw std::logic_error("is_ideal: [n,m,m] in n but the other two slots leave n; the bracket is not an LTS");
  return true;
}

// ---------------------------------------------------------------------------
// Morphisms

template <typename Scalar>
LtsMorphism<Scalar>::LtsMorphism(LieTripleSystem<Scalar> source, LieTripleSystem<Scalar> target,
                                 Matrix<Scalar> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw DimensionMismatch("morphism matrix shape does not match source/target dimensions");
}

template <typename Scalar>
LtsMorphism<Scalar> certify_morphism(const LtsMorphism<Scalar>& f, const Tolerance& tol) {
  LtsMorphism<Scalar> out = f;
  const auto& A = f.matrix();
  const Index d = f.source().dim();
  double worst = 0.0;
  bool ok = true;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const Matrix<Scalar> lhs = A * f.source().op(i, j);
      const Matrix<Scalar> rhs = f.target().op(A.col(i), A.col(j)) * A;
      const Matrix<Scalar> r = lhs - rhs;
      worst = std::max(worst, max_abs(r));
      if (!all_zero<Scalar>(r, tol.eq_tol)) ok = false;
    }
  out.certified_ = ok;
  out.defect_ = worst;
  return out;
}

// ---------------------------------------------------------------------------
// Quotients, restrictions, products

template <typename Scalar>
QuotientResult<Scalar> quotient(const LieTripleSystem<Scalar>& m, const Subspace<Scalar>& n, const Tolerance& tol) {
  if (!is_ideal(m, n, tol)) throw NotAnIdeal("quotient: subspace is not an ideal");
  const Index d = m.dim();
  const Index r = n.dim();
  Matrix<Scalar> candidates(d, r + d);
  candidates << n.basis, Matrix<Scalar>::Identity(d, d);
  const Matrix<Scalar> full = span_basis<Scalar>(candidates, tol);
  if (full.cols() != d) throw std::logic_error("quotient: complement extension failed");
  const Matrix<Scalar> complement = full.rightCols(d - r);
  const Matrix<Scalar> inv = coordinates_or_throw<Scalar>(full, Matrix<Scalar>::Identity(d, d), tol,
                                                          "quotient: basis extension is singular");
  const Matrix<Scalar> P = inv.bottomRows(d - r);

  const Index q = d - r;
  std::vector<std::string> labels;
  for (Index c = 0; c < q; ++c) {
    Index std_index = 0;
    for (Index i = 0; i < d; ++i)
      if (complement(i, c) != 0) std_index = i;
    labels.push_back("[" + m.labels()[static_cast<std::size_t>(std_index)] + "]");
  }
  std::vector<Matrix<Scalar>> ops;
  for (Index a = 0; a < q; ++a)
    for (Index b = 0; b < q; ++b)
      ops.push_back(P * m.op(complement.col(a), complement.col(b)) * complement);
  LieTripleSystem<Scalar> sys(q, std::move(ops), std::move(labels), std::max<Index>(q, 1));
  auto proj = certify_morphism(LtsMorphism<Scalar>(m, sys, P), tol);
  if (!proj.certified()) throw std::logic_error("quotient: projection is not a morphism");
  return QuotientResult<Scalar>{std::move(sys), std::move(proj), complement};
}

template <typename Scalar>
LieTripleSystem<Scalar> restrict_to(const LieTripleSystem<Scalar>& m, const Subspace<Scalar>& n,
                                    const Tolerance& tol) {
  const Index r = n.dim();
  std::vector<Matrix<Scalar>> ops;
  for (Index a = 0; a < r; ++a)
    for (Index b = 0; b < r; ++b)
      ops.push_back(coordinates_or_throw<Scalar>(n.basis, m.op(n.basis.col(a), n.basis.col(b)) * n.basis, tol,
                                                 "restrict_to: subspace is not a subsystem"));
  return LieTripleSystem<Scalar>(r, std::move(ops), {}, std::max<Index>(r, 1));
}

template <typename Scalar>
LieTripleSystem<Scalar> direct_product(const LieTripleSystem<Scalar>& a, const LieTripleSystem<Scalar>& b) {
  const Index da = a.dim();
  const Index db = b.dim();
  const Index d = da + db;
  std::vector<Matrix<Scalar>> ops(static_cast<std::size_t>(d * d), Matrix<Scalar>::Zero(d, d));
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j) ops[static_cast<std::size_t>(i * d + j)].topLeftCorner(da, da) = a.op(i, j);
  for (Index i = 0; i < db; ++i)
    for (Index j = 0; j < db; ++j)
      ops[static_cast<std::size_t>((da + i) * d + da + j)].bottomRightCorner(db, db) = b.op(i, j);
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("1." + l);
  for (const auto& l : b.labels()) labels.push_back("2." + l);
  return LieTripleSystem<Scalar>(d, std::move(ops), std::move(labels), std::max<Index>(d, 1));
}

template <typename Scalar>
Subspace<Scalar> direct_sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(a.parent_dim + b.parent_dim, a.dim() + b.dim());
  basis.topLeftCorner(a.parent_dim, a.dim()) = a.basis;
  basis.bottomRightCorner(b.parent_dim, b.dim()) = b.basis;
  return Subspace<Scalar>{a.parent_dim + b.parent_dim, basis};
}

// ---------------------------------------------------------------------------
// Grid surrogates

template <typename Scalar>
GridPathSystem<Scalar> grid_path_system(const LieTripleSystem<Scalar>& base, Index T, GridConstraint constraint) {
  const bool loop = constraint == GridConstraint::LoopZeroAtBothEnds;
  if (T < 2 || (loop && T < 3))
    throw std::invalid_argument(loop ? "grid loop needs T >= 3" : "grid path needs T >= 2");
  GridPathSystem<Scalar> g{base, T, constraint, {}};
  const Index nodes = g.free_nodes();
  const Index bd = base.dim();
  const Index d = nodes * bd;
  std::vector<Matrix<Scalar>> ops(static_cast<std::size_t>(d * d), Matrix<Scalar>::Zero(d, d));
  std::vector<std::string> labels;
  for (Index k = 0; k < nodes; ++k) {
    for (Index i = 0; i < bd; ++i) {
      labels.push_back("t" + std::to_string(g.node(k)) + "." + base.labels()[static_cast<std::size_t>(i)]);
      for (Index j = 0; j < bd; ++j)
        ops[static_cast<std::size_t>((k * bd + i) * d + k * bd + j)].block(k * bd, k * bd, bd, bd) = base.op(i, j);
    }
  }
  g.system = LieTripleSystem<Scalar>(d, std::move(ops), std::move(labels), std::max<Index>(d, 1));
  return g;
}

template <typename Scalar>
Subspace<Scalar> grid_lift(const GridPathSystem<Scalar>& grid, const Subspace<Scalar>& n) {
  if (n.parent_dim != grid.base.dim()) throw DimensionMismatch("grid_lift: subspace is not in the base space");
  const Index nodes = grid.free_nodes();
  const Index bd = grid.base.dim();
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(nodes * bd, nodes * n.dim());
  for (Index k = 0; k < nodes; ++k) basis.block(k * bd, k * n.dim(), bd, n.dim()) = n.basis;
  return Subspace<Scalar>{nodes * bd, basis};
}

#define LTS_INSTANTIATE(S)                                                                               \
  template class LieTripleSystem<S>;                                                                     \
  template struct Subspace<S>;                                                                           \
  template bool same_subspace(const Subspace<S>&, const Subspace<S>&, const Tolerance&);                 \
  template AxiomReport verify_axioms(const LieTripleSystem<S>&, const Tolerance&);                       \
  template Subspace<S> center(const LieTripleSystem<S>&, const Tolerance&);                              \
  template bool is_subsystem(const LieTripleSystem<S>&, const Subspace<S>&, const Tolerance&);           \
  template bool is_ideal(const LieTripleSystem<S>&, const Subspace<S>&, const Tolerance&);               \
  template class LtsMorphism<S>;                                                                         \
  template LtsMorphism<S> certify_morphism(const LtsMorphism<S>&, const Tolerance&);                     \
  template QuotientResult<S> quotient(const LieTripleSystem<S>&, const Subspace<S>&, const Tolerance&);  \
  template LieTripleSystem<S> restrict_to(const LieTripleSystem<S>&, const Subspace<S>&, const Tolerance&); \
  template LieTripleSystem<S> direct_product(const LieTripleSystem<S>&, const LieTripleSystem<S>&);      \
  template Subspace<S> direct_sum(const Subspace<S>&, const Subspace<S>&);                               \
  template GridPathSystem<S> grid_path_system(const LieTripleSystem<S>&, Index, GridConstraint);         \
  template Subspace<S> grid_lift(const GridPathSystem<S>&, const Subspace<S>&);

LTS_INSTANTIATE(Rational)
LTS_INSTANTIATE(double)

#undef LTS_INSTANTIATE

}  // namespace lts
