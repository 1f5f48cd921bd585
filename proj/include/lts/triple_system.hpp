#pragma once

#include "lts/numerics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lts {

// Finite-dimensional Lie triple system stored as its left operators:
// op(i, j) is the matrix of z -> [e_i, e_j, z], so
// [e_i, e_j, e_k] = sum_l op(i, j)(l, k) e_l.
template <typename Scalar>
class LieTripleSystem {
 public:
  static constexpr Index default_max_dim = 32;

  LieTripleSystem() = default;
  // Zero bracket on `dim` basis vectors.
  explicit LieTripleSystem(Index dim, std::vector<std::string> labels = {},
                           Index max_dim = default_max_dim);
  // `ops` has dim*dim entries, row-major in (i, j).
  LieTripleSystem(Index dim, std::vector<Matrix<Scalar>> ops, std::vector<std::string> labels = {},
                  Index max_dim = default_max_dim);

  Index dim() const { return dim_; }
  static constexpr ScalarMode mode() { return ScalarTraits<Scalar>::mode; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Matrix<Scalar>& op(Index i, Index j) const { return ops_[static_cast<std::size_t>(i * dim_ + j)]; }
  // L_{x,y}
  Matrix<Scalar> op(const Vector<Scalar>& x, const Vector<Scalar>& y) const;

  const Scalar& coeff(Index i, Index j, Index k, Index l) const { return op(i, j)(l, k); }
  void set_coeff(Index i, Index j, Index k, Index l, const Scalar& value);

  Vector<Scalar> bracket(const Vector<Scalar>& x, const Vector<Scalar>& y, const Vector<Scalar>& z) const;
  Vector<Scalar> bracket_basis(Index i, Index j, Index k) const { return op(i, j).col(k); }

  bool operator==(const LieTripleSystem& other) const;

 private:
  Index dim_ = 0;
  std::vector<Matrix<Scalar>> ops_;
  std::vector<std::string> labels_;
};

LieTripleSystem<double> to_float(const LieTripleSystem<Rational>& m);

// Basis given by independent columns of a parent space.
template <typename Scalar>
struct Subspace {
  Index parent_dim = 0;
  Matrix<Scalar> basis;

  Index dim() const { return basis.cols(); }
  bool contains(const Vector<Scalar>& v, const Tolerance& tol = {}) const;
  bool contains_all(const Matrix<Scalar>& vectors, const Tolerance& tol = {}) const;

  static Subspace zero(Index parent_dim);
  static Subspace whole(Index parent_dim);
  // Span of the columns (dependent columns dropped).
  static Subspace span(const Matrix<Scalar>& vectors, const Tolerance& tol = {});
};

template <typename Scalar>
bool same_subspace(const Subspace<Scalar>& a, const Subspace<Scalar>& b, const Tolerance& tol = {});

struct AxiomWitness {
  std::string identity;
  std::vector<Index> indices;
};

struct AxiomReport {
  bool ok = true;
  double worst_violation = 0.0;
  std::optional<AxiomWitness> witness;
};

inline constexpr const char* kAntisymmetry = "[x,x,y]=0";
inline constexpr const char* kCyclic = "[x,y,z]+[y,z,x]+[z,x,y]=0";
inline constexpr const char* kDerivation = "[x,y,[u,v,w]]=[[x,y,u],v,w]+[u,[x,y,v],w]+[u,v,[x,y,w]]";

// Checks the three axioms on basis tuples; by multilinearity that covers all
// vectors.
template <typename Scalar>
AxiomReport verify_axioms(const LieTripleSystem<Scalar>& m, const Tolerance& tol = {});

class NotAnIdeal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AxiomDefect : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// z(m): all x with [x, m, m] = 0. Laterality ([m,z,m] = [m,m,z] = 0) is
// checked and a violation throws std::logic_error.
template <typename Scalar>
Subspace<Scalar> center(const LieTripleSystem<Scalar>& m, const Tolerance& tol = {});

template <typename Scalar>
bool is_subsystem(const LieTripleSystem<Scalar>& m, const Subspace<Scalar>& n, const Tolerance& tol = {});

// [n, m, m] in n. When true, [m, n, m] and [m, m, n] in n are asserted too.
template <typename Scalar>
bool is_ideal(const LieTripleSystem<Scalar>& m, const Subspace<Scalar>& n, const Tolerance& tol = {});

template <typename Scalar>
class LtsMorphism {
 public:
  LtsMorphism(LieTripleSystem<Scalar> source, LieTripleSystem<Scalar> target, Matrix<Scalar> matrix);

  const LieTripleSystem<Scalar>& source() const { return source_; }
  const LieTripleSystem<Scalar>& target() const { return target_; }
  const Matrix<Scalar>& matrix() const { return matrix_; }
  bool certified() const { return certified_; }
  // Largest |A[e_i,e_j,e_k] - [Ae_i,Ae_j,Ae_k]| entry seen by the last
  // certification, or -1 when never certified.
  double defect() const { return defect_; }

 private:
  template <typename S>
  friend LtsMorphism<S> certify_morphism(const LtsMorphism<S>& f, const Tolerance& tol);

  LieTripleSystem<Scalar> source_;
  LieTripleSystem<Scalar> target_;
  Matrix<Scalar> matrix_;
  bool certified_ = false;
  double defect_ = -1.0;
};

template <typename Scalar>
LtsMorphism<Scalar> certify_morphism(const LtsMorphism<Scalar>& f, const Tolerance& tol = {});

template <typename Scalar>
struct QuotientResult {
  LieTripleSystem<Scalar> system;
  LtsMorphism<Scalar> projection;
  // Columns of the parent space whose images form the quotient basis.
  Matrix<Scalar> complement;
};

template <typename Scalar>
QuotientResult<Scalar> quotient(const LieTripleSystem<Scalar>& m, const Subspace<Scalar>& n,
                                const Tolerance& tol = {});

// Subsystem n with the restricted bracket, expressed in n's basis.
template <typename Scalar>
LieTripleSystem<Scalar> restrict_to(const LieTripleSystem<Scalar>& m, const Subspace<Scalar>& n,
                                    const Tolerance& tol = {});

template <typename Scalar>
LieTripleSystem<Scalar> direct_product(const LieTripleSystem<Scalar>& a, const LieTripleSystem<Scalar>& b);

// Block-diagonal sum of subspaces of the two factors.
template <typename Scalar>
Subspace<Scalar> direct_sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b);

enum class GridConstraint { PathZeroAtStart, LoopZeroAtBothEnds };

// Finite-grid surrogate for path and loop systems: curves sampled at nodes
// 0..T-1 with the pointwise bracket. Pinned nodes are dropped, so the system
// is a product of copies of the base, one per free node.
template <typename Scalar>
struct GridPathSystem {
  LieTripleSystem<Scalar> base;
  Index T = 0;
  GridConstraint constraint = GridConstraint::PathZeroAtStart;
  LieTripleSystem<Scalar> system;

  Index free_nodes() const { return constraint == GridConstraint::PathZeroAtStart ? T - 1 : T - 2; }
  // Grid index of the k-th free node.
  Index node(Index k) const { return k + 1; }
};

template <typename Scalar>
GridPathSystem<Scalar> grid_path_system(const LieTripleSystem<Scalar>& base, Index T, GridConstraint constraint);

// Curves with every free node in `n`.
template <typename Scalar>
Subspace<Scalar> grid_lift(const GridPathSystem<Scalar>& grid, const Subspace<Scalar>& n);

}  // namespace lts
