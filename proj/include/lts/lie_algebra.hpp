#pragma once

#include "lts/triple_system.hpp"

namespace lts {

// Lie algebra stored by its adjoint matrices: ad(i) column j is [e_i, e_j].
template <typename Scalar>
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(Index dim, std::vector<std::string> labels = {});
  LieAlgebra(Index dim, std::vector<Matrix<Scalar>> ad, std::vector<std::string> labels = {});

  // Structure constants of the matrix Lie algebra spanned by `basis`
  // (commutator bracket). Throws std::domain_error if the span is not closed
  // or the basis is dependent.
  static LieAlgebra from_basis_matrices(const std::vector<Matrix<Scalar>>& basis, const Tolerance& tol = {},
                                        std::vector<std::string> labels = {});

  Index dim() const { return dim_; }
  static constexpr ScalarMode mode() { return ScalarTraits<Scalar>::mode; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Matrix<Scalar>& ad(Index i) const { return ad_[static_cast<std::size_t>(i)]; }
  Matrix<Scalar> ad(const Vector<Scalar>& x) const;
  const Scalar& coeff(Index i, Index j, Index k) const { return ad(i)(k, j); }
  void set_coeff(Index i, Index j, Index k, const Scalar& value);

  Vector<Scalar> bracket(const Vector<Scalar>& x, const Vector<Scalar>& y) const { return ad(x) * y; }

  bool operator==(const LieAlgebra& other) const;

 private:
  Index dim_ = 0;
  std::vector<Matrix<Scalar>> ad_;
  std::vector<std::string> labels_;
};

inline constexpr const char* kLieAntisymmetry = "[x,x]=0";
inline constexpr const char* kJacobi = "[x,[y,z]]+[y,[z,x]]+[z,[x,y]]=0";

template <typename Scalar>
AxiomReport verify_lie(const LieAlgebra<Scalar>& g, const Tolerance& tol = {});

class InvolutionDefect : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ClosureDefect : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Scalar>
struct SymmetricLieAlgebra {
  LieAlgebra<Scalar> algebra;
  Matrix<Scalar> theta;

  Index dim() const { return algebra.dim(); }
};

struct InvolutionReport {
  bool involutive = true;
  bool automorphism = true;
  double worst_violation = 0.0;
};

// theta^2 = I and theta[x,y] = [theta x, theta y] on basis pairs.
template <typename Scalar>
InvolutionReport check_involution(const SymmetricLieAlgebra<Scalar>& s, const Tolerance& tol = {});

template <typename Scalar>
struct EigenSplit {
  Subspace<Scalar> plus;
  Subspace<Scalar> minus;
};

// Bases are greedy column selections of the projectors (I +- theta)/2, so a
// diagonal theta yields standard basis vectors. Throws InvolutionDefect when
// theta^2 != I, ClosureDefect when the plus part is not a subalgebra.
template <typename Scalar>
EigenSplit<Scalar> eigensplit(const SymmetricLieAlgebra<Scalar>& s, const Tolerance& tol = {});

// The minus eigenspace with [x,y,z] = [[x,y],z], in the minus basis of
// eigensplit(s).
template <typename Scalar>
LieTripleSystem<Scalar> triple_from_involution(const SymmetricLieAlgebra<Scalar>& s, const Tolerance& tol = {});

// The same space with [x,y,z] = 1/4 [[x,y],z].
template <typename Scalar>
LieTripleSystem<Scalar> g_plus(const LieAlgebra<Scalar>& g);

template <typename Scalar>
Subspace<Scalar> lie_center(const LieAlgebra<Scalar>& g, const Tolerance& tol = {});

// Lie center, checked to be theta-invariant (std::logic_error otherwise).
template <typename Scalar>
Subspace<Scalar> lie_center(const SymmetricLieAlgebra<Scalar>& s, const Tolerance& tol = {});

// Image of `v` under the minus projector, as a subspace of the whole algebra.
template <typename Scalar>
Subspace<Scalar> minus_part(const SymmetricLieAlgebra<Scalar>& s, const Subspace<Scalar>& v,
                            const Tolerance& tol = {});

// Coordinates of a subspace of the algebra that lies inside the minus part,
// expressed in the minus basis of `split`.
template <typename Scalar>
Subspace<Scalar> to_minus_coordinates(const EigenSplit<Scalar>& split, const Subspace<Scalar>& v,
                                      const Tolerance& tol = {});

template <typename Scalar>
struct StandardEmbedding {
  SymmetricLieAlgebra<Scalar> algebra;
  // Operators L_{e_i,e_j} kept as the basis of h, with their (i, j).
  std::vector<Matrix<Scalar>> h_basis;
  std::vector<std::pair<Index, Index>> h_pairs;
  // Columns: images of the basis of m in S = h + m.
  Matrix<Scalar> embedding;

  Index h_dim() const { return static_cast<Index>(h_basis.size()); }
};

// S(m) = h + m with h spanned by the operators L_{x,y}. Throws AxiomDefect when
// m fails verify_axioms.
template <typename Scalar>
StandardEmbedding<Scalar> standard_embedding(const LieTripleSystem<Scalar>& m, const Tolerance& tol = {});

template <typename Scalar>
LieAlgebra<Scalar> direct_sum(const LieAlgebra<Scalar>& a, const LieAlgebra<Scalar>& b);

// g x g with the flip involution (x, y) -> (y, x).
template <typename Scalar>
SymmetricLieAlgebra<Scalar> flip_symmetric(const LieAlgebra<Scalar>& g);

// (x, -x) -> 2x from the minus part of the flip algebra (in its minus basis)
// onto g, as a morphism into g_plus(g).
template <typename Scalar>
LtsMorphism<Scalar> flip_isomorphism(const LieAlgebra<Scalar>& g, const Tolerance& tol = {});

// Change of basis: the new basis vectors are the columns of p.
template <typename Scalar>
SymmetricLieAlgebra<Scalar> change_basis(const SymmetricLieAlgebra<Scalar>& s, const Matrix<Scalar>& p,
                                         const Tolerance& tol = {});

LieAlgebra<double> to_float(const LieAlgebra<Rational>& g);
SymmetricLieAlgebra<double> to_float(const SymmetricLieAlgebra<Rational>& s);

}  // namespace lts
