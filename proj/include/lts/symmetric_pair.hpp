#pragma once

#include "lts/lie_algebra.hpp"

#include <cstdint>
#include <random>

namespace lts {

enum class FixedGroupPolicy { FullFixedGroup, IdentityComponentHeuristic };

const char* to_string(FixedGroupPolicy policy);

// sigma(g) = J g J^{-1} with J^2 = +-I, or sigma(g) = (g^T)^{-1}.
struct GroupInvolution {
  enum class Kind { ConjugationBy, TransposeInverse };
  Kind kind = Kind::TransposeInverse;
  Matrix<double> J;

  static GroupInvolution conjugation_by(Matrix<double> j);
  static GroupInvolution transpose_inverse();

  Matrix<double> apply(const Matrix<double>& g) const;
  // Derivative at the identity.
  Matrix<double> apply_lie(const Matrix<double>& x) const;
};

class NotInMinusPart : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularRepresentative : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotCentral : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A matrix group G given by its Lie algebra basis, an involution sigma and the
// subgroup K of sigma-fixed elements (or, under the heuristic policy, those
// fixed elements reachable from the identity by arcs exp(sY), Y in g_+).
// Float mode only; all vectors are coefficients in lie_basis unless noted.
class MatrixSymmetricPair {
 public:
  MatrixSymmetricPair(std::string name, Index ambient_n, std::vector<Matrix<double>> lie_basis,
                      GroupInvolution sigma, FixedGroupPolicy policy = FixedGroupPolicy::FullFixedGroup,
                      const Tolerance& tol = {});

  const std::string& name() const { return name_; }
  Index ambient_n() const { return n_; }
  Index dim() const { return static_cast<Index>(basis_.size()); }
  const std::vector<Matrix<double>>& lie_basis() const { return basis_; }
  const GroupInvolution& sigma() const { return sigma_; }
  FixedGroupPolicy policy() const { return policy_; }
  const Tolerance& tolerance() const { return tol_; }
  MatrixSymmetricPair with_policy(FixedGroupPolicy policy) const;

  const Matrix<double>& theta() const { return theta_; }
  const SymmetricLieAlgebra<double>& symmetric_algebra() const { return sym_; }
  const EigenSplit<double>& split() const { return split_; }
  // Derived LTS [[x,y],z] in the minus basis of split().
  const LieTripleSystem<double>& derived() const { return derived_; }

  Matrix<double> to_matrix(const Vector<double>& coeffs) const;
  // Coefficients of a matrix in the Lie algebra, or nullopt if outside.
  std::optional<Vector<double>> to_coeffs(const Matrix<double>& x) const;
  Vector<double> from_minus(const Vector<double>& minus_coords) const { return split_.minus.basis * minus_coords; }
  std::optional<Vector<double>> to_minus(const Vector<double>& coeffs) const;

  Matrix<double> sigma(const Matrix<double>& g) const { return sigma_.apply(g); }

  // ||sigma(k) - k||_F / ||k||_F; under the heuristic policy elements that fail
  // the identity-component test report 1.
  double k_residual(const Matrix<double>& k) const;
  bool in_k(const Matrix<double>& k) const { return k_residual(k) <= tol_.membership_tol; }

 private:
  bool reaches_identity_component(const Matrix<double>& k) const;

  std::string name_;
  Index n_;
  std::vector<Matrix<double>> basis_;
  Matrix<double> flat_;
  GroupInvolution sigma_;
  FixedGroupPolicy policy_;
  Tolerance tol_;
  Matrix<double> theta_;
  SymmetricLieAlgebra<double> sym_;
  EigenSplit<double> split_;
  LieTripleSystem<double> derived_;
};

struct CosetPoint {
  Matrix<double> rep;
};

CosetPoint base_point(const MatrixSymmetricPair& pair);

// Residual of q.rep^{-1} p.rep against K.
double coset_residual(const MatrixSymmetricPair& pair, const CosetPoint& p, const CosetPoint& q);
bool same_coset(const MatrixSymmetricPair& pair, const CosetPoint& p, const CosetPoint& q);

// Coset of exp(t x); x must satisfy theta x = -x.
CosetPoint exp_pair(const MatrixSymmetricPair& pair, const Vector<double>& x, double t = 1.0);

// gK . hK = g sigma(g)^{-1} sigma(h) K
CosetPoint coset_mul(const MatrixSymmetricPair& pair, const CosetPoint& p, const CosetPoint& q);

// g . h = g h^{-1} g
Matrix<double> group_plus_mul(const Matrix<double>& g, const Matrix<double>& h);

struct Geodesic {
  const MatrixSymmetricPair* pair = nullptr;
  Vector<double> velocity;
};

Geodesic make_geodesic(const MatrixSymmetricPair& pair, const Vector<double>& velocity);
CosetPoint geodesic_point(const Geodesic& geo, double t);

// mu_{alpha(s/2)} o mu_{alpha(0)}
CosetPoint translate(const Geodesic& geo, double s, const CosetPoint& p);

struct ResidualReport {
  bool ok = true;
  double worst_residual = 0.0;
  std::size_t samples = 0;
};

// Exp(2x - y) = Exp(x) . Exp(y) over the given y samples. x must lie in the
// center of the derived LTS (NotCentral otherwise).
ResidualReport exp_center_morphism_check(const MatrixSymmetricPair& pair, const Vector<double>& x,
                                         const std::vector<Vector<double>>& ys);

// Random element of g_- as lie_basis coefficients, entries of the minus
// coordinates uniform in [-scale, scale].
Vector<double> random_minus(const MatrixSymmetricPair& pair, std::mt19937_64& rng, double scale = 1.0);
Vector<double> random_plus(const MatrixSymmetricPair& pair, std::mt19937_64& rng, double scale = 1.0);

// sigma^2 = id and sigma(gh) = sigma(g) sigma(h) on seeded group samples.
ResidualReport validate_pair(const MatrixSymmetricPair& pair, std::uint64_t seed, std::size_t samples = 20);

}  // namespace lts
