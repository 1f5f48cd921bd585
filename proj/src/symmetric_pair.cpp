#include "lts/symmetric_pair.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>

namespace lts {

const char* to_string(FixedGroupPolicy policy) {
  return policy == FixedGroupPolicy::FullFixedGroup ? "full_fixed_group" : "identity_component_heuristic";
}

GroupInvolution GroupInvolution::conjugation_by(Matrix<double> j) {
  const Index n = j.rows();
  if (j.cols() != n) throw DimensionMismatch("conjugation matrix must be square");
  const Matrix<double> sq = j * j;
  const Matrix<double> I = Matrix<double>::Identity(n, n);
  if ((sq - I).norm() > 1e-12 * n && (sq + I).norm() > 1e-12 * n)
    throw std::invalid_argument("conjugation matrix J must satisfy J^2 = +-I");
  return GroupInvolution{Kind::ConjugationBy, std::move(j)};
}

GroupInvolution GroupInvolution::transpose_inverse() { return GroupInvolution{Kind::TransposeInverse, {}}; }

Matrix<double> GroupInvolution::apply(const Matrix<double>& g) const {
  if (kind == Kind::TransposeInverse) return g.transpose().inverse();
  // J^{-1} = +-J, and the sign cancels in J g J^{-1}; use J g J / (J^2)_{00}.
  const double s = (J * J)(0, 0);
  return J * g * J * s;
}

Matrix<double> GroupInvolution::apply_lie(const Matrix<double>& x) const {
  if (kind == Kind::TransposeInverse) return -x.transpose();
  const double s = (J * J)(0, 0);
  return J * x * J * s;
}

namespace {

Vector<double> flatten(const Matrix<double>& m) { return Eigen::Map<const Vector<double>>(m.data(), m.size()); }

std::vector<Matrix<double>> checked_basis(Index n, std::vector<Matrix<double>> basis) {
  if (n <= 0) throw std::invalid_argument("ambient size must be positive");
  for (const auto& b : basis)
    if (b.rows() != n || b.cols() != n) throw DimensionMismatch("Lie algebra basis matrix has wrong size");
  return basis;
}

Matrix<double> inverse_or_throw(const Matrix<double>& g) {
  Eigen::FullPivLU<Matrix<double>> lu(g);
  if (!lu.isInvertible()) throw SingularRepresentative("coset representative is singular");
  return lu.inverse();
}

}  // namespace

MatrixSymmetricPair::MatrixSymmetricPair(std::string name, Index ambient_n, std::vector<Matrix<double>> lie_basis,
                                         GroupInvolution sigma, FixedGroupPolicy policy, const Tolerance& tol)
    : name_(std::move(name)),
      n_(ambient_n),
      basis_(checked_basis(ambient_n, std::move(lie_basis))),
      sigma_(std::move(sigma)),
      policy_(policy),
      tol_(tol) {
  tol_.validate();
  if (sigma_.kind == GroupInvolution::Kind::ConjugationBy && sigma_.J.rows() != n_)
    throw DimensionMismatch("conjugation matrix does not match the ambient size");
  const Index d = dim();
  flat_.resize(n_ * n_, d);
  for (Index i = 0; i < d; ++i) flat_.col(i) = flatten(basis_[static_cast<std::size_t>(i)]);
  const auto algebra = LieAlgebra<double>::from_basis_matrices(basis_, tol_);

  theta_.resize(d, d);
  for (Index i = 0; i < d; ++i) {
    auto c = to_coeffs(sigma_.apply_lie(basis_[static_cast<std::size_t>(i)]));
    if (!c) throw std::invalid_argument("the derivative of sigma does not preserve the Lie algebra");
    theta_.col(i) = *c;
  }
  sym_ = SymmetricLieAlgebra<double>{algebra, theta_};
  split_ = eigensplit(sym_, tol_);
  derived_ = triple_from_involution(sym_, tol_);
}

MatrixSymmetricPair MatrixSymmetricPair::with_policy(FixedGroupPolicy policy) const {
  MatrixSymmetricPair copy = *this;
  copy.policy_ = policy;
  return copy;
}

Matrix<double> MatrixSymmetricPair::to_matrix(const Vector<double>& coeffs) const {
  if (coeffs.size() != dim()) throw DimensionMismatch("coefficient vector length differs from Lie algebra dim");
  Matrix<double> out = Matrix<double>::Zero(n_, n_);
  for (Index i = 0; i < dim(); ++i) out += coeffs(i) * basis_[static_cast<std::size_t>(i)];
  return out;
}

std::optional<Vector<double>> MatrixSymmetricPair::to_coeffs(const Matrix<double>& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw DimensionMismatch("matrix has wrong ambient size");
  if (x.norm() == 0.0) return Vector<double>::Zero(dim());
  return coordinates<double>(flat_, flatten(x), tol_);
}

std::optional<Vector<double>> MatrixSymmetricPair::to_minus(const Vector<double>& coeffs) const {
  if (coeffs.size() != dim()) throw DimensionMismatch("coefficient vector length differs from Lie algebra dim");
  if ((theta_ * coeffs + coeffs).norm() > tol_.eq_tol * std::max(1.0, coeffs.norm())) return std::nullopt;
  if (split_.minus.dim() == 0) return Vector<double>(0);
  return coordinates<double>(split_.minus.basis, coeffs, tol_);
}

double MatrixSymmetricPair::k_residual(const Matrix<double>& k) const {
  const double r = (sigma(k) - k).norm() / k.norm();
  if (policy_ == FixedGroupPolicy::FullFixedGroup || r > tol_.membership_tol) return r;
  return reaches_identity_component(k) ? r : 1.0;
}

// Heuristic identity-component test: look for Y in g_+ with k P = exp(Y) for a
// small perturbation P = exp(0.1 Z), Z a unit plus-basis direction, and walk the
// arc exp(sY) in steps of 0.1 checking it stays sigma-fixed. The perturbation
// moves k off eigenvalue -1, where the principal logarithm is undefined.
bool MatrixSymmetricPair::reaches_identity_component(const Matrix<double>& k) const {
  std::vector<Matrix<double>> perturbations{Matrix<double>::Identity(n_, n_)};
  for (Index j = 0; j < split_.plus.dim(); ++j) {
    Matrix<double> z = to_matrix(split_.plus.basis.col(j));
    z /= z.norm();
    perturbations.push_back(matrix_exp(Matrix<double>(0.1 * z)));
    perturbations.push_back(matrix_exp(Matrix<double>(-0.1 * z)));
  }
  for (const auto& p : perturbations) {
    const Matrix<double> kp = k * p;
    const Eigen::VectorXcd ev = Eigen::EigenSolver<Matrix<double>>(kp, false).eigenvalues();
    bool bad = false;
    for (Index i = 0; i < ev.size(); ++i)
      if (std::abs(ev(i).imag()) < 1e-7 && ev(i).real() <= 1e-7) bad = true;
    if (bad) continue;
    const Eigen::MatrixXcd logc = Eigen::MatrixXcd(kp.cast<std::complex<double>>()).log();
    if (logc.imag().norm() > 1e-8 * std::max(1.0, logc.norm())) continue;
    const Matrix<double> y = logc.real();
    auto c = to_coeffs(y);
    if (!c) continue;
    if ((theta_ * *c - *c).norm() > 1e-8 * std::max(1.0, c->norm())) continue;
    bool arc_ok = true;
    for (int s = 1; s <= 10 && arc_ok; ++s) {
      const Matrix<double> g = matrix_exp(Matrix<double>(0.1 * s * y));
      arc_ok = (sigma(g) - g).norm() / g.norm() <= tol_.membership_tol;
    }
    if (arc_ok) return true;
  }
  return false;
}

CosetPoint base_point(const MatrixSymmetricPair& pair) {
  return CosetPoint{Matrix<double>::Identity(pair.ambient_n(), pair.ambient_n())};
}

double coset_residual(const MatrixSymmetricPair& pair, const CosetPoint& p, const CosetPoint& q) {
  return pair.k_residual(inverse_or_throw(q.rep) * p.rep);
}

bool same_coset(const MatrixSymmetricPair& pair, const CosetPoint& p, const CosetPoint& q) {
  return coset_residual(pair, p, q) <= pair.tolerance().membership_tol;
}

CosetPoint exp_pair(const MatrixSymmetricPair& pair, const Vector<double>& x, double t) {
  if (!pair.to_minus(x)) throw NotInMinusPart("exp_pair: vector is not in the -1 eigenspace");
  return CosetPoint{matrix_exp(Matrix<double>(t * pair.to_matrix(x)))};
}

CosetPoint coset_mul(const MatrixSymmetricPair& pair, const CosetPoint& p, const CosetPoint& q) {
  const Matrix<double> sg = pair.sigma(p.rep);
  return CosetPoint{p.rep * inverse_or_throw(sg) * pair.sigma(q.rep)};
}

Matrix<double> group_plus_mul(const Matrix<double>& g, const Matrix<double>& h) {
  if (g.rows() != h.rows() || g.cols() != h.cols()) throw DimensionMismatch("group_plus_mul: shape mismatch");
  return g * inverse_or_throw(h) * g;
}

Geodesic make_geodesic(const MatrixSymmetricPair& pair, const Vector<double>& velocity) {
  if (!pair.to_minus(velocity)) throw NotInMinusPart("geodesic velocity is not in the -1 eigenspace");
  return Geodesic{&pair, velocity};
}

CosetPoint geodesic_point(const Geodesic& geo, double t) { return exp_pair(*geo.pair, geo.velocity, t); }

CosetPoint translate(const Geodesic& geo, double s, const CosetPoint& p) {
  const MatrixSymmetricPair& pair = *geo.pair;
  const CosetPoint reflected = coset_mul(pair, geodesic_point(geo, 0.0), p);
  return coset_mul(pair, geodesic_point(geo, 0.5 * s), reflected);
}

ResidualReport exp_center_morphism_check(const MatrixSymmetricPair& pair, const Vector<double>& x,
                                         const std::vector<Vector<double>>& ys) {
  const auto xm = pair.to_minus(x);
  if (!xm) throw NotCentral("x is not in the -1 eigenspace");
  const Subspace<double> z = center(pair.derived(), pair.tolerance());
  if (!z.contains(*xm, pair.tolerance())) throw NotCentral("x is not in the center of the derived LTS");
  ResidualReport report;
  const CosetPoint ex = exp_pair(pair, x);
  for (const auto& y : ys) {
    const CosetPoint lhs = exp_pair(pair, Vector<double>(2.0 * x - y));
    const CosetPoint rhs = coset_mul(pair, ex, exp_pair(pair, y));
    const double r = coset_residual(pair, lhs, rhs);
    report.worst_residual = std::max(report.worst_residual, r);
    ++report.samples;
  }
  report.ok = report.worst_residual <= pair.tolerance().membership_tol;
  return report;
}

namespace {

Vector<double> random_in(const Matrix<double>& basis, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Vector<double> c(basis.cols());
  for (Index i = 0; i < c.size(); ++i) c(i) = u(rng);
  return basis * c;
}

}  // namespace

Vector<double> random_minus(const MatrixSymmetricPair& pair, std::mt19937_64& rng, double scale) {
  return random_in(pair.split().minus.basis, rng, scale);
}

Vector<double> random_plus(const MatrixSymmetricPair& pair, std::mt19937_64& rng, double scale) {
  return random_in(pair.split().plus.basis, rng, scale);
}

ResidualReport validate_pair(const MatrixSymmetricPair& pair, std::uint64_t seed, std::size_t samples) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto sample = [&] {
    Vector<double> c(pair.dim());
    for (Index i = 0; i < c.size(); ++i) c(i) = u(rng);
    return matrix_exp(pair.to_matrix(c));
  };
  ResidualReport report;
  for (std::size_t s = 0; s < samples; ++s) {
    const Matrix<double> g = sample();
    const Matrix<double> h = sample();
    const double r1 = (pair.sigma(pair.sigma(g)) - g).norm() / g.norm();
    const double r2 = (pair.sigma(g * h) - pair.sigma(g) * pair.sigma(h)).norm() / (g * h).norm();
    report.worst_residual = std::max({report.worst_residual, r1, r2});
    ++report.samples;
  }
  report.ok = report.worst_residual <= pair.tolerance().membership_tol;
  return report;
}

}  // namespace lts
