#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace lts {

// Exact scalar. Expression templates are off so the type behaves like a plain
// value inside Eigen kernels.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

enum class ScalarMode { ExactRational, Float64 };

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr ScalarMode mode = ScalarMode::ExactRational;
  static constexpr bool exact = true;
};

template <>
struct ScalarTraits<double> {
  static constexpr ScalarMode mode = ScalarMode::Float64;
  static constexpr bool exact = false;
};

template <typename Scalar>
inline constexpr bool is_exact_v = ScalarTraits<Scalar>::exact;

const char* to_string(ScalarMode mode);

// Float-mode decisions go through these; exact mode ignores them.
struct Tolerance {
  double eq_tol = 1e-9;
  double rank_tol = 1e-9;
  double membership_tol = 1e-8;

  void validate() const {
    if (eq_tol < 0 || rank_tol < 0 || membership_tol < 0)
      throw std::invalid_argument("tolerances must be non-negative");
  }
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Scalar helpers

template <typename Scalar>
double to_double(const Scalar& s) {
  return static_cast<double>(s);
}

template <typename Scalar>
bool is_zero(const Scalar& s, double tol) {
  if constexpr (is_exact_v<Scalar>) {
    (void)tol;
    return s == 0;
  } else {
    return std::abs(s) <= tol;
  }
}

// Constant p/q in the requested scalar type.
template <typename Scalar>
Scalar ratio(long p, long q) {
  if constexpr (is_exact_v<Scalar>) {
    return Rational(p, q);
  } else {
    return static_cast<double>(p) / static_cast<double>(q);
  }
}

// "p", "p/q", or a decimal literal. Always returns a canonical rational.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

// Largest absolute entry, as a double; 0 for empty matrices.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  double worst = 0.0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) worst = std::max(worst, std::abs(to_double(m(i, j))));
  return worst;
}

template <typename Scalar>
Matrix<double> to_double_matrix(const Matrix<Scalar>& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = to_double(m(i, j));
  return out;
}

Matrix<Rational> to_rational_matrix(const Matrix<double>& m);

template <typename Scalar>
bool all_zero(const Matrix<Scalar>& m, double tol) {
  if constexpr (is_exact_v<Scalar>) {
    for (Index j = 0; j < m.cols(); ++j)
      for (Index i = 0; i < m.rows(); ++i)
        if (m(i, j) != 0) return false;
    return true;
  } else {
    return max_abs(m) <= tol;
  }
}

// ---------------------------------------------------------------------------
// Linear algebra substrate.
//
// Bases are returned as matrix columns. Float-mode rank uses the singular
// value threshold rank_tol * max(sigma_max, 1); exact mode row-reduces.

template <typename Scalar>
Index rank(const Matrix<Scalar>& a, const Tolerance& tol = {});

template <typename Scalar>
Matrix<Scalar> nullspace(const Matrix<Scalar>& a, const Tolerance& tol = {});

// Greedy independent subset of the columns, scanned left to right.
// `selected`, when given, receives the indices of the kept columns.
template <typename Scalar>
Matrix<Scalar> span_basis(const Matrix<Scalar>& vectors, const Tolerance& tol = {},
                          std::vector<Index>* selected = nullptr);

// Coefficients c with basis * c == v, or nullopt when v is outside the span.
// `basis` must have independent columns.
template <typename Scalar>
std::optional<Vector<Scalar>> coordinates(const Matrix<Scalar>& basis, const Vector<Scalar>& v,
                                          const Tolerance& tol = {});

// Solves basis * C == rhs column by column; throws std::domain_error when a
// column leaves the span.
template <typename Scalar>
Matrix<Scalar> coordinates_or_throw(const Matrix<Scalar>& basis, const Matrix<Scalar>& rhs,
                                    const Tolerance& tol, const char* what);

// Exact reduced row echelon form; returns pivot columns.
std::vector<Index> rref_in_place(Matrix<Rational>& a);

// e^X by scaling and squaring with a degree-13 Pade approximant (Higham 2005,
// as shipped in Eigen's MatrixFunctions module). Float mode only.
Matrix<double> matrix_exp(const Matrix<double>& x);

// Exact mode has no exponential.
[[noreturn]] void matrix_exp(const Matrix<Rational>&);

// Realification of a complex n x n matrix A + iB as [[A, -B], [B, A]].
Matrix<double> realify(const Eigen::MatrixXcd& z);
template <typename Scalar>
Matrix<Scalar> realify(const Matrix<Scalar>& re, const Matrix<Scalar>& im) {
  const Index n = re.rows();
  Matrix<Scalar> out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = re;
  out.topRightCorner(n, n) = -im;
  out.bottomLeftCorner(n, n) = im;
  out.bottomRightCorner(n, n) = re;
  return out;
}

}  // namespace lts
