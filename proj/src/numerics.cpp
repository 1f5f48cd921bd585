#include "lts/numerics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cctype>
#include <cmath>

namespace lts {

const char* to_string(ScalarMode mode) {
  return mode == ScalarMode::ExactRational ? "rational" : "float";
}

namespace {

Integer parse_integer(std::string_view digits, std::string_view original) {
  if (digits.empty()) throw std::invalid_argument("malformed rational: '" + std::string(original) + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed rational: '" + std::string(original) + "'");
  return Integer(std::string(digits));
}

Integer pow10(long e) {
  Integer r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Integer num;
  Integer den = 1;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = parse_integer(text.substr(0, slash), original);
    den = parse_integer(text.substr(slash + 1), original);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(original) + "'");
  } else {
    long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string exp_text(text.substr(e + 1));
      std::size_t used = 0;
      try {
        exponent = std::stol(exp_text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (exp_text.empty() || used != exp_text.size())
        throw std::invalid_argument("malformed rational: '" + std::string(original) + "'");
      text = text.substr(0, e);
    }
    std::string digits;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string_view whole = text.substr(0, dot);
      std::string_view frac = text.substr(dot + 1);
      if (whole.empty() && frac.empty())
        throw std::invalid_argument("malformed rational: '" + std::string(original) + "'");
      digits = std::string(whole) + std::string(frac);
      exponent -= static_cast<long>(frac.size());
    } else {
      digits = std::string(text);
    }
    num = parse_integer(digits, original);
    if (exponent >= 0) {
      num *= pow10(exponent);
    } else {
      den = pow10(-exponent);
    }
  }
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& r) {
  const Integer num = numerator(r);
  const Integer den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Matrix<Rational> to_rational_matrix(const Matrix<double>& m) {
  Matrix<Rational> out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = Rational(m(i, j));
  return out;
}

std::vector<Index> rref_in_place(Matrix<Rational>& a) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index pivot = -1;
    for (Index r = row; r < a.rows(); ++r) {
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const Rational inv = 1 / a(row, col);
    for (Index c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (Index c = col; c < a.cols(); ++c)
        if (a(row, c) != 0) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

namespace {

Eigen::VectorXd singular_values(const Matrix<double>& a) {
  if (a.rows() == 0 || a.cols() == 0) return Eigen::VectorXd();
  return Eigen::JacobiSVD<Matrix<double>>(a).singularValues();
}

Index float_rank_from_singular(const Eigen::VectorXd& s, double rank_tol) {
  // Relative to the largest singular value but never below rank_tol itself, so
  // a lone vector of rounding noise does not count as rank 1.
  if (s.size() == 0) return 0;
  const double threshold = rank_tol * std::max(s(0), 1.0);
  Index r = 0;
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) > threshold) ++r;
  return r;
}

}  // namespace

template <>
Index rank<Rational>(const Matrix<Rational>& a, const Tolerance&) {
  Matrix<Rational> copy = a;
  return static_cast<Index>(rref_in_place(copy).size());
}

template <>
Index rank<double>(const Matrix<double>& a, const Tolerance& tol) {
  return float_rank_from_singular(singular_values(a), tol.rank_tol);
}

template <>
Matrix<Rational> nullspace<Rational>(const Matrix<Rational>& a, const Tolerance&) {
  const Index n = a.cols();
  Matrix<Rational> r = a;
  const std::vector<Index> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<Rational> basis = Matrix<Rational>::Zero(n, n - static_cast<Index>(pivots.size()));
  Index out = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, out) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) basis(pivots[k], out) = -r(static_cast<Index>(k), free);
    ++out;
  }
  return basis;
}

template <>
Matrix<double> nullspace<double>(const Matrix<double>& a, const Tolerance& tol) {
  const Index n = a.cols();
  if (a.rows() == 0 || n == 0) return Matrix<double>::Identity(n, n);
  Eigen::JacobiSVD<Matrix<double>> svd(a, Eigen::ComputeFullV);
  const Index r = float_rank_from_singular(svd.singularValues(), tol.rank_tol);
  return svd.matrixV().rightCols(n - r);
}

template <>
Matrix<Rational> span_basis<Rational>(const Matrix<Rational>& vectors, const Tolerance&,
                                      std::vector<Index>* selected) {
  // Echelon rows of the accepted vectors, each normalised at its pivot.
  std::vector<Vector<Rational>> echelon;
  std::vector<Index> pivot_of;
  std::vector<Index> keep;
  for (Index j = 0; j < vectors.cols(); ++j) {
    Vector<Rational> v = vectors.col(j);
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const Rational f = v(pivot_of[e]);
      if (f != 0) v -= f * echelon[e];
    }
    Index pivot = -1;
    for (Index i = 0; i < v.size(); ++i) {
      if (v(i) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    v /= v(pivot);
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const Rational f = echelon[e](pivot);
      if (f != 0) echelon[e] -= f * v;
    }
    echelon.push_back(std::move(v));
    pivot_of.push_back(pivot);
    keep.push_back(j);
  }
  Matrix<Rational> out(vectors.rows(), static_cast<Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) out.col(static_cast<Index>(k)) = vectors.col(keep[k]);
  if (selected) *selected = keep;
  return out;
}

template <>
Matrix<double> span_basis<double>(const Matrix<double>& vectors, const Tolerance& tol,
                                  std::vector<Index>* selected) {
  std::vector<Index> keep;
  Matrix<double> acc(vectors.rows(), 0);
  for (Index j = 0; j < vectors.cols(); ++j) {
    Matrix<double> trial(vectors.rows(), acc.cols() + 1);
    trial << acc, vectors.col(j);
    if (rank<double>(trial, tol) > acc.cols()) {
      acc = std::move(trial);
      keep.push_back(j);
    }
  }
  if (selected) *selected = keep;
  return acc;
}

template <>
std::optional<Vector<Rational>> coordinates<Rational>(const Matrix<Rational>& basis,
                                                      const Vector<Rational>& v,
                                                      const Tolerance&) {
  if (basis.rows() != v.size()) throw DimensionMismatch("coordinates: vector length differs from basis rows");
  const Index k = basis.cols();
  Matrix<Rational> aug(basis.rows(), k + 1);
  aug << basis, v;
  const std::vector<Index> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (static_cast<Index>(pivots.size()) != k)
    throw std::invalid_argument("coordinates: basis columns are dependent");
  Vector<Rational> c(k);
  for (Index i = 0; i < k; ++i) c(i) = aug(i, k);
  return c;
}

template <>
std::optional<Vector<double>> coordinates<double>(const Matrix<double>& basis, const Vector<double>& v,
                                                  const Tolerance& tol) {
  if (basis.rows() != v.size()) throw DimensionMismatch("coordinates: vector length differs from basis rows");
  // Membership is relative: the residual after projection must be at most
  // eq_tol * |v|.
  if (basis.cols() == 0) {
    if (v.norm() == 0.0) return Vector<double>(0);
    return std::nullopt;
  }
  const Vector<double> c = basis.colPivHouseholderQr().solve(v);
  const double residual = (basis * c - v).norm();
  if (residual > tol.eq_tol * v.norm()) return std::nullopt;
  return c;
}

template <typename Scalar>
Matrix<Scalar> coordinates_or_throw(const Matrix<Scalar>& basis, const Matrix<Scalar>& rhs,
                                    const Tolerance& tol, const char* what) {
  Matrix<Scalar> out(basis.cols(), rhs.cols());
  for (Index j = 0; j < rhs.cols(); ++j) {
    auto c = coordinates<Scalar>(basis, rhs.col(j), tol);
    if (!c) throw std::domain_error(what);
    out.col(j) = *c;
  }
  return out;
}

template Matrix<Rational> coordinates_or_throw(const Matrix<Rational>&, const Matrix<Rational>&,
                                               const Tolerance&, const char*);
template Matrix<double> coordinates_or_throw(const Matrix<double>&, const Matrix<double>&, const Tolerance&,
                                             const char*);

Matrix<double> matrix_exp(const Matrix<double>& x) {
  if (x.rows() != x.cols()) throw DimensionMismatch("matrix_exp: matrix must be square");
  if (x.rows() == 0) return x;
  return x.exp();
}

void matrix_exp(const Matrix<Rational>&) {
  throw std::domain_error("matrix_exp: the exponential is not available in exact rational mode");
}

Matrix<double> realify(const Eigen::MatrixXcd& z) { return realify<double>(z.real(), z.imag()); }

}  // namespace lts
