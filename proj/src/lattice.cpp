#include "lts/lattice.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>

namespace lts {

namespace {

using Big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>, boost::multiprecision::et_off>;
using BigMatrix = Eigen::Matrix<Big, Eigen::Dynamic, Eigen::Dynamic>;

constexpr double kUnitRoundoff = 1.1102230246251565e-16;
constexpr double kLllDelta = 0.99;
constexpr double kGrayFactor = 1e3;

void check_generators(std::size_t count) {
  if (count > kMaxGenerators)
    throw TooManyGenerators("subgroup_discreteness: at most " + std::to_string(kMaxGenerators) + " generators");
}

// Gram-Schmidt data of the rows of b.
struct GramSchmidt {
  BigMatrix mu;
  std::vector<Big> norms;
};

GramSchmidt gram_schmidt(const BigMatrix& b) {
  const Index m = b.rows();
  GramSchmidt gs{BigMatrix::Zero(m, m), std::vector<Big>(static_cast<std::size_t>(m))};
  BigMatrix star = b;
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < i; ++j) {
      const Big nj = gs.norms[static_cast<std::size_t>(j)];
      gs.mu(i, j) = nj == 0 ? Big(0) : Big(b.row(i).dot(star.row(j)) / nj);
      star.row(i) -= gs.mu(i, j) * star.row(j);
    }
    gs.norms[static_cast<std::size_t>(i)] = star.row(i).squaredNorm();
  }
  return gs;
}

// LLL on the rows of b, applying the same unimodular steps to u.
void lll_reduce(BigMatrix& b, BigMatrix& u) {
  const Index m = b.rows();
  Index k = 1;
  std::size_t guard = 0;
  while (k < m) {
    if (++guard > 100000) throw std::runtime_error("LLL did not converge");
    for (Index j = k - 1; j >= 0; --j) {
      const GramSchmidt gs = gram_schmidt(b);
      const Big q = boost::multiprecision::round(gs.mu(k, j));
      if (q != 0) {
        b.row(k) -= q * b.row(j);
        u.row(k) -= q * u.row(j);
      }
    }
    const GramSchmidt gs = gram_schmidt(b);
    const Big lhs = gs.norms[static_cast<std::size_t>(k)];
    const Big rhs = (Big(kLllDelta) - gs.mu(k, k - 1) * gs.mu(k, k - 1)) * gs.norms[static_cast<std::size_t>(k - 1)];
    if (lhs >= rhs) {
      ++k;
    } else {
      b.row(k).swap(b.row(k - 1));
      u.row(k).swap(u.row(k - 1));
      k = std::max<Index>(k - 1, 1);
    }
  }
}

struct Candidate {
  std::vector<std::int64_t> c;
  double norm = 0.0;
  long double c2 = 0.0L;
};

// Smallest coefficient norm first, then lexicographic.
bool better(const Candidate& a, const Candidate& b) {
  if (a.c2 != b.c2) return a.c2 < b.c2;
  return a.c < b.c;
}

void sign_normalize(std::vector<std::int64_t>& c) {
  for (auto v : c) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& x : c) x = -x;
    return;
  }
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Discrete:
      return "Discrete";
    case Verdict::NonDiscreteWitness:
      return "NonDiscreteWitness";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

void SubgroupSearchConfig::validate() const {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (coefficient_bound < 1) throw std::invalid_argument("coefficient bound must be at least 1");
}

struct Search {
  std::optional<Candidate> witness;
  std::optional<Candidate> shortest;
  bool exhausted = false;
  bool trivial = false;
  std::size_t relations = 0;
  std::uint64_t nodes = 0;
};

// LLL on the rows (e_i / B, g_i / scale), then enumeration of the ball of
// squared radius k + 1, which holds every c with |c_i| <= B and |G c| <= scale.
Search search_box(const std::vector<Vector<double>>& generators, const SubgroupSearchConfig& cfg, double scale,
                  double zero_tol) {
  Search out;
  const Index k = static_cast<Index>(generators.size());
  const Index d = generators[0].size();
  BigMatrix b = BigMatrix::Zero(k, k + d);
  BigMatrix u = BigMatrix::Identity(k, k);
  BigMatrix g(k, d);
  for (Index i = 0; i < k; ++i) {
    b(i, i) = Big(1) / Big(cfg.coefficient_bound);
    for (Index j = 0; j < d; ++j) {
      g(i, j) = Big(generators[static_cast<std::size_t>(i)](j));
      b(i, k + j) = g(i, j) / Big(scale);
    }
  }
  lll_reduce(b, u);

  auto value_of = [&](const BigMatrix& coeffs) {  // coeffs: 1 x k
    const BigMatrix w = coeffs * g;
    Vector<double> out(d);
    for (Index j = 0; j < d; ++j) out(j) = static_cast<double>(w(0, j));
    return out;
  };

  // Drop relation rows; the rest span a complement of the relation lattice.
  std::vector<Index> keep;
  for (Index i = 0; i < k; ++i) {
    if (value_of(u.row(i)).norm() <= zero_tol) {
      ++out.relations;
    } else {
      keep.push_back(i);
    }
  }
  const Index m = static_cast<Index>(keep.size());
  if (m == 0) {
    out.trivial = true;
    return out;
  }
  BigMatrix br(m, k + d);
  BigMatrix ur(m, k);
  for (Index i = 0; i < m; ++i) {
    br.row(i) = b.row(keep[static_cast<std::size_t>(i)]);
    ur.row(i) = u.row(keep[static_cast<std::size_t>(i)]);
  }
  const GramSchmidt gs = gram_schmidt(br);
  std::vector<long double> bn(static_cast<std::size_t>(m));
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> mu(m, m);
  for (Index i = 0; i < m; ++i) {
    bn[static_cast<std::size_t>(i)] = static_cast<long double>(gs.norms[static_cast<std::size_t>(i)]);
    for (Index j = 0; j < m; ++j) mu(i, j) = static_cast<long double>(gs.mu(i, j));
  }

  long double radius2 = (static_cast<long double>(k) + 1.0L) * 1.01L;
  std::vector<long double> y(static_cast<std::size_t>(m), 0.0L);
  
  // `length2` is the squared norm of the leaf in the scaled basis; once a
  // witness is known nothing longer can beat it, so the radius shrinks to it.
  auto leaf = [&](long double length2) {
    Index top = -1;
    for (Index i = m - 1; i >= 0; --i)
      if (y[static_cast<std::size_t>(i)] != 0.0L) {
        top = i;
        break;
      }
    if (top < 0 || y[static_cast<std::size_t>(top)] < 0.0L) return;  // zero, or the mirror image
    BigMatrix yc(1, m);
    for (Index i = 0; i < m; ++i) yc(0, i) = Big(static_cast<double>(y[static_cast<std::size_t>(i)]));
    const BigMatrix cb = yc * ur;
    Candidate cand;
    for (Index i = 0; i < k; ++i) {
      const Big ci = cb(0, i);
      if (boost::multiprecision::abs(ci) > Big(cfg.coefficient_bound)) return;
      cand.c.push_back(static_cast<std::int64_t>(ci));
      cand.c2 += static_cast<long double>(ci) * static_cast<long double>(ci);
    }
    cand.norm = value_of(cb).norm();
    if (cand.norm <= zero_tol) return;
    sign_normalize(cand.c);
    if (!out.shortest || cand.norm < out.shortest->norm || (cand.norm == out.shortest->norm && better(cand, *out.shortest)))
      out.shortest = cand;
    if (cand.norm < cfg.epsilon && (!out.witness || better(cand, *out.witness))) {
      out.witness = cand;
      radius2 = std::min(radius2, length2 * (1.0L + 1e-9L));
    }
  };

  // Fincke-Pohst enumeration, depth-first from the last Gram-Schmidt vector,
  // visiting each level in zigzag order outward from its center.
  auto enumerate = [&](auto&& self, Index level, long double partial) -> void {
    if (out.exhausted) return;
    long double center = 0.0L;
    for (Index j = level + 1; j < m; ++j) center -= y[static_cast<std::size_t>(j)] * mu(j, level);
    const long double norm = bn[static_cast<std::size_t>(level)];
    if (norm <= 0.0L) return;
    const long double start = std::round(center);
    for (long double step = 0.0L;; step += 1.0L) {
      bool any = false;
      for (long double v : {start + step, start - step}) {
        if (step == 0.0L && v != start + step) continue;
        const long double next = partial + (v - center) * (v - center) * norm;
        if (next > radius2) continue;
        any = true;
        if (++out.nodes > cfg.node_budget) {
          out.exhausted = true;
          break;
        }
        y[static_cast<std::size_t>(level)] = v;
        if (level == 0) {
          leaf(next);
        } else {
          self(self, level - 1, next);
        }
        if (out.exhausted) break;
      }
      // start is the nearest integer, so once both sides leave the radius
      // every further step does too.
      if (out.exhausted || !any) break;
    }
    y[static_cast<std::size_t>(level)] = 0.0L;
  };
  enumerate(enumerate, m - 1, 0.0L);

  return out;
}

DiscretenessResult subgroup_discreteness(const std::vector<Vector<double>>& generators,
                                         const SubgroupSearchConfig& cfg) {
  cfg.validate();
  check_generators(generators.size());
  DiscretenessResult result;
  const Index k = static_cast<Index>(generators.size());
  if (k == 0) {
    result.verdict = Verdict::Discrete;
    result.note = "trivial group";
    return result;
  }
  const Index d = generators[0].size();
  for (const auto& g : generators)
    if (g.size() != d) throw DimensionMismatch("generators must share one dimension");

  const double bound = static_cast<double>(cfg.coefficient_bound);
  double gsum = 0.0;
  for (const auto& g : generators) gsum += g.norm();
  const double zero_tol = 4.0 * static_cast<double>(k) * kUnitRoundoff * bound * gsum;
  const double gray = kGrayFactor * cfg.epsilon;

  // Witnesses lie in the small ball scaled by epsilon; the gray-zone pass
  // scaled by 1000*epsilon only runs when that one is empty.
  Search first = search_box(generators, cfg, cfg.epsilon, zero_tol);
  result.relations = first.relations;
  result.nodes = first.nodes;
  if (first.trivial) {
    result.verdict = Verdict::Discrete;
    result.note = "generators are integer relations of each other; trivial group";
    return result;
  }
  const std::optional<Candidate> best_witness = first.witness;
  std::optional<Candidate> shortest = first.shortest;
  bool exhausted = first.exhausted;
  if (!best_witness && !exhausted) {
    const Search second = search_box(generators, cfg, gray, zero_tol);
    result.nodes += second.nodes;
    exhausted = second.exhausted;
    if (second.shortest && (!shortest || second.shortest->norm < shortest->norm)) shortest = second.shortest;
  }

  if (shortest) {
    result.shortest = shortest->norm;
    result.shortest_coefficients = shortest->c;
  }
  if (best_witness) {
    result.verdict = Verdict::NonDiscreteWitness;
    result.coefficients = best_witness->c;
    Vector<double> w = Vector<double>::Zero(d);
    for (Index i = 0; i < k; ++i)
      w += static_cast<double>(best_witness->c[static_cast<std::size_t>(i)]) * generators[static_cast<std::size_t>(i)];
    result.witness = w;
    result.note = "nonzero combination below epsilon";
  } else if (exhausted) {
    result.verdict = Verdict::Inconclusive;
    result.note = "enumeration budget exhausted";
  } else if (shortest && shortest->norm <= gray) {
    result.verdict = Verdict::Inconclusive;
    result.note = "shortest combination lies between epsilon and 1000*epsilon";
  } else {
    result.verdict = Verdict::Discrete;
    result.note = "no nonzero combination within the bound is shorter than 1000*epsilon";
  }
  return result;
}

Matrix<Integer> hermite_normal_form(Matrix<Integer> a) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  Index r = 0;
  for (Index col = 0; col < cols && r < rows; ++col) {
    while (true) {
      Index pivot = -1;
      for (Index i = r; i < rows; ++i)
        if (a(i, col) != 0 && (pivot < 0 || abs(a(i, col)) < abs(a(pivot, col)))) pivot = i;
      if (pivot < 0) break;
      a.row(pivot).swap(a.row(r));
      bool clean = true;
      for (Index i = r + 1; i < rows; ++i) {
        if (a(i, col) == 0) continue;
        const Integer q = a(i, col) / a(r, col);
        a.row(i) -= q * a.row(r);
        if (a(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, col) == 0) continue;
    if (a(r, col) < 0) a.row(r) = -a.row(r);
    for (Index i = 0; i < r; ++i) {
      Integer q = a(i, col) / a(r, col);
      if (a(i, col) - q * a(r, col) < 0) q -= 1;
      a.row(i) -= q * a.row(r);
    }
    ++r;
  }
  return a.topRows(r);
}

DiscretenessResult subgroup_discreteness_exact(const std::vector<Vector<Rational>>& generators) {
  check_generators(generators.size());
  DiscretenessResult result;
  result.verdict = Verdict::Discrete;
  const Index k = static_cast<Index>(generators.size());
  const Index d = k == 0 ? 0 : generators[0].size();
  Integer lcd = 1;
  for (const auto& g : generators) {
    if (g.size() != d) throw DimensionMismatch("generators must share one dimension");
    for (Index j = 0; j < d; ++j) lcd = boost::multiprecision::lcm(lcd, denominator(g(j)));
  }
  Matrix<Integer> a(k, d);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < d; ++j) a(i, j) = numerator(generators[static_cast<std::size_t>(i)](j) * Rational(lcd));
  const Matrix<Integer> h = hermite_normal_form(a);
  result.lattice_basis.resize(h.rows(), d);
  for (Index i = 0; i < h.rows(); ++i)
    for (Index j = 0; j < d; ++j) result.lattice_basis(i, j) = Rational(h(i, j), lcd);
  result.relations = static_cast<std::size_t>(k - h.rows());
  if (h.rows() > 0) {
    double shortest = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < h.rows(); ++i) shortest = std::min(shortest, to_double_matrix(Matrix<Rational>(result.lattice_basis.row(i))).norm());
    result.shortest = shortest;
  }
  result.note = "finitely generated subgroup of Q^d: a lattice of rank " + std::to_string(h.rows());
  return result;
}

ProjectionResult quotient_projection_discreteness(const std::vector<Vector<double>>& generators,
                                                  const Matrix<double>& ideal_basis,
                                                  const SubgroupSearchConfig& cfg) {
  const Index d = generators.empty() ? ideal_basis.rows() : generators[0].size();
  if (ideal_basis.rows() != d) throw DimensionMismatch("ideal basis does not live in the generators' space");
  const Index r = rank<double>(ideal_basis);
  if (r != ideal_basis.cols()) throw std::invalid_argument("ideal basis columns are dependent");
  Matrix<double> complement;
  Matrix<double> ideal_proj = Matrix<double>::Zero(d, d);
  if (r == 0) {
    complement = Matrix<double>::Identity(d, d);
  } else {
    Eigen::HouseholderQR<Matrix<double>> qr(ideal_basis);
    const Matrix<double> q = qr.householderQ() * Matrix<double>::Identity(d, d);
    complement = q.rightCols(d - r);
    ideal_proj = q.leftCols(r) * q.leftCols(r).transpose();
  }
  ProjectionResult out;
  for (const auto& g : generators) out.projected.push_back(complement.transpose() * g);
  out.discreteness = subgroup_discreteness(out.projected, cfg);
  if (out.discreteness.verdict == Verdict::NonDiscreteWitness) {
    Vector<double> x = Vector<double>::Zero(d);
    for (std::size_t i = 0; i < generators.size(); ++i)
      x += static_cast<double>(out.discreteness.coefficients[i]) * generators[i];
    const Vector<double> y = 2.0 * ideal_proj * x;
    out.replay = SequenceTerm{x, y, (2.0 * x - y).norm()};
  }
  return out;
}

ProjectionResult quotient_projection_discreteness_exact(const std::vector<Vector<Rational>>& generators,
                                                        const Matrix<Rational>& ideal_basis) {
  const Index d = ideal_basis.rows();
  for (const auto& g : generators)
    if (g.size() != d) throw DimensionMismatch("ideal basis does not live in the generators' space");
  Matrix<Rational> candidates(d, ideal_basis.cols() + d);
  candidates << ideal_basis, Matrix<Rational>::Identity(d, d);
  std::vector<Index> picked;
  const Matrix<Rational> full = span_basis<Rational>(candidates, {}, &picked);
  const Index r = rank<Rational>(ideal_basis);
  if (r != ideal_basis.cols()) throw std::invalid_argument("ideal basis columns are dependent");
  std::vector<Vector<Rational>> projected;
  ProjectionResult out;
  for (const auto& g : generators) {
    const Vector<Rational> c = *coordinates<Rational>(full, g);
    projected.push_back(c.tail(d - r));
    out.projected.push_back(to_double_matrix(Matrix<Rational>(projected.back())));
  }
  out.discreteness = subgroup_discreteness_exact(projected);
  return out;
}

std::vector<SequenceTerm> projection_sequence(const std::vector<Vector<double>>& generators,
                                              const Matrix<double>& ideal_basis, int steps,
                                              std::int64_t coefficient_bound) {
  std::vector<SequenceTerm> terms;
  SubgroupSearchConfig cfg;
  cfg.coefficient_bound = coefficient_bound;
  for (int s = 1; s <= steps; ++s) {
    cfg.epsilon = std::pow(10.0, -s);
    const ProjectionResult r = quotient_projection_discreteness(generators, ideal_basis, cfg);
    if (r.replay) terms.push_back(*r.replay);
  }
  return terms;
}

}  // namespace lts
