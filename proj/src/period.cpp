#include "lts/period.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace lts {

const char* const kKernelLatticeCaveat =
    "This is the kernel of Exp restricted to the center for the given matrix pair. The pair's total space need "
    "not be simply connected, so this lattice is not the period group of the Lie triple system; it coincides "
    "with the period group only when the total space is 1-connected. For a finite-dimensional Lie triple "
    "system the period group itself is trivial.";

namespace {

double residual_at(const MatrixSymmetricPair& pair, const Vector<double>& z, double t) {
  return coset_residual(pair, exp_pair(pair, z, t), base_point(pair));
}

// Minimizer of f on [a, b] by golden-section search.
double golden_section(const std::function<double(double)>& f, double a, double b) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(b)); ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? c : d;
}

}  // namespace

KernelLattice kernel_lattice_1d(const MatrixSymmetricPair& pair, const Vector<double>& z, double t_max,
                                const ScanConfig& scan) {
  if (!(t_max > 0)) throw std::invalid_argument("t_max must be positive");
  const Tolerance& tol = pair.tolerance();
  const auto zm = pair.to_minus(z);
  if (!zm || zm->norm() == 0.0) throw CenterMismatch("direction is not a nonzero element of the -1 eigenspace");
  const Subspace<double> c = center(pair.derived(), tol);
  if (c.dim() != 1) throw CenterMismatch("center of the derived LTS has dimension " + std::to_string(c.dim()) + ", not 1");
  if (!c.contains(*zm, tol)) throw CenterMismatch("direction is not in the center of the derived LTS");

  KernelLattice out;
  out.ambient_dim = 1;
  out.search_bound = t_max;

  const std::size_t n = std::max(scan.min_samples, static_cast<std::size_t>(std::ceil(t_max / scan.step)));
  std::vector<double> ts(n + 1);
  std::vector<double> rs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    ts[i] = t_max * static_cast<double>(i) / static_cast<double>(n);
    rs[i] = residual_at(pair, z, ts[i]);
  }
  const double gap_level = 10.0 * tol.membership_tol;
  std::size_t start = 1;
  while (start <= n && rs[start] <= gap_level) ++start;
  if (start > n) {
    out.note = "Exp(t z) never leaves the base point on (0, t_max]";
    return out;
  }
  auto f = [&](double t) { return residual_at(pair, z, t); };
  double gap = 0.0;
  for (std::size_t i = start; i <= n; ++i) {
    gap = std::max(gap, rs[i]);
    const bool left = rs[i] <= rs[i - 1];
    const bool right = i == n || rs[i] <= rs[i + 1];
    if (!left || !right) continue;
    const double lo = ts[i - 1];
    const double hi = i == n ? ts[i] : ts[i + 1];
    const double t = golden_section(f, lo, hi);
    const double r = f(t);
    if (r <= tol.membership_tol) {
      out.generators.push_back(Vector<double>::Constant(1, t));
      out.residuals = {r, gap};
      if (gap > gap_level) {
        out.verdict = Verdict::Discrete;
        out.note = "smallest positive period isolated from 0";
      } else {
        out.note = "period found but not separated from 0 by the isolation gap";
      }
      return out;
    }
  }
  out.note = "no period found on (0, t_max]";
  return out;
}

KernelLattice product_lattice(const KernelLattice& a, const KernelLattice& b) {
  KernelLattice out;
  out.ambient_dim = a.ambient_dim + b.ambient_dim;
  out.search_bound = std::max(a.search_bound, b.search_bound);
  for (const auto& g : a.generators) {
    Vector<double> v = Vector<double>::Zero(out.ambient_dim);
    v.head(a.ambient_dim) = g;
    out.generators.push_back(v);
  }
  for (const auto& g : b.generators) {
    Vector<double> v = Vector<double>::Zero(out.ambient_dim);
    v.tail(b.ambient_dim) = g;
    out.generators.push_back(v);
  }
  out.residuals = a.residuals;
  out.residuals.insert(out.residuals.end(), b.residuals.begin(), b.residuals.end());
  if (a.witness || b.witness) {
    out.verdict = Verdict::NonDiscreteWitness;
    Vector<double> w = Vector<double>::Zero(out.ambient_dim);
    if (a.witness) {
      w.head(a.ambient_dim) = *a.witness;
      out.witness_coefficients = a.witness_coefficients;
      out.witness_coefficients.resize(a.generators.size() + b.generators.size(), 0);
    } else {
      w.tail(b.ambient_dim) = *b.witness;
      out.witness_coefficients.assign(a.generators.size(), 0);
      out.witness_coefficients.insert(out.witness_coefficients.end(), b.witness_coefficients.begin(),
                                      b.witness_coefficients.end());
    }
    out.witness = w;
    out.note = "witness inherited from a factor";
  } else if (a.verdict == Verdict::Discrete && b.verdict == Verdict::Discrete) {
    out.verdict = Verdict::Discrete;
    out.note = "both factors discrete";
  } else {
    out.verdict = Verdict::Inconclusive;
    out.note = "a factor is inconclusive";
  }
  return out;
}

KernelLattice lattice_from_generators(std::vector<Vector<double>> generators, const SubgroupSearchConfig& cfg) {
  KernelLattice out;
  out.ambient_dim = generators.empty() ? 0 : generators[0].size();
  out.search_bound = static_cast<double>(cfg.coefficient_bound);
  const DiscretenessResult r = subgroup_discreteness(generators, cfg);
  out.generators = std::move(generators);
  out.verdict = r.verdict;
  out.witness = r.witness;
  out.witness_coefficients = r.coefficients;
  out.note = r.note;
  return out;
}

GridLoopEvaluation evaluate_grid_loop(const MatrixSymmetricPair& pair, const Vector<double>& z,
                                      const std::vector<double>& values, double period) {
  GridLoopEvaluation e;
  if (values.size() < 3) throw std::invalid_argument("grid loop needs at least 3 nodes");
  e.endpoints_zero = values.front() == 0.0 && values.back() == 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double r = residual_at(pair, z, values[k]);
    e.worst_residual = std::max(e.worst_residual, r);
    if (r > pair.tolerance().membership_tol) e.nodes_in_kernel = false;
    if (k > 0 && std::abs(values[k] - values[k - 1]) >= 0.5 * period) e.steps_within_bound = false;
  }
  return e;
}

GridLoopReport grid_loop_period_check(const MatrixSymmetricPair& pair, const Vector<double>& z, Index T,
                                      double t_max) {
  if (T < 3) throw std::invalid_argument("grid loop needs T >= 3");
  const KernelLattice lattice = kernel_lattice_1d(pair, z, t_max);
  if (lattice.generators.empty()) throw std::runtime_error("grid loop check: no period found along z");
  const double p = lattice.generators[0](0);

  GridLoopReport report;
  report.T = T;
  report.period = p;
  std::vector<double> values;
  for (int j = -100; j <= 100; ++j) values.push_back(j * (p / 50.0));
  for (int m = -2; m <= 2; ++m) values.push_back(m * p);
  report.scanned_values = values.size();
  for (double v : values) {
    if (residual_at(pair, z, v) > pair.tolerance().membership_tol) continue;
    const bool seen = std::any_of(report.kernel_hits.begin(), report.kernel_hits.end(),
                                  [&](double h) { return std::abs(h - v) <= 1e-9 * std::max(1.0, p); });
    if (!seen) report.kernel_hits.push_back(v);
  }
  std::sort(report.kernel_hits.begin(), report.kernel_hits.end());

  // Every assignment of kernel hits to the T-2 interior nodes.
  const std::size_t inner = static_cast<std::size_t>(T - 2);
  const std::size_t h = report.kernel_hits.size();
  std::vector<std::size_t> idx(inner, 0);
  bool only_zero = true;
  while (true) {
    std::vector<double> loop{0.0};
    for (std::size_t k = 0; k < inner; ++k) loop.push_back(report.kernel_hits[idx[k]]);
    loop.push_back(0.0);
    ++report.loops_checked;
    bool steps_ok = true;
    for (std::size_t k = 1; k < loop.size(); ++k)
      if (std::abs(loop[k] - loop[k - 1]) >= 0.5 * p) steps_ok = false;
    if (steps_ok) {
      ++report.passing_loops;
      if (std::any_of(loop.begin(), loop.end(), [](double v) { return v != 0.0; })) only_zero = false;
    }
    std::size_t k = 0;
    while (k < inner && ++idx[k] == h) idx[k++] = 0;
    if (k == inner) break;
  }
  report.only_zero_loop = only_zero && report.passing_loops == 1;
  return report;
}

}  // namespace lts
