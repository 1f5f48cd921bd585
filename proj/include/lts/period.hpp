#pragma once

#include "lts/lattice.hpp"
#include "lts/symmetric_pair.hpp"

namespace lts {

// Fixed wording attached to every kernel-lattice report.
extern const char* const kKernelLatticeCaveat;

struct KernelLattice {
  // The center in its own coordinates; generators are vectors in it.
  Index ambient_dim = 0;
  std::vector<Vector<double>> generators;
  double search_bound = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Vector<double>> witness;
  std::vector<std::int64_t> witness_coefficients;
  // Membership residual at each generator, then the largest residual seen
  // strictly between 0 and the first generator.
  std::vector<double> residuals;
  std::string note;
  std::string caveat = kKernelLatticeCaveat;
};

class CenterMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ScanConfig {
  // Samples over (0, t_max]; at least this many.
  std::size_t min_samples = 2000;
  double step = 0.005;
};

// Smallest t in (0, t_max] with Exp(t z) = base point. z (lie_basis
// coefficients) must span the center of the derived LTS, which must be
// 1-dimensional (CenterMismatch otherwise). When no period is found the
// generator list is empty and the verdict Inconclusive.
KernelLattice kernel_lattice_1d(const MatrixSymmetricPair& pair, const Vector<double>& z, double t_max,
                                const ScanConfig& scan = {});

// Block-embedded union of generators. Any witness is inherited; Discrete only
// when both factors are Discrete.
KernelLattice product_lattice(const KernelLattice& a, const KernelLattice& b);

// Reruns the discreteness decision on an explicit generator list.
KernelLattice lattice_from_generators(std::vector<Vector<double>> generators, const SubgroupSearchConfig& cfg = {});

struct GridLoopEvaluation {
  bool endpoints_zero = true;
  bool nodes_in_kernel = true;
  bool steps_within_bound = true;
  double worst_residual = 0.0;
  bool passes() const { return endpoints_zero && nodes_in_kernel && steps_within_bound; }
};

// A loop on the grid t_0..t_{T-1} along direction z with node values `values`
// (T entries). Steps must stay below half the period.
GridLoopEvaluation evaluate_grid_loop(const MatrixSymmetricPair& pair, const Vector<double>& z,
                                      const std::vector<double>& values, double period);

struct GridLoopReport {
  Index T = 0;
  double period = 0.0;
  std::size_t scanned_values = 0;
  std::vector<double> kernel_hits;
  std::size_t loops_checked = 0;
  std::size_t passing_loops = 0;
  bool only_zero_loop = false;
};

// Scans node values on [-2p, 2p] (step p/50 plus exact multiples of p), keeps
// those where Exp returns to the base point, and enumerates all grid loops
// through them with steps below p/2.
GridLoopReport grid_loop_period_check(const MatrixSymmetricPair& pair, const Vector<double>& z, Index T,
                                      double t_max = 10.0);

}  // namespace lts
