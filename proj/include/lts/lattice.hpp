#pragma once

#include "lts/triple_system.hpp"

#include <cstdint>
#include <limits>

namespace lts {

enum class Verdict { Discrete, NonDiscreteWitness, Inconclusive };

const char* to_string(Verdict v);

struct SubgroupSearchConfig {
  double epsilon = 1e-6;
  std::int64_t coefficient_bound = 1'000'000;
  ScalarMode mode = ScalarMode::Float64;
  // Enumeration nodes visited before giving up with Inconclusive.
  std::uint64_t node_budget = 5'000'000;

  void validate() const;
};

inline constexpr std::size_t kMaxGenerators = 8;

class TooManyGenerators : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct DiscretenessResult {
  Verdict verdict = Verdict::Inconclusive;
  // Nonzero combination sum_i coefficients[i] * g_i with 0 < |w| < epsilon.
  std::optional<Vector<double>> witness;
  std::vector<std::int64_t> coefficients;
  // Shortest nonzero combination seen within the bound (infinity when none).
  double shortest = std::numeric_limits<double>::infinity();
  std::vector<std::int64_t> shortest_coefficients;
  // Integer relations (combinations that vanish up to rounding) found on the way.
  std::size_t relations = 0;
  std::uint64_t nodes = 0;
  // Exact mode: a lattice basis of the generated group (rows).
  Matrix<Rational> lattice_basis;
  std::string note;
};

// Float-mode semi-decision. Integer combinations with |c_i| <= bound are
// searched by LLL reduction followed by Fincke-Pohst enumeration. Combinations
// whose value is below the rounding floor 4 k u B sum|g_i| count as relations,
// not witnesses.
DiscretenessResult subgroup_discreteness(const std::vector<Vector<double>>& generators,
                                         const SubgroupSearchConfig& cfg = {});

// Exact mode: finitely generated subgroups of Q^d are lattices; returns
// Discrete with a Hermite normal form basis.
DiscretenessResult subgroup_discreteness_exact(const std::vector<Vector<Rational>>& generators);

// Hermite normal form of the row lattice of an integer matrix; zero rows dropped.
Matrix<Integer> hermite_normal_form(Matrix<Integer> a);

// A pair (x, y) with x in the group, y in the ideal and |2x - y| = 2|w|.
struct SequenceTerm {
  Vector<double> x;
  Vector<double> y;
  double norm_2x_minus_y = 0.0;
};

struct ProjectionResult {
  DiscretenessResult discreteness;
  // Projected generators in complement coordinates.
  std::vector<Vector<double>> projected;
  std::optional<SequenceTerm> replay;
};

// Projects the generators to a complement of the ideal and decides
// discreteness of the image. Throws DimensionMismatch if the ideal basis does
// not live in R^d.
ProjectionResult quotient_projection_discreteness(const std::vector<Vector<double>>& generators,
                                                  const Matrix<double>& ideal_basis,
                                                  const SubgroupSearchConfig& cfg = {});

ProjectionResult quotient_projection_discreteness_exact(const std::vector<Vector<Rational>>& generators,
                                                        const Matrix<Rational>& ideal_basis);

// Witnesses for epsilon = 10^-1, ..., 10^-steps, with their replayed (x, y):
// a sequence in the group outside the ideal with 2x - y -> 0.
std::vector<SequenceTerm> projection_sequence(const std::vector<Vector<double>>& generators,
                                              const Matrix<double>& ideal_basis, int steps,
                                              std::int64_t coefficient_bound = 1'000'000);

}  // namespace lts
