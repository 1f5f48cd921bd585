#include "cli.hpp"

#include "lts/fixtures.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <numbers>
#include <ostream>

namespace lts::cli {

namespace {

struct Options {
  double tol = 1e-9;
  std::uint64_t seed = 42;
  bool json_out = false;
  bool text_out = false;
};

Tolerance tolerance(const Options& o) {
  Tolerance t;
  t.eq_tol = o.tol;
  t.rank_tol = o.tol;
  t.membership_tol = 10.0 * o.tol;
  t.validate();
  return t;
}

// Thrown for malformed flag values; maps to exit 2 like a ParseError.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void emit(std::ostream& out, const json& report, const Options& o) {
  if (!o.text_out) {
    out << dump(report);
    return;
  }
  for (auto it = report.begin(); it != report.end(); ++it)
    out << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

template <typename Scalar>
Vector<Scalar> parse_vector(const std::string& s) {
  const auto parts = split(s, ',');
  Vector<Scalar> v(static_cast<Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    try {
      const Rational r = parse_rational(parts[i]);
      if constexpr (is_exact_v<Scalar>) {
        v(static_cast<Index>(i)) = r;
      } else {
        v(static_cast<Index>(i)) = static_cast<double>(r);
      }
    } catch (const std::exception&) {
      throw InputError("not a number: '" + parts[i] + "'");
    }
  }
  return v;
}

// Columns separated by ';', entries by ','.
template <typename Scalar>
Matrix<Scalar> parse_columns(const std::string& s, Index rows) {
  if (s.empty()) return Matrix<Scalar>(rows, 0);
  const auto cols = split(s, ';');
  Matrix<Scalar> m(rows, static_cast<Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Vector<Scalar> v = parse_vector<Scalar>(cols[c]);
    if (v.size() != rows) throw InputError("vector '" + cols[c] + "' has wrong length");
    m.col(static_cast<Index>(c)) = v;
  }
  return m;
}

FixedGroupPolicy parse_policy(const std::string& s) {
  if (s == "full" || s == "full_fixed_group") return FixedGroupPolicy::FullFixedGroup;
  if (s == "heuristic" || s == "identity_component_heuristic") return FixedGroupPolicy::IdentityComponentHeuristic;
  throw InputError("unknown policy '" + s + "'");
}

template <typename Scalar>
double max_op_difference(const LieTripleSystem<Scalar>& a, const LieTripleSystem<Scalar>& b) {
  if (a.dim() != b.dim()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j)
      worst = std::max(worst, max_abs(Matrix<Scalar>(a.op(i, j) - b.op(i, j))));
  return worst;
}

// ---- check ----

template <typename Scalar>
void check_symmetric(const SymmetricLieAlgebra<Scalar>& s, const Tolerance& tol, json& report) {
  const AxiomReport lie = verify_lie(s.algebra, tol);
  const InvolutionReport inv = check_involution(s, tol);
  report["jacobi"] = to_json(lie);
  report["involution"] = json{{"involutive", inv.involutive},
                              {"automorphism", inv.automorphism},
                              {"worst_violation", inv.worst_violation}};
  bool ok = lie.ok && inv.involutive && inv.automorphism;
  if (ok) {
    try {
      const AxiomReport derived = verify_axioms(triple_from_involution(s, tol), tol);
      report["derived_lts"] = to_json(derived);
      ok = derived.ok;
    } catch (const std::exception& e) {
      report["derived_lts"] = json{{"ok", false}, {"error", e.what()}};
      ok = false;
    }
  }
  report["ok"] = ok;
}

int cmd_check(const json& doc, const Options& o, json& report) {
  const Tolerance tol = tolerance(o);
  const DocumentKind kind = detect_kind(doc);
  report["kind"] = to_string(kind);
  switch (kind) {
    case DocumentKind::Lts:
      std::visit(
          [&](const auto& m) {
            const AxiomReport r = verify_axioms(m, tol);
            report["dim"] = m.dim();
            report["axioms"] = to_json(r);
            report["ok"] = r.ok;
          },
          lts_from_json(doc));
      break;
    case DocumentKind::LieAlgebra:
      std::visit(
          [&](const auto& g) {
            const AxiomReport r = verify_lie(g, tol);
            report["dim"] = g.dim();
            report["jacobi"] = to_json(r);
            report["ok"] = r.ok;
          },
          lie_algebra_from_json(doc));
      break;
    case DocumentKind::SymmetricLieAlgebra:
      std::visit(
          [&](const auto& s) {
            report["dim"] = s.dim();
            check_symmetric(s, tol, report);
          },
          symmetric_from_json(doc));
      break;
    case DocumentKind::Pair: {
      const PairDocument p = pair_from_json(doc, tol);
      const ResidualReport group = validate_pair(p.pair, o.seed);
      const AxiomReport derived = verify_axioms(p.pair.derived(), tol);
      report["name"] = p.pair.name();
      report["policy"] = to_string(p.pair.policy());
      report["group_involution"] = json{{"ok", group.ok}, {"worst_residual", group.worst_residual}, {"samples", group.samples}};
      report["derived_lts"] = to_json(derived);
      report["ok"] = group.ok && derived.ok;
      break;
    }
  }
  return report["ok"].get<bool>() ? kPass : kFail;
}

// ---- center ----

int cmd_center(const json& doc, const Options& o, json& report) {
  const Tolerance tol = tolerance(o);
  const DocumentKind kind = detect_kind(doc);
  report["kind"] = to_string(kind);
  bool ok = true;
  switch (kind) {
    case DocumentKind::Lts:
      std::visit(
          [&](const auto& m) {
            const AxiomReport r = verify_axioms(m, tol);
            ok = r.ok;
            if (!ok) {
              report["axioms"] = to_json(r);
              return;
            }
            const auto c = center(m, tol);
            report["center"] = subspace_to_json(c);
            report["dim"] = c.dim();
          },
          lts_from_json(doc));
      break;
    case DocumentKind::LieAlgebra:
      std::visit(
          [&](const auto& g) {
            const auto c = lie_center(g, tol);
            report["center"] = subspace_to_json(c);
            report["dim"] = c.dim();
          },
          lie_algebra_from_json(doc));
      break;
    case DocumentKind::SymmetricLieAlgebra:
      std::visit(
          [&](const auto& s) {
            const auto c = lie_center(s, tol);
            const auto split = eigensplit(s, tol);
            const auto cm = center(triple_from_involution(s, tol), tol);
            report["center"] = subspace_to_json(c);
            report["dim"] = c.dim();
            report["minus_center"] = subspace_to_json(cm);
            report["minus_center_dim"] = cm.dim();
            report["minus_basis"] = matrix_to_json(split.minus.basis);
          },
          symmetric_from_json(doc));
      break;
    case DocumentKind::Pair: {
      const PairDocument p = pair_from_json(doc, tol);
      const auto c = center(p.pair.derived(), tol);
      report["minus_center"] = subspace_to_json(c);
      report["minus_center_dim"] = c.dim();
      // Back in lie_basis coefficients.
      report["center_lie_coefficients"] = matrix_to_json<double>(p.pair.split().minus.basis * c.basis);
      break;
    }
  }
  report["ok"] = ok;
  return ok ? kPass : kFail;
}

// ---- embed ----

template <typename Scalar>
int embed_impl(const LieTripleSystem<Scalar>& m, const Tolerance& tol, const std::string& out_path, json& report) {
  report["dim"] = m.dim();
  StandardEmbedding<Scalar> e;
  try {
    e = standard_embedding(m, tol);
  } catch (const AxiomDefect& ex) {
    report["ok"] = false;
    report["error"] = ex.what();
    report["axioms"] = to_json(verify_axioms(m, tol));
    return kFail;
  }
  const AxiomReport jac = verify_lie(e.algebra.algebra, tol);
  const InvolutionReport inv = check_involution(e.algebra, tol);
  const LieTripleSystem<Scalar> back = triple_from_involution(e.algebra, tol);
  const bool round_trip = is_exact_v<Scalar> ? back == m : max_op_difference(back, m) <= tol.eq_tol;

  const Subspace<Scalar> zs = lie_center(e.algebra.algebra, tol);
  const Subspace<Scalar> zm = center(m, tol);
  const Subspace<Scalar> embedded = Subspace<Scalar>::span(Matrix<Scalar>(e.embedding * zm.basis), tol);
  const bool centers_agree = same_subspace(zs, embedded, tol);

  report["S_dim"] = e.algebra.dim();
  report["h_dim"] = e.h_dim();
  json pairs = json::array();
  for (const auto& [i, j] : e.h_pairs) pairs.push_back(json::array({i, j}));
  report["h_pairs"] = pairs;
  report["jacobi"] = to_json(jac);
  report["theta_automorphism"] = inv.involutive && inv.automorphism;
  report["round_trip"] = round_trip;
  report["center_dim"] = zs.dim();
  report["center"] = centers_agree ? "coincides with z(m)" : "differs from z(m)";
  const bool ok = jac.ok && inv.involutive && inv.automorphism && round_trip && centers_agree;
  report["ok"] = ok;
  if (!out_path.empty()) {
    save_json_file(out_path, to_json(e.algebra));
    report["written"] = out_path;
  }
  return ok ? kPass : kFail;
}

// ---- quotient / product ----

template <typename Scalar>
int quotient_impl(const LieTripleSystem<Scalar>& m, const std::string& ideal_text, const Tolerance& tol,
                  const std::string& out_path, json& report) {
  const Subspace<Scalar> n = Subspace<Scalar>::span(parse_columns<Scalar>(ideal_text, m.dim()), tol);
  report["ideal_dim"] = n.dim();
  const bool ideal = is_ideal(m, n, tol);
  report["is_ideal"] = ideal;
  if (!ideal) {
    report["ok"] = false;
    return kFail;
  }
  const QuotientResult<Scalar> q = quotient(m, n, tol);
  report["quotient_dim"] = q.system.dim();
  report["projection_certified"] = q.projection.certified();
  report["quotient"] = to_json(q.system);
  report["ok"] = q.projection.certified();
  if (!out_path.empty()) save_json_file(out_path, to_json(q.system));
  return q.projection.certified() ? kPass : kFail;
}

// ---- pairs ----

PairDocument load_pair(const std::string& path, const Tolerance& tol, const std::string& policy) {
  PairDocument p = pair_from_json(load_json_file(path), tol);
  if (!policy.empty()) p.pair = p.pair.with_policy(parse_policy(policy));
  return p;
}

Vector<double> direction_or(const PairDocument& p, const std::string& text) {
  if (!text.empty()) {
    Vector<double> v = parse_vector<double>(text);
    if (v.size() != p.pair.dim()) throw InputError("direction must have " + std::to_string(p.pair.dim()) + " entries");
    return v;
  }
  if (!p.direction) throw InputError("no --direction given and the pair file has none");
  return *p.direction;
}

struct PeriodFlags {
  std::string direction;
  double t_max = 10.0;
  double epsilon = 1e-6;
  std::int64_t bound = 1'000'000;
  std::string policy;
  std::string subgroup;
  Index dim = 1;
  bool exact = false;
};

SubgroupSearchConfig search_config(const PeriodFlags& f) {
  SubgroupSearchConfig cfg;
  cfg.epsilon = f.epsilon;
  cfg.coefficient_bound = f.bound;
  cfg.mode = f.exact ? ScalarMode::ExactRational : ScalarMode::Float64;
  try {
    cfg.validate();
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return cfg;
}

int verdict_exit(Verdict v) { return v == Verdict::Inconclusive ? kFail : kPass; }

int cmd_period_subgroup(const PeriodFlags& f, json& report) {
  const SubgroupSearchConfig cfg = search_config(f);
  if (f.dim < 1) throw InputError("--dim must be at least 1");
  const auto entries = split(f.subgroup, ',');
  if (entries.size() % static_cast<std::size_t>(f.dim) != 0)
    throw InputError("--subgroup entry count is not a multiple of --dim");
  const std::size_t k = entries.size() / static_cast<std::size_t>(f.dim);
  report["dim"] = f.dim;
  report["mode"] = f.exact ? "rational" : "float";
  DiscretenessResult r;
  json gens = json::array();
  if (f.exact) {
    const Vector<Rational> all = parse_vector<Rational>(f.subgroup);
    std::vector<Vector<Rational>> g;
    for (std::size_t i = 0; i < k; ++i) g.push_back(all.segment(static_cast<Index>(i) * f.dim, f.dim));
    for (const auto& v : g) gens.push_back(vector_to_json(v));
    r = subgroup_discreteness_exact(g);
  } else {
    const Vector<double> all = parse_vector<double>(f.subgroup);
    std::vector<Vector<double>> g;
    for (std::size_t i = 0; i < k; ++i) g.push_back(all.segment(static_cast<Index>(i) * f.dim, f.dim));
    for (const auto& v : g) gens.push_back(vector_to_json(v));
    r = subgroup_discreteness(g, cfg);
  }
  report["generators"] = gens;
  report.update(to_json(r));
  return verdict_exit(r.verdict);
}

int cmd_period_pair(const std::string& path, const PeriodFlags& f, const Tolerance& tol, json& report) {
  const SubgroupSearchConfig cfg = search_config(f);
  if (!(f.t_max > 0)) throw InputError("--tmax must be positive");
  const PairDocument p = load_pair(path, tol, f.policy);
  const Vector<double> z = direction_or(p, f.direction);
  KernelLattice lattice;
  try {
    lattice = kernel_lattice_1d(p.pair, z, f.t_max);
  } catch (const CenterMismatch& e) {
    throw InputError(e.what());
  }
  report["pair"] = p.pair.name();
  report["policy"] = to_string(p.pair.policy());
  report["direction"] = vector_to_json(z);
  report["t_max"] = f.t_max;
  report.update(to_json(lattice));
  if (!lattice.generators.empty()) {
    const DiscretenessResult d = subgroup_discreteness(lattice.generators, cfg);
    report["discreteness"] = to_json(d);
    report["period_over_pi"] = lattice.generators[0](0) / std::numbers::pi;
  }
  return verdict_exit(lattice.verdict);
}

int cmd_pair_exp(const std::string& path, const std::string& x_text, double t, const Tolerance& tol, json& report) {
  const PairDocument p = load_pair(path, tol, "");
  const Vector<double> x = direction_or(p, x_text);
  if (!p.pair.to_minus(x)) throw InputError("x is not in the -1 eigenspace of theta");
  const CosetPoint q = exp_pair(p.pair, x, t);
  report["pair"] = p.pair.name();
  report["x"] = vector_to_json(x);
  report["t"] = t;
  report["representative"] = matrix_to_json(q.rep);
  report["distance_to_base"] = coset_residual(p.pair, q, base_point(p.pair));
  report["ok"] = true;
  return kPass;
}

int cmd_geodesic(const std::string& path, const std::string& v_text, const Options& o, json& report) {
  const Tolerance tol = tolerance(o);
  const PairDocument p = load_pair(path, tol, "");
  Vector<double> v;
  if (!v_text.empty() || p.direction) {
    v = direction_or(p, v_text);
  } else {
    std::mt19937_64 rng(o.seed);
    v = random_minus(p.pair, rng);
  }
  if (!p.pair.to_minus(v)) throw InputError("velocity is not in the -1 eigenspace of theta");
  const Geodesic geo = make_geodesic(p.pair, v);
  double worst = 0.0;
  std::size_t samples = 0;
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) {
      const double s = 0.25 * a;
      const double t = 0.25 * b;
      const CosetPoint lhs = translate(geo, s, geodesic_point(geo, t));
      worst = std::max(worst, coset_residual(p.pair, lhs, geodesic_point(geo, t + s)));
      ++samples;
    }
  const bool ok = worst < 1e-8;
  report["pair"] = p.pair.name();
  report["velocity"] = vector_to_json(v);
  report["samples"] = samples;
  report["worst_residual"] = worst;
  report["ok"] = ok;
  return ok ? kPass : kFail;
}

// ---- demos ----

int cmd_quotient_demo(const std::string& slope, bool zero_ideal, const Options& o, json& report) {
  const Tolerance tol = tolerance(o);
  const MatrixSymmetricPair pair = fixtures::u_o_pair(2, FixedGroupPolicy::FullFixedGroup, tol);
  const KernelLattice l = kernel_lattice_1d(pair, fixtures::u_center_direction(2), 10.0);
  if (l.generators.empty()) {
    report["ok"] = false;
    report["note"] = "no period found for u(2)/o(2)";
    return kFail;
  }
  const double p = l.generators[0](0);
  // Kernel lattice of m x m on its 2-dim center is p Z^2; work in units of p.
  report["period"] = p;
  report["generators_absolute"] = json::array({json::array({p, 0.0}), json::array({0.0, p})});
  report["generators"] = json::array({json::array({1, 0}), json::array({0, 1})});
  if (zero_ideal) {
    report["mode"] = "exact";
    report["ideal"] = json::array();
    const ProjectionResult r = quotient_projection_discreteness_exact(
        {Vector<Rational>::Unit(2, 0), Vector<Rational>::Unit(2, 1)}, Matrix<Rational>(2, 0));
    report.update(to_json(r.discreteness));
    return verdict_exit(r.discreteness.verdict);
  }
  if (slope != "sqrt2") {
    Rational s;
    try {
      s = parse_rational(slope);
    } catch (const std::exception&) {
      throw InputError("--slope must be 'sqrt2' or a rational number");
    }
    Matrix<Rational> ideal(2, 1);
    ideal << Rational(1), s;
    report["mode"] = "exact";
    report["ideal"] = json::array({json::array({scalar_to_json(Rational(1)), scalar_to_json(s)})});
    const ProjectionResult r = quotient_projection_discreteness_exact(
        {Vector<Rational>::Unit(2, 0), Vector<Rational>::Unit(2, 1)}, ideal);
    report.update(to_json(r.discreteness));
    return verdict_exit(r.discreteness.verdict);
  }
  Matrix<double> ideal(2, 1);
  ideal << 1.0, std::sqrt(2.0);
  report["mode"] = "float";
  report["ideal"] = json::array({json::array({1.0, std::sqrt(2.0)})});
  const std::vector<Vector<double>> gens{Vector<double>::Unit(2, 0), Vector<double>::Unit(2, 1)};
  const ProjectionResult r = quotient_projection_discreteness(gens, ideal);
  report.update(to_json(r.discreteness));
  json projected = json::array();
  for (const auto& v : r.projected) projected.push_back(vector_to_json(v));
  report["projected_generators"] = projected;
  if (r.replay) {
    report["replay"] = json{{"x", vector_to_json(r.replay->x)},
                            {"y", vector_to_json(r.replay->y)},
                            {"norm_2x_minus_y", r.replay->norm_2x_minus_y}};
  }
  json seq = json::array();
  for (const auto& term : projection_sequence(gens, ideal, 6))
    seq.push_back(json{{"x", vector_to_json(term.x)}, {"norm_2x_minus_y", term.norm_2x_minus_y}});
  report["sequence"] = seq;
  return verdict_exit(r.discreteness.verdict);
}

int cmd_loop_demo(const std::string& path, Index T, const Options& o, json& report) {
  const Tolerance tol = tolerance(o);
  if (T < 3) throw InputError("--T must be at least 3");
  PairDocument p{fixtures::u_o_pair(2, FixedGroupPolicy::FullFixedGroup, tol), fixtures::u_center_direction(2)};
  if (!path.empty()) p = load_pair(path, tol, "");
  const Vector<double> z = direction_or(p, "");
  GridLoopReport r;
  try {
    r = grid_loop_period_check(p.pair, z, T);
  } catch (const CenterMismatch& e) {
    throw InputError(e.what());
  }
  report["pair"] = p.pair.name();
  report.update(to_json(r));
  // A loop through one full period: every node in the kernel, but the step is too long.
  std::vector<double> jump(static_cast<std::size_t>(T), 0.0);
  jump[1] = r.period;
  const GridLoopEvaluation e = evaluate_grid_loop(p.pair, z, jump, r.period);
  report["period_jump_loop"] = json{{"nodes_in_kernel", e.nodes_in_kernel},
                                    {"steps_within_bound", e.steps_within_bound},
                                    {"passes", e.passes()}};
  // Center of the grid loop system against the lifted center, on the derived LTS.
  const auto grid = grid_path_system(p.pair.derived(), T, GridConstraint::LoopZeroAtBothEnds);
  const bool center_identity = same_subspace(center(grid.system, tol), grid_lift(grid, center(p.pair.derived(), tol)), tol);
  report["center_identity"] = center_identity;
  const bool ok = r.only_zero_loop && !e.passes() && center_identity;
  report["ok"] = ok;
  return ok ? kPass : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie triple systems, symmetric pairs and kernel lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--tol", o.tol, "equality and rank tolerance; membership uses 10x")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "seed for sampled checks");
  app.add_flag("--json", o.json_out, "JSON report (default)");
  app.add_flag("--text", o.text_out, "key: value report");

  std::string path, path2, out_path, ideal_text, x_text, slope = "sqrt2";
  double t = 1.0;
  Index T = 3;
  bool zero_ideal = false;
  PeriodFlags pf;

  auto* check = app.add_subcommand("check", "verify the axioms of a fixture");
  check->add_option("path", path)->required();
  auto* center_cmd = app.add_subcommand("center", "center of an LTS, Lie algebra, symmetric algebra or pair");
  center_cmd->add_option("path", path)->required();
  auto* embed = app.add_subcommand("embed", "standard embedding of an LTS");
  embed->add_option("path", path)->required();
  embed->add_option("--out", out_path, "write S(m) as a symmetric Lie algebra document");
  auto* quot = app.add_subcommand("quotient", "quotient of an LTS by an ideal");
  quot->add_option("path", path)->required();
  quot->add_option("--ideal", ideal_text, "ideal basis: columns separated by ';', entries by ','")->required();
  quot->add_option("--out", out_path);
  auto* product = app.add_subcommand("product", "direct product of two LTS");
  product->add_option("first", path)->required();
  product->add_option("second", path2)->required();
  product->add_option("--out", out_path);
  auto* pexp = app.add_subcommand("pair-exp", "Exp(t x) on a symmetric pair");
  pexp->add_option("path", path)->required();
  pexp->add_option("--x", x_text, "lie_basis coefficients (default: the file's direction)");
  pexp->add_option("--t", t);
  auto* geo = app.add_subcommand("geodesic", "check the translation law along a geodesic");
  geo->add_option("path", path)->required();
  geo->add_option("--velocity", x_text, "lie_basis coefficients");
  auto* period = app.add_subcommand("period", "kernel lattice of a pair, or discreteness of a subgroup");
  period->add_option("path", path);
  period->add_option("--direction", pf.direction);
  period->add_option("--tmax", pf.t_max);
  period->add_option("--epsilon", pf.epsilon);
  period->add_option("--bound", pf.bound);
  period->add_option("--policy", pf.policy, "full | heuristic");
  period->add_option("--subgroup", pf.subgroup, "generators, comma separated, --dim entries each");
  period->add_option("--dim", pf.dim);
  period->add_flag("--exact", pf.exact, "read generators as rationals and decide exactly");
  auto* qdemo = app.add_subcommand("quotient-demo", "projected kernel lattice of u(2)_- x u(2)_- along an ideal");
  qdemo->add_option("--slope", slope, "'sqrt2' or a rational slope");
  qdemo->add_flag("--zero-ideal", zero_ideal);
  auto* ldemo = app.add_subcommand("loop-demo", "grid loops through the kernel lattice");
  ldemo->add_option("path", path);
  ldemo->add_option("--T", T);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  }

  json report;
  int code = kPass;
  try {
    const Tolerance tol = tolerance(o);
    if (*check) {
      report["command"] = "check";
      code = cmd_check(load_json_file(path), o, report);
    } else if (*center_cmd) {
      report["command"] = "center";
      code = cmd_center(load_json_file(path), o, report);
    } else if (*embed) {
      report["command"] = "embed";
      const json doc = load_json_file(path);
      if (detect_kind(doc) != DocumentKind::Lts) throw InputError("embed expects an LTS document");
      code = std::visit([&](const auto& m) { return embed_impl(m, tol, out_path, report); }, lts_from_json(doc));
    } else if (*quot) {
      report["command"] = "quotient";
      code = std::visit([&](const auto& m) { return quotient_impl(m, ideal_text, tol, out_path, report); },
                        lts_from_json(load_json_file(path)));
    } else if (*product) {
      report["command"] = "product";
      const AnyLts a = lts_from_json(load_json_file(path));
      const AnyLts b = lts_from_json(load_json_file(path2));
      if (a.index() != b.index()) throw InputError("product needs two documents of the same mode");
      const json prod = std::visit(
          [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            return to_json(direct_product(x, std::get<T>(b)));
          },
          a);
      report["dim"] = prod["dim"];
      report["product"] = prod;
      report["ok"] = true;
      if (!out_path.empty()) save_json_file(out_path, prod);
    } else if (*pexp) {
      report["command"] = "pair-exp";
      code = cmd_pair_exp(path, x_text, t, tol, report);
    } else if (*geo) {
      report["command"] = "geodesic";
      code = cmd_geodesic(path, x_text, o, report);
    } else if (*period) {
      report["command"] = "period";
      if (!pf.subgroup.empty()) {
        code = cmd_period_subgroup(pf, report);
      } else if (!path.empty()) {
        code = cmd_period_pair(path, pf, tol, report);
      } else {
        throw InputError("period needs a pair file or --subgroup");
      }
    } else if (*qdemo) {
      report["command"] = "quotient-demo";
      code = cmd_quotient_demo(slope, zero_ideal, o, report);
    } else if (*ldemo) {
      report["command"] = "loop-demo";
      code = cmd_loop_demo(path, T, o, report);
    }
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const TooManyGenerators& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DimensionMismatch& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    report["ok"] = false;
    report["error"] = e.what();
    emit(out, report, o);
    return kFail;
  }
  emit(out, report, o);
  return code;
}

}  // namespace lts::cli
