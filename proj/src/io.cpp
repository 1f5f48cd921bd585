#include "lts/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace lts {

const char* to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Lts:
      return "lts";
    case DocumentKind::LieAlgebra:
      return "lie_algebra";
    case DocumentKind::SymmetricLieAlgebra:
      return "symmetric_lie_algebra";
    case DocumentKind::Pair:
      return "pair";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const json& require(const json& doc, const char* key) {
  if (!doc.is_object()) fail("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

Index read_index(const json& v, const char* what) {
  if (!v.is_number_integer()) fail(std::string(what) + " must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < 0) fail(std::string(what) + " must be non-negative");
  return static_cast<Index>(x);
}

ScalarMode read_mode(const json& doc) {
  const json& m = require(doc, "mode");
  if (m == "rational") return ScalarMode::ExactRational;
  if (m == "float") return ScalarMode::Float64;
  fail("mode must be \"rational\" or \"float\"");
}

template <typename Scalar>
Scalar read_scalar(const json& v) {
  try {
    if constexpr (is_exact_v<Scalar>) {
      if (v.is_string()) return parse_rational(v.get<std::string>());
      if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
      if (v.is_number_unsigned()) return Rational(std::to_string(v.get<std::uint64_t>()));
      fail("rational entries must be integers or \"p/q\" strings");
    } else {
      if (v.is_number()) return v.get<double>();
      if (v.is_string()) return static_cast<double>(parse_rational(v.get<std::string>()));
      fail("float entries must be numbers");
    }
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

template <typename Scalar>
Matrix<Scalar> read_matrix(const json& v, Index rows, Index cols, const char* what) {
  if (!v.is_array() || static_cast<Index>(v.size()) != rows) fail(std::string(what) + ": wrong number of rows");
  Matrix<Scalar> m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = v[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) fail(std::string(what) + ": wrong row length");
    for (Index j = 0; j < cols; ++j) m(i, j) = read_scalar<Scalar>(row[static_cast<std::size_t>(j)]);
  }
  return m;
}

std::vector<std::string> read_labels(const json& doc, Index dim) {
  auto it = doc.find("labels");
  if (it == doc.end()) return {};
  if (!it->is_array() || static_cast<Index>(it->size()) != dim) fail("labels must list one name per basis vector");
  std::vector<std::string> out;
  for (const auto& l : *it) {
    if (!l.is_string()) fail("labels must be strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

// Bracket entries [i0, ..., i_{width-2}, value].
template <typename Scalar, typename Setter>
void read_entries(const json& doc, Index dim, std::size_t width, Setter set) {
  const json& entries = require(doc, "bracket");
  if (!entries.is_array()) fail("bracket must be an array");
  std::set<std::vector<Index>> seen;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != width) fail("bracket entry has wrong width");
    std::vector<Index> idx;
    for (std::size_t k = 0; k + 1 < width; ++k) {
      const Index i = read_index(e[k], "bracket index");
      if (i >= dim) fail("bracket index out of range");
      idx.push_back(i);
    }
    if (!seen.insert(idx).second) fail("duplicate bracket entry");
    set(idx, read_scalar<Scalar>(e[width - 1]));
  }
}

template <typename Scalar>
LieTripleSystem<Scalar> read_lts(const json& doc, Index max_dim) {
  const Index dim = read_index(require(doc, "dim"), "dim");
  if (dim > max_dim) fail("dim " + std::to_string(dim) + " exceeds the cap " + std::to_string(max_dim));
  LieTripleSystem<Scalar> m(dim, read_labels(doc, dim), max_dim);
  read_entries<Scalar>(doc, dim, 5, [&](const std::vector<Index>& i, const Scalar& v) {
    m.set_coeff(i[0], i[1], i[2], i[3], v);
  });
  return m;
}

template <typename Scalar>
LieAlgebra<Scalar> read_lie(const json& doc) {
  const Index dim = read_index(require(doc, "dim"), "dim");
  LieAlgebra<Scalar> g(dim, read_labels(doc, dim));
  read_entries<Scalar>(doc, dim, 4, [&](const std::vector<Index>& i, const Scalar& v) {
    g.set_coeff(i[0], i[1], i[2], v);
  });
  return g;
}

json labels_json(const std::vector<std::string>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(l);
  return out;
}

bool inline_array(const json& a) {
  for (const auto& e : a)
    if (e.is_array() || e.is_object()) return false;
  return true;
}

void write(std::ostringstream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (v.is_object()) {
    if (v.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << inner << json(it.key()).dump() << ": ";
      write(os, it.value(), indent + 2);
    }
    os << "\n" << pad << "}";
  } else if (v.is_array()) {
    if (v.empty()) {
      os << "[]";
    } else if (inline_array(v)) {
      os << "[";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].dump();
      os << "]";
    } else {
      os << "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        os << inner;
        write(os, v[i], indent + 2);
        os << (i + 1 < v.size() ? ",\n" : "\n");
      }
      os << pad << "]";
    }
  } else {
    os << v.dump();
  }
}

}  // namespace

DocumentKind detect_kind(const json& doc) {
  if (!doc.is_object()) fail("expected a JSON object");
  if (auto it = doc.find("kind"); it != doc.end()) {
    if (*it == "lts") return DocumentKind::Lts;
    if (*it == "lie_algebra") return DocumentKind::LieAlgebra;
    if (*it == "symmetric_lie_algebra") return DocumentKind::SymmetricLieAlgebra;
    if (*it == "pair") return DocumentKind::Pair;
    fail("unknown kind");
  }
  if (doc.contains("lie_basis")) return DocumentKind::Pair;
  if (doc.contains("theta")) return DocumentKind::SymmetricLieAlgebra;
  const json& entries = require(doc, "bracket");
  if (entries.is_array() && !entries.empty() && entries[0].is_array()) {
    if (entries[0].size() == 4) return DocumentKind::LieAlgebra;
  }
  return DocumentKind::Lts;
}

template <typename Scalar>
json scalar_to_json(const Scalar& s) {
  if constexpr (is_exact_v<Scalar>) {
    return format_rational(s);
  } else {
    return s;
  }
}

template <typename Scalar>
json matrix_to_json(const Matrix<Scalar>& m) {
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json<Scalar>(m(i, j)));
    out.push_back(row);
  }
  return out;
}

template <typename Scalar>
json vector_to_json(const Vector<Scalar>& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(scalar_to_json<Scalar>(v(i)));
  return out;
}

template <typename Scalar>
json subspace_to_json(const Subspace<Scalar>& s) {
  json basis = json::array();
  for (Index c = 0; c < s.dim(); ++c) basis.push_back(vector_to_json<Scalar>(s.basis.col(c)));
  return json{{"parent_dim", s.parent_dim}, {"dim", s.dim()}, {"basis", basis}};
}

template <typename Scalar>
json to_json(const LieTripleSystem<Scalar>& m) {
  json entries = json::array();
  const Index d = m.dim();
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k)
        for (Index l = 0; l < d; ++l) {
          const Scalar& v = m.coeff(i, j, k, l);
          if (v != 0) entries.push_back(json{i, j, k, l, scalar_to_json<Scalar>(v)});
        }
  return json{{"kind", "lts"},
              {"dim", d},
              {"mode", to_string(m.mode())},
              {"labels", labels_json(m.labels())},
              {"bracket", entries}};
}

template <typename Scalar>
json to_json(const LieAlgebra<Scalar>& g) {
  json entries = json::array();
  const Index d = g.dim();
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k) {
        const Scalar& v = g.coeff(i, j, k);
        if (v != 0) entries.push_back(json{i, j, k, scalar_to_json<Scalar>(v)});
      }
  return json{{"kind", "lie_algebra"},
              {"dim", d},
              {"mode", to_string(g.mode())},
              {"labels", labels_json(g.labels())},
              {"bracket", entries}};
}

template <typename Scalar>
json to_json(const SymmetricLieAlgebra<Scalar>& s) {
  json out = to_json(s.algebra);
  out["kind"] = "symmetric_lie_algebra";
  out["theta"] = matrix_to_json<Scalar>(s.theta);
  return out;
}

json to_json(const MatrixSymmetricPair& pair, const std::optional<Vector<double>>& direction) {
  json basis = json::array();
  for (const auto& b : pair.lie_basis()) basis.push_back(matrix_to_json<double>(b));
  json out{{"kind", "pair"},
           {"name", pair.name()},
           {"ambient_n", pair.ambient_n()},
           {"lie_basis", basis},
           {"policy", to_string(pair.policy())}};
  if (pair.sigma().kind == GroupInvolution::Kind::TransposeInverse) {
    out["sigma"] = "transpose_inverse";
  } else {
    out["sigma"] = json{{"conjugation_by", matrix_to_json<double>(pair.sigma().J)}};
  }
  if (direction) out["direction"] = vector_to_json<double>(*direction);
  return out;
}

AnyLts lts_from_json(const json& doc, Index max_dim) {
  try {
    if (detect_kind(doc) != DocumentKind::Lts) fail("document is not an LTS");
    if (read_mode(doc) == ScalarMode::ExactRational) return read_lts<Rational>(doc, max_dim);
    return read_lts<double>(doc, max_dim);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    fail(e.what());
  }
}

AnyLieAlgebra lie_algebra_from_json(const json& doc) {
  try {
    if (read_mode(doc) == ScalarMode::ExactRational) return read_lie<Rational>(doc);
    return read_lie<double>(doc);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    fail(e.what());
  }
}

AnySymmetric symmetric_from_json(const json& doc) {
  try {
    const Index dim = read_index(require(doc, "dim"), "dim");
    if (read_mode(doc) == ScalarMode::ExactRational)
      return SymmetricLieAlgebra<Rational>{read_lie<Rational>(doc), read_matrix<Rational>(require(doc, "theta"), dim, dim, "theta")};
    return SymmetricLieAlgebra<double>{read_lie<double>(doc), read_matrix<double>(require(doc, "theta"), dim, dim, "theta")};
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    fail(e.what());
  }
}

PairDocument pair_from_json(const json& doc, const Tolerance& tol) {
  try {
    const Index n = read_index(require(doc, "ambient_n"), "ambient_n");
    const json& basis = require(doc, "lie_basis");
    if (!basis.is_array()) fail("lie_basis must be an array of matrices");
    std::vector<Matrix<double>> mats;
    for (const auto& b : basis) mats.push_back(read_matrix<double>(b, n, n, "lie_basis"));
    const json& sig = require(doc, "sigma");
    GroupInvolution sigma;
    if (sig == "transpose_inverse") {
      sigma = GroupInvolution::transpose_inverse();
    } else if (sig.is_object() && sig.contains("conjugation_by")) {
      sigma = GroupInvolution::conjugation_by(read_matrix<double>(sig["conjugation_by"], n, n, "conjugation_by"));
    } else {
      fail("sigma must be \"transpose_inverse\" or {\"conjugation_by\": matrix}");
    }
    FixedGroupPolicy policy = FixedGroupPolicy::FullFixedGroup;
    if (auto it = doc.find("policy"); it != doc.end()) {
      if (*it == "full_fixed_group") {
        policy = FixedGroupPolicy::FullFixedGroup;
      } else if (*it == "identity_component_heuristic") {
        policy = FixedGroupPolicy::IdentityComponentHeuristic;
      } else {
        fail("unknown policy");
      }
    }
    const std::string name = doc.value("name", std::string("pair"));
    PairDocument out{MatrixSymmetricPair(name, n, std::move(mats), sigma, policy, tol), std::nullopt};
    if (auto it = doc.find("direction"); it != doc.end()) {
      if (!it->is_array() || static_cast<Index>(it->size()) != out.pair.dim()) fail("direction has wrong length");
      Vector<double> v(out.pair.dim());
      for (Index i = 0; i < v.size(); ++i) v(i) = read_scalar<double>((*it)[static_cast<std::size_t>(i)]);
      out.direction = v;
    }
    return out;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    fail(e.what());
  }
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string dump(const json& doc) {
  std::ostringstream os;
  write(os, doc, 0);
  os << "\n";
  return os.str();
}

void save_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << dump(doc);
}

json to_json(const AxiomReport& r) {
  json out{{"ok", r.ok}, {"worst_violation", r.worst_violation}};
  if (r.witness) {
    out["witness"] = json{{"identity", r.witness->identity}, {"indices", r.witness->indices}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const KernelLattice& l) {
  json gens = json::array();
  for (const auto& g : l.generators) gens.push_back(vector_to_json<double>(g));
  json out{{"verdict", to_string(l.verdict)},
           {"generators", gens},
           {"residuals", l.residuals},
           {"search_bound", l.search_bound},
           {"note", l.note},
           {"caveat", l.caveat}};
  if (l.witness) {
    out["witness"] = json{{"vector", vector_to_json<double>(*l.witness)},
                          {"norm", l.witness->norm()},
                          {"coefficients", l.witness_coefficients}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const DiscretenessResult& r) {
  json out{{"verdict", to_string(r.verdict)},
           {"relations", r.relations},
           {"nodes", r.nodes},
           {"note", r.note}};
  out["shortest"] = std::isfinite(r.shortest) ? json(r.shortest) : json(nullptr);
  if (!r.shortest_coefficients.empty()) out["shortest_coefficients"] = r.shortest_coefficients;
  if (r.witness) {
    out["witness"] = json{{"vector", vector_to_json<double>(*r.witness)},
                          {"norm", r.witness->norm()},
                          {"coefficients", r.coefficients}};
  } else {
    out["witness"] = nullptr;
  }
  if (r.lattice_basis.rows() > 0) out["lattice_basis"] = matrix_to_json<Rational>(r.lattice_basis);
  return out;
}

json to_json(const GridLoopReport& r) {
  return json{{"T", r.T},
              {"period", r.period},
              {"scanned_values", r.scanned_values},
              {"kernel_hits", r.kernel_hits},
              {"loops_checked", r.loops_checked},
              {"passing_loops", r.passing_loops},
              {"only_zero_loop", r.only_zero_loop}};
}

#define LTS_INSTANTIATE(S)                                      \
  template json scalar_to_json<S>(const S&);                    \
  template json matrix_to_json<S>(const Matrix<S>&);            \
  template json vector_to_json<S>(const Vector<S>&);            \
  template json subspace_to_json<S>(const Subspace<S>&);        \
  template json to_json(const LieTripleSystem<S>&);             \
  template json to_json(const LieAlgebra<S>&);                  \
  template json to_json(const SymmetricLieAlgebra<S>&);

LTS_INSTANTIATE(Rational)
LTS_INSTANTIATE(double)

#undef LTS_INSTANTIATE

}  // namespace lts
