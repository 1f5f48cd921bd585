#pragma once

#include "lts/period.hpp"

#include <json.hpp>

#include <variant>

namespace lts {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DocumentKind { Lts, LieAlgebra, SymmetricLieAlgebra, Pair };

const char* to_string(DocumentKind kind);

using AnyLts = std::variant<LieTripleSystem<Rational>, LieTripleSystem<double>>;
using AnyLieAlgebra = std::variant<LieAlgebra<Rational>, LieAlgebra<double>>;
using AnySymmetric = std::variant<SymmetricLieAlgebra<Rational>, SymmetricLieAlgebra<double>>;

// Explicit "kind" wins; otherwise "lie_basis" means a pair, "theta" a
// symmetric Lie algebra, and the bracket entry width (5 or 4) decides between
// LTS and Lie algebra.
DocumentKind detect_kind(const json& doc);

template <typename Scalar>
json to_json(const LieTripleSystem<Scalar>& m);
template <typename Scalar>
json to_json(const LieAlgebra<Scalar>& g);
template <typename Scalar>
json to_json(const SymmetricLieAlgebra<Scalar>& s);

struct PairDocument {
  MatrixSymmetricPair pair;
  std::optional<Vector<double>> direction;
};

json to_json(const MatrixSymmetricPair& pair, const std::optional<Vector<double>>& direction = std::nullopt);

AnyLts lts_from_json(const json& doc, Index max_dim = LieTripleSystem<double>::default_max_dim);
AnyLieAlgebra lie_algebra_from_json(const json& doc);
AnySymmetric symmetric_from_json(const json& doc);
PairDocument pair_from_json(const json& doc, const Tolerance& tol = {});

json parse_json(const std::string& text);
json load_json_file(const std::string& path);
// Two-space indent; bracket entries and matrix rows stay on one line each.
std::string dump(const json& doc);
void save_json_file(const std::string& path, const json& doc);

template <typename Scalar>
json scalar_to_json(const Scalar& s);
template <typename Scalar>
json matrix_to_json(const Matrix<Scalar>& m);
template <typename Scalar>
json vector_to_json(const Vector<Scalar>& v);
template <typename Scalar>
json subspace_to_json(const Subspace<Scalar>& s);

json to_json(const AxiomReport& r);
json to_json(const KernelLattice& l);
json to_json(const DiscretenessResult& r);
json to_json(const GridLoopReport& r);

}  // namespace lts
