#include "lts/io.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lts;
namespace fx = lts::fixtures;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Load with the matching reader, serialise again.
json reload(const json& doc) {
  switch (detect_kind(doc)) {
    case DocumentKind::Lts:
      return std::visit([](const auto& m) { return to_json(m); }, lts_from_json(doc));
    case DocumentKind::LieAlgebra:
      return std::visit([](const auto& g) { return to_json(g); }, lie_algebra_from_json(doc));
    case DocumentKind::SymmetricLieAlgebra:
      return std::visit([](const auto& s) { return to_json(s); }, symmetric_from_json(doc));
    case DocumentKind::Pair: {
      const PairDocument p = pair_from_json(doc);
      return to_json(p.pair, p.direction);
    }
  }
  return {};
}

}  // namespace

TEST(Io, GalleryRoundTripsByteForByte) {
  for (const auto& entry : fx::gallery()) {
    const std::string text = dump(entry.document);
    EXPECT_EQ(detect_kind(entry.document), entry.kind) << entry.file;
    EXPECT_EQ(dump(reload(parse_json(text))), text) << entry.file;
  }
}

TEST(Io, ShippedFixturesMatchTheGenerator) {
  for (const auto& entry : fx::gallery()) {
    const std::string path = std::string(LTS_FIXTURE_DIR) + "/" + entry.file;
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    EXPECT_EQ(slurp(path), dump(entry.document)) << entry.file;
  }
}

TEST(Io, SaveThenLoad) {
  const auto path = std::filesystem::temp_directory_path() / "lts_io_roundtrip.json";
  const json doc = to_json(fx::u_minus<Rational>(3));
  save_json_file(path.string(), doc);
  const auto back = std::get<LieTripleSystem<Rational>>(lts_from_json(load_json_file(path.string())));
  EXPECT_EQ(back, fx::u_minus<Rational>(3));
  std::filesystem::remove(path);
}

TEST(Io, RationalEntriesStayExact) {
  LieTripleSystem<Rational> m(2);
  m.set_coeff(0, 1, 0, 1, Rational(-7, 3));
  m.set_coeff(1, 0, 0, 1, Rational(7, 3));
  const json doc = to_json(m);
  EXPECT_EQ(dump(doc).find("-7/3") != std::string::npos, true);
  EXPECT_EQ(std::get<LieTripleSystem<Rational>>(lts_from_json(doc)), m);
}

TEST(Io, MalformedDocumentsAreParseErrors) {
  const std::string base = R"({"kind": "lts", "mode": "rational", "dim": 2, "bracket": BRACKET})";
  auto with = [&](const std::string& bracket) {
    std::string s = base;
    s.replace(s.find("BRACKET"), 7, bracket);
    return parse_json(s);
  };
  EXPECT_NO_THROW(lts_from_json(with(R"([[0,1,0,1,"-1"]])")));
  EXPECT_THROW(lts_from_json(with(R"([[0,1,0,1,"-1"],[0,1,0,1,"2"]])")), ParseError);
  EXPECT_THROW(lts_from_json(with(R"([[0,1,0,2,"1"]])")), ParseError);
  EXPECT_THROW(lts_from_json(with(R"([[0,1,0,1,0.5]])")), ParseError);
  EXPECT_THROW(lts_from_json(with(R"([[0,1,0,"1"]])")), ParseError);
  EXPECT_THROW(lts_from_json(with(R"([[0,1,0,1,"1/0"]])")), ParseError);
  EXPECT_THROW(lts_from_json(parse_json(R"({"kind": "lts", "mode": "rational", "bracket": []})")), ParseError);
  EXPECT_THROW(lts_from_json(parse_json(R"({"kind": "lts", "mode": "complex", "dim": 1, "bracket": []})")), ParseError);
  EXPECT_THROW(lts_from_json(parse_json(R"({"kind": "lts", "mode": "float", "dim": 40, "bracket": []})")), ParseError);
  EXPECT_THROW(parse_json("{\"dim\": 2,"), ParseError);
  EXPECT_THROW(load_json_file("/nonexistent/file.json"), ParseError);
  EXPECT_THROW(detect_kind(parse_json(R"({"kind": "banana"})")), ParseError);
}

TEST(Io, FloatModeAcceptsNumbers) {
  const json doc = parse_json(R"({"kind": "lts", "mode": "float", "dim": 2, "bracket": [[0,1,0,1,-0.5],[1,0,0,1,0.5]]})");
  const auto m = std::get<LieTripleSystem<double>>(lts_from_json(doc));
  EXPECT_DOUBLE_EQ(m.coeff(0, 1, 0, 1), -0.5);
}

TEST(Io, KindDetectionWithoutExplicitKind) {
  EXPECT_EQ(detect_kind(parse_json(R"({"dim": 1, "bracket": [[0,0,0,0,"0"]]})")), DocumentKind::Lts);
  EXPECT_EQ(detect_kind(parse_json(R"({"dim": 1, "bracket": [[0,0,0,"0"]]})")), DocumentKind::LieAlgebra);
  EXPECT_EQ(detect_kind(parse_json(R"({"dim": 1, "bracket": [], "theta": [["1"]]})")), DocumentKind::SymmetricLieAlgebra);
  EXPECT_EQ(detect_kind(parse_json(R"({"lie_basis": []})")), DocumentKind::Pair);
  EXPECT_STREQ(to_string(DocumentKind::SymmetricLieAlgebra), "symmetric_lie_algebra");
}

TEST(Io, PairRoundTripPreservesBehaviour) {
  const auto pair = fx::u_o_pair(2);
  const PairDocument back = pair_from_json(to_json(pair, fx::u_center_direction(2)));
  ASSERT_TRUE(back.direction);
  EXPECT_EQ(back.pair.dim(), pair.dim());
  EXPECT_EQ(back.pair.name(), "u2_o2");
  const auto l = kernel_lattice_1d(back.pair, *back.direction, 10.0);
  ASSERT_EQ(l.generators.size(), 1u);
  EXPECT_NEAR(l.generators[0](0), std::numbers::pi, 1e-8);
  json bad = to_json(pair);
  bad["sigma"] = "complex_conjugation";
  EXPECT_THROW(pair_from_json(bad), ParseError);
}
