#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "oadp/linsys.hpp"
#include "oadp/pencils.hpp"
#include "oadp/ratmaps.hpp"

namespace oadp {

using Json = nlohmann::ordered_json;

struct Designated {
  Point4 q{};
  int mPlus = 0;  // 0: one more than the multiplicity of the system at q
  std::optional<std::array<Point4, 3>> frame;
  std::optional<int> rank;
  std::optional<int> multiplicity;
  bool veronese = false;
  bool attempt = false;  // reported, but does not decide the verdict
};

struct CatalogEntry {
  std::string id;
  int chapter = 2;
  int degree = 5;
  bool reducedChecks = false;
  bool cremona = false;  // run the de Jonquieres consistency check

  // chapter 2
  std::optional<SymmetricPencil> pencil;
  std::string pencilKind;
  MultiPoly g, g2;
  Point4 p{};
  std::optional<std::array<Rational, 4>> sectionPlane;
  std::vector<std::vector<MultiPoly>> lines;  // binary parametrizations through p

  MultiPoly V;
  std::vector<MultiPoly> phi;  // P^2 -> V
  std::vector<BaseCondition> conditions;
  std::vector<std::string> conditionNames;
  MultiPoly fixedDivisor;
  std::vector<std::pair<int, int>> planeMults;
  std::optional<Designated> designated;

  int expectedDim = 8;
  int expectedImageDegree = 0;
  std::string symbol, configuration, singularities;
};

struct BuiltEntry {
  CatalogEntry entry;
  LinearSystem X;
  RationalMap sigma;
};

std::string fixture_dir();  // OADP_FIXTURES or the built-in default
std::vector<std::string> catalog_ids(const std::string& dir);
CatalogEntry load_entry(const std::string& id, const std::string& dir);
BuiltEntry build_entry(const std::string& id, const std::string& dir = fixture_dir());
BuiltEntry build_entry(const CatalogEntry& e);

struct RunConfig {
  std::vector<std::uint64_t> primes = {10007, 10009, 10037};
  int trials = 5;
  std::vector<std::string> entries;
  std::string outputPath;
  std::uint64_t seed = 1;
  std::string fixtureDir = fixture_dir();
  bool timings = false;
};
void validate(const RunConfig& c);

struct CheckResult {
  std::string name;
  bool pass = false;
  bool informational = false;
  Json witness = Json::object();
};

struct VerificationReport {
  std::string id;
  std::vector<CheckResult> checks;
  bool verdict = false;
  std::string error;  // build failure, empty otherwise
  const CheckResult* find(const std::string& name) const;
};

VerificationReport verify_entry(const std::string& id, const RunConfig& config);
VerificationReport verify_entry(const BuiltEntry& b, const RunConfig& config);

struct CremonaCheck {
  int dim = 0;
  Point contracted;             // p'
  bool contracts = false;
  bool composite = false;       // inverse after f equals G * identity
  int compositeDegree = 0;      // deg G
  bool transported = false;     // cubics through C4' pull back to X
  RationalMap f, inverse;
  std::vector<RatMatrix> imagePencil;  // the two quadrics through C4'
};
CremonaCheck dejonquieres_consistency(const BuiltEntry& b);

// Tangent space of X at the contraction point of V, and the roundtrip through it.
struct TangentialCheck {
  TangentSpace T;
  Roundtrip rt;
  bool gIsVSquared = false;
};
TangentialCheck tangential_roundtrip(const BuiltEntry& b);

struct TableRow {
  std::string id, configuration, symbol, singularities;
};
std::vector<TableRow> expected_table();

Json to_json(const VerificationReport& r);
Json aggregate_report(const std::vector<VerificationReport>& reports, const RunConfig& config);

// Sample points on V through phi, off the base locus of sigma.
std::vector<Point> points_on_V(const BuiltEntry& b, std::size_t count);

}  // namespace oadp
