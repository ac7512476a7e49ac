#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "oadp/catalog.hpp"

using namespace oadp;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kDegenerate = 2, kParse = 3, kFixture = 4 };

RatMatrix read_matrix(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw Error(ErrorCode::ParseError, "matrix must be n x n");
  std::vector<std::vector<Rational>> rows;
  for (auto& r : j) {
    if (!r.is_array() || static_cast<int>(r.size()) != n) throw Error(ErrorCode::ParseError, "matrix must be n x n");
    rows.emplace_back();
    for (auto& x : r) rows.back().push_back(parse_rational(x.get<std::string>()));
  }
  return RatMatrix::from_rows(rows);
}

Json form_json(const BinaryForm& f) { return f.to_string(); }

int cmd_segre(const std::string& path, bool detail) {
  Json doc;
  SymmetricPencil pen;
  std::optional<std::array<Rational, 4>> plane;
  try {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    doc = Json::parse(in);
    // a catalog fixture carries the pencil in a sub-object
    const Json& pj = doc.contains("pencil") ? doc.at("pencil") : doc;
    int n = pj.at("n").get<int>();
    pen = SymmetricPencil::make(read_matrix(pj.at("A1"), n), read_matrix(pj.at("A2"), n), true);
    if (doc.contains("sectionPlane")) {
      auto& s = doc.at("sectionPlane");
      if (!s.is_array() || s.size() != 4) throw Error(ErrorCode::ParseError, "sectionPlane needs four entries");
      plane = std::array<Rational, 4>{parse_rational(s[0].get<std::string>()), parse_rational(s[1].get<std::string>()),
                                      parse_rational(s[2].get<std::string>()),
                                      parse_rational(s[3].get<std::string>())};
    }
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::DegeneratePencil ? kDegenerate : kParse;
  }
  try {
    SegreSymbol sym = plane ? conic_section_symbol(pen, *plane) : segre_symbol(pen);
    std::cout << sym.str() << "\n";
    if (detail) {
      auto dg = pencil_det_and_minor_gcds(pen);
      Json factors = Json::array();
      for (auto& [f, m] : binary_factor(dg.det)) factors.push_back(Json{{"factor", form_json(f)}, {"multiplicity", m}});
      Json gcds = Json::array();
      for (auto& g : dg.gcds) gcds.push_back(form_json(g));
      std::cout << Json{{"symbol", sym.str()}, {"det", form_json(dg.det)}, {"det_factors", factors}, {"minor_gcds", gcds}}
                       .dump(2)
                << "\n";
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::DegeneratePencil || e.code() == ErrorCode::DegenerateSection ? kDegenerate : kParse;
  }
  return kOk;
}

int cmd_verify(RunConfig cfg) {
  try {
    validate(cfg);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kParse;
  }
  std::vector<std::string> all;
  try {
    all = catalog_ids(cfg.fixtureDir);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kFixture;
  }
  std::vector<std::string> ids = cfg.entries.empty() ? all : cfg.entries;
  for (auto& id : ids)
    if (std::find(all.begin(), all.end(), id) == all.end()) {
      std::cerr << "unknown entry " << id << "\n";
      return kFixture;
    }
  std::vector<VerificationReport> reports;
  for (auto& id : ids) reports.push_back(verify_entry(id, cfg));
  std::string text = aggregate_report(reports, cfg).dump(2) + "\n";
  if (cfg.outputPath.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.outputPath, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << cfg.outputPath << "\n";
      return kFixture;
    }
    out << text;
  }
  bool buildError = false, failed = false;
  for (auto& r : reports) {
    if (!r.error.empty()) {
      buildError = true;
      std::cerr << r.id << ": " << r.error << "\n";
    }
    if (!r.verdict) failed = true;
  }
  return buildError ? kFixture : failed ? kCheckFailed : kOk;
}

int cmd_list(const std::string& dir) {
  Json out = Json::array();
  try {
    for (auto& id : catalog_ids(dir)) {
      auto e = load_entry(id, dir);
      out.push_back(Json{{"id", e.id},
                         {"chapter", e.chapter},
                         {"degree", e.degree},
                         {"configuration", e.configuration},
                         {"symbol", e.symbol}});
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kFixture;
  }
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_build(const std::string& id, const std::string& dir, bool dump) {
  try {
    auto b = build_entry(id, dir);
    Json j{{"id", id}, {"degree", b.X.degree}, {"dim", b.X.dim()}, {"conditions", b.entry.conditionNames}};
    if (dump) {
      Json basis = Json::array();
      for (auto& f : b.X.basis) basis.push_back(f.to_string());
      j["basis"] = basis;
    }
    std::cout << j.dump(2) << "\n";
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kFixture;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of threefolds with one apparent double point"};
  app.require_subcommand(1);

  std::string segreFile;
  bool detail = false;
  auto* segre = app.add_subcommand("segre", "Segre symbol of a pencil given as JSON");
  segre->add_option("file", segreFile)->required();
  segre->add_flag("--detail", detail, "also print det factors and minor gcds as JSON");

  RunConfig cfg;
  auto* verify = app.add_subcommand("verify", "verify catalog entries and emit a JSON report");
  verify->add_option("--entry", cfg.entries, "entry id, repeatable");
  verify->add_option("--primes", cfg.primes, "oracle primes");
  verify->add_option("--trials", cfg.trials, "oracle trials per prime");
  verify->add_option("--seed", cfg.seed, "oracle seed");
  verify->add_option("--out", cfg.outputPath, "report path, stdout by default");

  auto* catalog = app.add_subcommand("catalog", "catalog commands");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list fixture entries");

  std::string buildId;
  bool dumpBasis = false;
  auto* build = app.add_subcommand("build", "build one entry's linear system");
  build->add_option("--entry", buildId)->required();
  build->add_flag("--dump-basis", dumpBasis, "print the basis forms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kParse;
  }

  std::string dir = fixture_dir();
  cfg.fixtureDir = dir;
  if (*segre) return cmd_segre(segreFile, detail);
  if (*verify) return cmd_verify(cfg);
  if (*list) return cmd_list(dir);
  if (*build) return cmd_build(buildId, dir, dumpBasis);
  return kParse;
}
