#include "oadp/catalog.hpp"

namespace oadp {

Json to_json(const VerificationReport& r) {
  Json j{{"id", r.id}, {"verdict", r.verdict ? "pass" : "fail"}};
  if (!r.error.empty()) j["error"] = r.error;
  Json checks = Json::array();
  for (auto& c : r.checks) {
    Json cj{{"name", c.name}, {"pass", c.pass}};
    if (c.informational) cj["informational"] = true;
    cj["witness"] = c.witness;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

Json aggregate_report(const std::vector<VerificationReport>& reports, const RunConfig& config) {
  Json entries = Json::array();
  int passed = 0;
  for (auto& r : reports) {
    entries.push_back(to_json(r));
    if (r.verdict) ++passed;
  }
  Json primes = Json::array();
  for (auto p : config.primes) primes.push_back(p);
  return Json{{"format", "oadp-report/1"},
              {"config", Json{{"primes", primes}, {"trials", config.trials}, {"seed", config.seed}}},
              {"entries", entries},
              {"summary", Json{{"total", reports.size()}, {"passed", passed}}},
              {"verdict", passed == static_cast<int>(reports.size()) ? "pass" : "fail"}};
}

}  // namespace oadp
