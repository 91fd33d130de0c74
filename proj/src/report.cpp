#include "rao/report.hpp"

#include <sstream>

namespace rao {

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.cases) {
    CaseRecord rec = c;
    rec.name = other.suite + "/" + rec.name;
    add(std::move(rec));
  }
  elapsed_seconds += other.elapsed_seconds;
}

std::string render_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.total - r.failed
     << "/" << r.total << " cases";
  if (r.elapsed_seconds > 0) os << ", " << r.elapsed_seconds << " s";
  os << ")\n";
  for (const auto& c : r.cases) {
    if (c.pass) continue;
    os << "  FAIL " << c.name << ": expected " << c.expected << ", computed " << c.computed
       << "\n";
  }
  return os.str();
}

namespace {
Json params_to_json(const SuiteParams& p) {
  Json j;
  j["n_max"] = p.n_max;
  j["n_max_exhaustive"] = p.n_max_exhaustive;
  j["k_max"] = p.k_max;
  j["primes"] = p.primes;
  j["trials"] = p.trials;
  j["seed"] = p.seed;
  return j;
}

SuiteParams params_from_json(const Json& j) {
  SuiteParams p;
  p.n_max = j.at("n_max").get<int>();
  p.n_max_exhaustive = j.at("n_max_exhaustive").get<int>();
  p.k_max = j.at("k_max").get<int>();
  p.primes = j.at("primes").get<std::vector<long>>();
  p.trials = j.at("trials").get<int>();
  p.seed = j.at("seed").get<std::uint64_t>();
  return p;
}
}  // namespace

std::string render_json(const VerificationReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["params"] = params_to_json(r.params);
  j["cases"] = Json::array();
  for (const auto& c : r.cases) {
    Json e;
    e["name"] = c.name;
    e["expected"] = c.expected;
    e["computed"] = c.computed;
    e["pass"] = c.pass;
    j["cases"].push_back(std::move(e));
  }
  j["counts"] = Json{{"total", r.total}, {"failed", r.failed}};
  j["pass"] = r.pass;
  return j.dump(2) + "\n";
}

VerificationReport parse_json_report(const std::string& text) {
  Json j = Json::parse(text);
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  r.params = params_from_json(j.at("params"));
  for (const auto& e : j.at("cases"))
    r.add(CaseRecord{e.at("name").get<std::string>(), e.at("expected").get<std::string>(),
                     e.at("computed").get<std::string>(), e.at("pass").get<bool>()});
  if (r.total != j.at("counts").at("total").get<int>() ||
      r.failed != j.at("counts").at("failed").get<int>() || r.pass != j.at("pass").get<bool>())
    throw std::invalid_argument("report summary counts do not match cases");
  return r;
}

bool operator==(const VerificationReport& a, const VerificationReport& b) {
  return a.suite == b.suite && a.cases == b.cases && a.total == b.total && a.failed == b.failed &&
         a.pass == b.pass;
}

}  // namespace rao
