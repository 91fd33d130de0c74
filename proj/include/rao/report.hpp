#pragma once

#include "rao/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rao {

struct SuiteParams {
  int n_max = 4;
  int n_max_exhaustive = 3;
  int k_max = 0;  // cap on the Levi block size k; 0 means k runs up to n
  std::vector<long> primes = {2, 3, 5};
  int trials = 500;
  std::uint64_t seed = 0;

  int k_cap(int n) const { return k_max > 0 ? std::min(k_max, n) : n; }

  void validate() const {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (primes.empty()) throw std::invalid_argument("primes must be nonempty");
    for (long p : primes)
      if (!is_prime(p)) throw std::invalid_argument("bad prime in params");
  }
};

struct CaseRecord {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass;

  bool operator==(const CaseRecord& o) const {
    return name == o.name && expected == o.expected && computed == o.computed && pass == o.pass;
  }
};

struct VerificationReport {
  std::string suite;
  SuiteParams params;
  std::vector<CaseRecord> cases;
  int total = 0;
  int failed = 0;
  bool pass = true;
  double elapsed_seconds = 0.0;  // excluded from JSON so reports stay byte-stable

  void add(CaseRecord rec) {
    ++total;
    if (!rec.pass) {
      ++failed;
      pass = false;
    }
    cases.push_back(std::move(rec));
  }

  void check(const std::string& name, const std::string& expected, const std::string& computed) {
    add(CaseRecord{name, expected, computed, expected == computed});
  }

  void merge(const VerificationReport& other);
};

std::string render_text(const VerificationReport& r);
std::string render_json(const VerificationReport& r);
VerificationReport parse_json_report(const std::string& text);

bool operator==(const VerificationReport& a, const VerificationReport& b);

}  // namespace rao
