#include "rao/json_io.hpp"
#include "rao/suites.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace rao;

TEST_CASE("report rendering and round trip") {
  VerificationReport r;
  r.suite = "demo";
  r.params = SuiteParams{};
  SUBCASE("empty report") {
    std::string js = render_json(r);
    CHECK(js.find("\"cases\": []") != std::string::npos);
    CHECK(js.find("\"pass\": true") != std::string::npos);
    CHECK(parse_json_report(js) == r);
  }
  SUBCASE("failing case appears verbatim and flips pass") {
    r.check("case-a", "+1", "+1");
    r.check("case-b", "+1", "-1");
    CHECK(!r.pass);
    CHECK(r.failed == 1);
    std::string js = render_json(r);
    CHECK(js.find("case-b") != std::string::npos);
    CHECK(parse_json_report(js) == r);
    std::string txt = render_text(r);
    CHECK(txt.find("FAIL case-b") != std::string::npos);
  }
}

TEST_CASE("unknown suite name") {
  CHECK_THROWS_AS(run_suite("nonexistent", SuiteParams{}), std::invalid_argument);
  SuiteParams bad;
  bad.primes = {};
  CHECK_THROWS_AS(run_suite("hilbert-laws", bad), std::invalid_argument);
}

TEST_CASE("suite determinism: identical seeds give byte-identical reports") {
  SuiteParams p;
  p.n_max = 2;
  p.n_max_exhaustive = 2;
  p.trials = 40;
  p.primes = {2, 3};
  p.seed = 0;
  for (const auto& name : {"hilbert-laws", "bruhat", "mp-associativity"}) {
    std::string a = render_json(run_suite(name, p));
    std::string b = render_json(run_suite(name, p));
    CHECK(a == b);
  }
  // different seed changes the sampled cases but not determinism
  SuiteParams q = p;
  q.seed = 1;
  CHECK(render_json(run_suite("bruhat", p)) != render_json(run_suite("bruhat", q)));
}

TEST_CASE("run_suite('all') exercises every module operation") {
  std::set<std::string> covered;
  for (const auto& name : suite_names())
    for (const auto& op : suite_coverage(name)) covered.insert(op);
  for (const auto& op : all_operations()) {
    CAPTURE(op);
    CHECK(covered.count(op) == 1);
  }
}

TEST_CASE("small end-to-end suite run") {
  SuiteParams p;
  p.n_max = 2;
  p.n_max_exhaustive = 2;
  p.trials = 25;
  p.primes = {2, 3};
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    VerificationReport r = run_suite(name, p);
    CHECK(r.pass);
    CHECK(r.total > 0);
  }
}

TEST_CASE("matrix and word json") {
  SympSpace sp(2);
  RatMat m = sp_sigma(sp, {2});
  Json j = matrix_to_json(m);
  CHECK(matrix_from_json(j, 4, 4) == m);
  // nested form accepted
  Json nested = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int k = 0; k < 4; ++k) row.push_back(rat_str(m(i, k)));
    nested.push_back(row);
  }
  CHECK(matrix_from_json(nested, 4, 4) == m);
  CHECK_THROWS_AS(matrix_from_json(j, 2, 2), std::invalid_argument);

  FactoredWord w(2);
  w.push_parabolic(sp, sp_a(sp, {1}));
  w.push_sigma({1, 2});
  Json jw = word_to_json(w);
  FactoredWord back = word_from_json(sp, jw);
  CHECK(back.product(sp) == w.product(sp));
  CHECK(back.letters().size() == 2);
  CHECK(jw[1]["S"] == Json::array({1, 2}));
}
