#include "rao/hilbert.hpp"
#include "rao/json_io.hpp"
#include "rao/suites.hpp"
#include "rao/weil.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

namespace {

rao::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return rao::Json::parse(in);
}

int infer_rank(const rao::Json& words, int explicit_n) {
  if (explicit_n > 0) return explicit_n;
  int max_s = 0;
  for (const auto& w : words)
    for (const auto& l : w) {
      std::string type = l.at("type").get<std::string>();
      if (type == "parabolic") {
        // flat row-major 2n x 2n array
        int entries = static_cast<int>(l.at("matrix").size());
        int dim = static_cast<int>(std::lround(std::sqrt(static_cast<double>(entries))));
        if (dim * dim != entries) {
          if (!l.at("matrix").empty() && l.at("matrix").front().is_array())
            dim = static_cast<int>(l.at("matrix").size());
          else
            throw std::invalid_argument("parabolic letter matrix is not square");
        }
        return dim / 2;
      }
      for (const auto& s : l.at("S")) max_s = std::max(max_s, s.get<int>());
    }
  if (max_s == 0) throw std::invalid_argument("cannot infer rank; pass --n");
  return max_s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic kernel for the metaplectic cover of Sp(2n) over Q_p"};
  app.require_subcommand(1);

  // hilbert
  auto* hil = app.add_subcommand("hilbert", "quadratic Hilbert symbol (a,b)_v");
  std::string hil_place;
  std::string hil_a, hil_b;
  hil->add_option("--place", hil_place, "finite prime or 'real'")->required();
  hil->add_option("A", hil_a)->required();
  hil->add_option("B", hil_b)->required();

  // weil-index
  auto* weil = app.add_subcommand("weil-index", "Weil index gamma(psi_a) as a Mu8 exponent");
  std::string weil_place, weil_a, weil_shift = "1";
  bool weil_oracle = false;
  weil->add_option("--place", weil_place, "finite prime")->required();
  weil->add_option("--shift", weil_shift, "character shift c (psi_c)");
  weil->add_flag("--oracle", weil_oracle, "evaluate by the Gauss-sum oracle");
  weil->add_option("A", weil_a)->required();

  // bruhat
  auto* bru = app.add_subcommand("bruhat", "Bruhat decomposition g = p1 sigma_S p2");
  int bru_n = 0;
  std::string bru_file;
  bru->add_option("--n", bru_n, "rank")->required();
  bru->add_option("--matrix", bru_file, "JSON matrix file")->required();

  // cocycle
  auto* coc = app.add_subcommand("cocycle", "Rao cocycle c(g1, g2)");
  std::string coc_place, coc_w1, coc_w2, coc_backend = "word";
  int coc_n = 0;
  coc->add_option("--place", coc_place)->required();
  coc->add_option("--word1", coc_w1)->required();
  coc->add_option("--word2", coc_w2)->required();
  coc->add_option("--backend", coc_backend)->check(CLI::IsMember({"word", "leray"}));
  coc->add_option("--n", coc_n, "rank (inferred from parabolic letters when omitted)");

  // verify
  auto* ver = app.add_subcommand("verify", "run a named verification suite");
  std::string ver_suite;
  rao::SuiteParams params;
  bool ver_json = false;
  std::vector<long> ver_primes;
  ver->add_option("--suite", ver_suite)->required();
  ver->add_option("--n-max", params.n_max);
  ver->add_option("--k-max", params.k_max);
  ver->add_option("--primes", ver_primes)->delimiter(',');
  ver->add_option("--trials", params.trials);
  ver->add_option("--seed", params.seed);
  ver->add_flag("--json", ver_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*hil) {
      std::cout << rao::hilbert(rao::parse_rational(hil_a), rao::parse_rational(hil_b),
                                rao::parse_place(hil_place))
                << "\n";
      return 0;
    }
    if (*weil) {
      rao::AdditiveCharacter psi(rao::parse_place(weil_place), rao::parse_rational(weil_shift));
      rao::Rational a = rao::parse_rational(weil_a);
      rao::Mu8 out = weil_oracle ? rao::weil_index_oracle(a, psi) : rao::weil_index(a, psi);
      std::cout << out.e << "\n";
      return 0;
    }
    if (*bru) {
      rao::SympSpace sp(bru_n);
      rao::RatMat g = rao::matrix_from_json(read_json_file(bru_file), 2 * bru_n, 2 * bru_n);
      rao::BruhatForm b = rao::bruhat_decompose(sp, g);
      rao::Json out;
      out["p1"] = rao::matrix_to_json(b.p1);
      out["S"] = rao::Json::array();
      for (int i : b.S) out["S"].push_back(i);
      out["p2"] = rao::matrix_to_json(b.p2);
      out["x"] = rao::rat_str(rao::x_det(sp, g));
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (*coc) {
      rao::Place v = rao::parse_place(coc_place);
      rao::Json j1 = read_json_file(coc_w1), j2 = read_json_file(coc_w2);
      rao::Json both = rao::Json::array({j1, j2});
      rao::SympSpace sp(infer_rank(both, coc_n));
      rao::FactoredWord w1 = rao::word_from_json(sp, j1), w2 = rao::word_from_json(sp, j2);
      if (coc_backend == "word") {
        try {
          std::cout << rao::cocycle_word(sp, w1, w2, v) << "\n";
        } catch (const rao::IrreduciblePair&) {
          std::cout << "irreducible\n";
        }
      } else {
        std::cout << rao::cocycle_leray(sp, w1.product(sp), w2.product(sp), v,
                                        rao::AdditiveCharacter(v, 1))
                  << "\n";
      }
      return 0;
    }
    if (*ver) {
      if (!ver_primes.empty()) params.primes = ver_primes;
      rao::VerificationReport rep = rao::run_suite(ver_suite, params);
      std::cout << (ver_json ? rao::render_json(rep) : rao::render_text(rep));
      return rep.pass ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    // bad user input (zero arguments, out-of-range indices, wrong place)
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
