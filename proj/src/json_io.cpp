#include "rao/json_io.hpp"

namespace rao {

Json matrix_to_json(const RatMat& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.push_back(rat_str(m(i, j)));
  return out;
}

RatMat matrix_from_json(const Json& j, int rows, int cols) {
  std::vector<Rational> flat;
  if (!j.is_array()) throw std::invalid_argument("matrix json must be an array");
  for (const auto& e : j) {
    if (e.is_array()) {
      for (const auto& x : e) flat.push_back(parse_rational(x.get<std::string>()));
    } else {
      flat.push_back(parse_rational(e.get<std::string>()));
    }
  }
  if (static_cast<int>(flat.size()) != rows * cols)
    throw std::invalid_argument("matrix json has wrong size");
  RatMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) m(i, k) = flat[static_cast<size_t>(i) * cols + k];
  return m;
}

Json word_to_json(const FactoredWord& w) {
  Json out = Json::array();
  for (const auto& l : w.letters()) {
    Json e;
    if (l.kind == Letter::kParabolic) {
      e["type"] = "parabolic";
      e["matrix"] = matrix_to_json(l.mat);
    } else {
      e["type"] = "sigma";
      e["S"] = Json::array();
      for (int i : l.S) e["S"].push_back(i);
    }
    out.push_back(std::move(e));
  }
  return out;
}

FactoredWord word_from_json(const SympSpace& sp, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("word json must be an array");
  FactoredWord w(sp.n);
  for (const auto& e : j) {
    std::string type = e.at("type").get<std::string>();
    if (type == "parabolic") {
      w.push_parabolic(sp, matrix_from_json(e.at("matrix"), 2 * sp.n, 2 * sp.n));
    } else if (type == "sigma") {
      std::set<int> S;
      for (const auto& x : e.at("S")) S.insert(x.get<int>());
      w.push_sigma(S);
    } else {
      throw std::invalid_argument("unknown letter type: " + type);
    }
  }
  return w;
}

}  // namespace rao
