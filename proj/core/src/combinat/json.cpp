#include "qschur/combinat/json.hpp"

namespace qschur::combinat {

void to_json(nlohmann::json& j, const Tableau& t) { j = {{"shape", t.shape().parts()}, {"rows", t.rows()}}; }

void from_json(const nlohmann::json& j, Tableau& t) {
  t = Tableau::from_rows(j.at("rows").get<std::vector<std::vector<int>>>());
  if (j.contains("shape") && j.at("shape").get<std::vector<int>>() != t.shape().parts()) {
    throw std::invalid_argument("Tableau JSON: shape does not match rows");
  }
}

nlohmann::json rational_to_json(const RationalTableau& rt, int k) {
  return {{"left", rt.left}, {"right", rt.right}, {"k", k}};
}

RationalTableau rational_from_json(const nlohmann::json& j) {
  return {j.at("left").get<Tableau>(), j.at("right").get<Tableau>()};
}

}  // namespace qschur::combinat
