#include "qschur/qmatrix/json.hpp"

#include "qschur/exactalg/json.hpp"

namespace qschur::qmatrix {

void to_json(nlohmann::json& j, const AlgebraElem& a) {
  j = nlohmann::json::array();
  for (const auto& [w, c] : a.terms()) {
    nlohmann::json word = nlohmann::json::array();
    for (const auto& [i, k] : to_ncword(w)) word.push_back({i, k});
    j.push_back({{"word", word}, {"coeff", c}});
  }
}

void from_json(const nlohmann::json& j, AlgebraElem& a) {
  a = AlgebraElem();
  for (const auto& term : j) {
    NCWord w;
    for (const auto& p : term.at("word")) w.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    a.add_term(to_word(w), term.at("coeff").get<exactalg::LaurentPoly>());
  }
}

}  // namespace qschur::qmatrix
