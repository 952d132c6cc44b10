#include "qschur/mixedalg/json.hpp"

#include "qschur/combinat/json.hpp"
#include "qschur/exactalg/json.hpp"

namespace qschur::mixedalg {

namespace {

nlohmann::json word_json(const Word& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [i, k] : qmatrix::to_ncword(w)) out.push_back({i, k});
  return out;
}

Word word_from(const nlohmann::json& j) {
  qmatrix::NCWord w;
  for (const auto& p : j) w.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  return qmatrix::to_word(w);
}

}  // namespace

void to_json(nlohmann::json& j, const MixedElem& a) {
  j = nlohmann::json::array();
  for (const auto& [w, c] : a.terms()) {
    j.push_back({{"plain", word_json(w.plain)}, {"starred", word_json(w.starred)}, {"coeff", c}});
  }
}

void from_json(const nlohmann::json& j, MixedElem& a) {
  a = MixedElem();
  for (const auto& term : j) {
    a.add_term(MixedWord{word_from(term.at("plain")), word_from(term.at("starred"))},
               term.at("coeff").get<exactalg::LaurentPoly>());
  }
}

nlohmann::json rational_bitableau_to_json(const RationalBitableau& b) {
  return {{"k", b.k}, {"left", combinat::rational_to_json(b.rt, b.k)}, {"right", combinat::rational_to_json(b.rt2, b.k)}};
}

RationalBitableau rational_bitableau_from_json(const nlohmann::json& j) {
  return {j.at("k").get<int>(), combinat::rational_from_json(j.at("left")), combinat::rational_from_json(j.at("right"))};
}

}  // namespace qschur::mixedalg
