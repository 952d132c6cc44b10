#include "qschur/exactalg/json.hpp"

#include <stdexcept>
#include <string>

namespace qschur::exactalg {

void to_json(nlohmann::json& j, const LaurentPoly& p) {
  j = nlohmann::json::object();
  for (const auto& t : p.terms()) j[std::to_string(t.exp)] = t.coeff.get_str();
}

void from_json(const nlohmann::json& j, LaurentPoly& p) {
  if (j.is_number_integer()) {
    p = LaurentPoly(j.get<long>());
    return;
  }
  if (!j.is_object()) throw std::invalid_argument("LaurentPoly JSON must be an object");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [key, value] : j.items()) {
    const int exp = std::stoi(key);
    const std::string digits = value.is_string() ? value.get<std::string>() : value.dump();
    terms.push_back({exp, BigInt(digits)});
  }
  p = LaurentPoly::from_terms(std::move(terms));
}

void to_json(nlohmann::json& j, const RationalFn& f) { j = {{"num", f.num()}, {"den", f.den()}}; }

void from_json(const nlohmann::json& j, RationalFn& f) {
  if (j.is_object() && j.contains("num")) {
    LaurentPoly den(1L);
    if (j.contains("den")) den = j.at("den").get<LaurentPoly>();
    f = RationalFn(j.at("num").get<LaurentPoly>(), den);
  } else {
    f = RationalFn(j.get<LaurentPoly>());
  }
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, x] : m.row(r)) entries.push_back({r, c, x});
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  Matrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  for (const auto& e : j.at("entries")) m.add(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), e.at(2).get<RationalFn>());
  return m;
}

}  // namespace qschur::exactalg
