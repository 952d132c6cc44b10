#pragma once

#include <nlohmann/json.hpp>

#include "qschur/combinat/rational_tableau.hpp"

namespace qschur::combinat {

void to_json(nlohmann::json& j, const Tableau& t);
void from_json(const nlohmann::json& j, Tableau& t);
nlohmann::json rational_to_json(const RationalTableau& rt, int k);
RationalTableau rational_from_json(const nlohmann::json& j);

}  // namespace qschur::combinat
