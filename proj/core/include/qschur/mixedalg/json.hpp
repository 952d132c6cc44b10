#pragma once

#include <nlohmann/json.hpp>

#include "qschur/mixedalg/mixed_elem.hpp"
#include "qschur/mixedalg/rational_basis.hpp"

namespace qschur::mixedalg {

/// [{"plain": [[i, j], ...], "starred": [[k, l], ...], "coeff": {...}}, ...]
void to_json(nlohmann::json& j, const MixedElem& a);
/// Words need not be sorted; callers normalize with mixed_algebra(n).
void from_json(const nlohmann::json& j, MixedElem& a);

/// {"k": k, "left": rational tableau, "right": rational tableau}
nlohmann::json rational_bitableau_to_json(const RationalBitableau& b);
RationalBitableau rational_bitableau_from_json(const nlohmann::json& j);

}  // namespace qschur::mixedalg
