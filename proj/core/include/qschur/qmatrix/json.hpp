#pragma once

#include <nlohmann/json.hpp>

#include "qschur/qmatrix/algebra_elem.hpp"

namespace qschur::qmatrix {

/// [{"word": [[i, j], ...], "coeff": {"exp": "c", ...}}, ...]
void to_json(nlohmann::json& j, const AlgebraElem& a);
/// Words need not be sorted; callers normalize with their algebra.
void from_json(const nlohmann::json& j, AlgebraElem& a);

}  // namespace qschur::qmatrix
