#pragma once

#include <nlohmann/json.hpp>

#include "qschur/exactalg/linalg.hpp"

namespace qschur::exactalg {

/// {"exp": "coeff", ...} with decimal coefficient strings.
void to_json(nlohmann::json& j, const LaurentPoly& p);
void from_json(const nlohmann::json& j, LaurentPoly& p);

/// {"num": LaurentPoly, "den": LaurentPoly}
void to_json(nlohmann::json& j, const RationalFn& f);
void from_json(const nlohmann::json& j, RationalFn& f);

/// {"rows": r, "cols": c, "entries": [[row, col, RationalFn], ...]}
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace qschur::exactalg
