#pragma once

#include <string>

#include "json.hpp"
#include "covforms/weylops/diffop.hpp"

namespace covforms::weyl {

inline constexpr int kSchemaVersion = 1;

// Serialized form:
//   {schema_version, n, vars: "x"|"xy", source: [k, l], target: [k, l],
//    params: [p0, p1], terms: [{coeff_num, coeff_den, alpha, beta, gamma,
//    delta, endo: [xo, xi, yo, yi]}]}
// Coefficients are polynomial strings in the parameter names; masks are the
// bit patterns of the exterior basis elements. Terms appear in key order so
// the output is deterministic.
nlohmann::json to_json(const DiffOp& op, const ParamNames& names = st_names());
DiffOp from_json(const nlohmann::json& j);

// LaTeX rendering, one summand per term: coefficient, monomials, partials
// and the exterior matrix unit E_{out,in}.
std::string to_latex(const DiffOp& op, const ParamNames& names = st_names());

}  // namespace covforms::weyl
