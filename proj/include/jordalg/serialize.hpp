#pragma once

#include "jordalg/report.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace jordalg {

using Json = nlohmann::ordered_json;

Json poly_to_json(const ScalarPoly& p);
ScalarPoly poly_from_json(const Json& j);

// { "rows", "cols", "entries": [[coeff-array, ...], ...] }
Json matrix_to_json(const Mat& m);
Mat matrix_from_json(const Json& j);

// Symbol name -> matrix, in symbol order.
Json rep_to_json(const Rep& rho);

// Timing is left out unless asked for, so repeated runs serialize identically.
Json report_to_json(const CheckReport& r, bool with_timing = false);
Json reports_to_json(const std::vector<CheckReport>& rs, bool with_timing = false);

std::string report_text(const CheckReport& r);

std::string poly_latex(const ScalarPoly& p);
std::string matrix_latex(const Mat& m);
std::string rep_latex(const Rep& rho);

} // namespace jordalg
