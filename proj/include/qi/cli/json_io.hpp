#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qi/laurent.hpp"
#include "qi/oracle/fp.hpp"
#include "qi/quiver.hpp"
#include "qi/rational_function.hpp"

namespace qi::json_io {

using json = nlohmann::json;

/// {"vertices":["i","j"],"arrows":[{"from":"i","to":"j"}, ...]}
Quiver quiver_from_json(const json& j);
json to_json(const Quiver& q);

/// {"i":2,"j":3}; missing vertices are 0, unknown vertices and negative entries
/// are InputError.
DimVector dim_from_json(const Quiver& q, const json& j);
json to_json(const Quiver& q, const DimVector& d);
/// Same shape as a dimension vector, entries may be negative.
Stability stability_from_json(const Quiver& q, const json& j);
json to_json(const Quiver& q, const Stability& s);
/// [{"i":1,"j":0}, ...]
std::vector<DimVector> dims_from_json(const Quiver& q, const json& j);
json to_json(const Quiver& q, const std::vector<DimVector>& parts);

/// {"variable":"v","terms":[{"exp":-1,"coeff":"1"}, ...]}
json to_json(const LaurentPoly& p, const std::string& variable);
LaurentPoly poly_from_json(const json& j);
/// {"variable":"q","numerator":poly,"denominator":poly}
json to_json(const RationalFunc& f, const std::string& variable);

/// Coefficients of degrees 0..high as decimal strings; InputError for negative exponents.
json coefficient_list(const LaurentPoly& p);

/// [[a,b],[c,d]] rows of a matrix with entries in [0, p).
oracle::Mat matrix_from_json(const json& j, int p);
/// A list of matrices.
std::vector<oracle::Mat> matrices_from_json(const json& j, int p);

/// Parses text as JSON, turning parse errors into InputError naming what.
json parse(const std::string& text, const std::string& what);

std::string decimal(long v);

}  // namespace qi::json_io
