#pragma once

#include <nlohmann/json.hpp>

#include "glsm/iseries.hpp"
#include "glsm/wall_crossing.hpp"

namespace glsm {

using Json = nlohmann::json;

// Rationals serialize as decimal-free strings, complex numbers as [re, im]
// pairs with 17 significant digits.
Json to_json(const Rational& r);
Json to_json(std::complex<double> z);
Json to_json(const ChamberChar& theta);
Json to_json(const SectorLabel& s);

Json nilpoly_to_json(const NilPolyQ& p);
Json nilpoly_to_json(const NilPolyC& p);
Json ambient_to_json(const AmbientClass<Rational>& c);
Json ambient_to_json(const AmbientClass<std::complex<double>>& c);

Json series_to_json(const ISeriesQ& s);
Json series_to_json(const ISeriesC& s);
ISeriesQ series_from_json(const Json& j);

Json matrix_to_json(const LgcyMatrix& m);

Json sectors_to_json(const ChamberChar& theta);
Json basis_to_json(const ChamberChar& theta);
Json degrees_to_json(const std::vector<Degree>& degrees);

} // namespace glsm
