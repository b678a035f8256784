#pragma once

#include <string>

#include "json.hpp"
#include "resist/bounds.hpp"
#include "resist/matrix.hpp"
#include "resist/resistance.hpp"
#include "resist/spectral.hpp"

namespace resist {

// All rationals serialize as "p/q" strings, including integers ("3/1").

nlohmann::json matrix_to_json(const RationalMatrix& m);
nlohmann::json profile_to_json(const ResistanceProfile& prof);
nlohmann::json spectrum_to_json(const Spectrum& spec);
nlohmann::json bounds_to_json(const std::string& graph_name, const BoundsReport& report);
nlohmann::json label_to_json(const ClassLabel& label);

}  // namespace resist
