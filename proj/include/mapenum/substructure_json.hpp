#pragma once

#include <json.hpp>

#include "mapenum/arrays.hpp"

namespace mapenum {

// {"K": int, "w": [[...], [...]], "R1": [...], "R2": [...], "phi": {"<col>": <col>}}
nlohmann::json gamma_to_json(const SubstructureGamma& g);
SubstructureGamma gamma_from_json(const nlohmann::json& j);

// {"K": int, "R1": int, "R2": int, "w": [...]}
nlohmann::json omega_to_json(const SubstructureOmega& o);
SubstructureOmega omega_from_json(const nlohmann::json& j);

}  // namespace mapenum
