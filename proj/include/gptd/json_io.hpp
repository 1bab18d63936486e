#pragma once

#include <string>

#include <json.hpp>

#include "gptd/convex.hpp"
#include "gptd/distinguishability.hpp"
#include "gptd/indep_system.hpp"
#include "gptd/verifier.hpp"

namespace gptd {

/// Canonical system form: {"n": 3, "maximal_independent": [[1,2],[3]]},
/// subsets as sorted 1-based arrays in canonical family order. The reader
/// also accepts {"n": ..., "members": [[...], ...]}.
nlohmann::json system_to_json(const IndependenceSystem& system);
IndependenceSystem system_from_json(const nlohmann::json& j);

/// {"n": 3, "generators": [{"label": "s1", "coords": ["1","0","0"]}, ...]};
/// rationals as exact "p/q" or "p" strings; labels optional per generator.
/// A non-null epsilon is recorded alongside.
nlohmann::json space_to_json(const StateSpace& space, const Rat* eps = nullptr);
StateSpace space_from_json(const nlohmann::json& j);

nlohmann::json measurement_to_json(const Measurement& measurement);

nlohmann::json report_to_json(const RealizationReport& report);

nlohmann::json profile_to_json(const PeProfile& profile);

// File helpers; throw std::runtime_error with the path on I/O failure.
nlohmann::json load_json(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& j);
IndependenceSystem load_system(const std::string& path);
StateSpace load_space(const std::string& path);

}  // namespace gptd
