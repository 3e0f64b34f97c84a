#pragma once

#include <json.hpp>

#include "stanley/bigint.hpp"
#include "stanley/counting.hpp"
#include "stanley/guess.hpp"
#include "stanley/position.hpp"
#include "stanley/verify.hpp"

namespace stanley {

// Counts are always decimal strings; they leave 64-bit range quickly.
inline nlohmann::json count_json(const BigInt& v) { return v.str(); }
BigInt count_from_json(const nlohmann::json& j);

nlohmann::json position_json(const Position& p);
nlohmann::json play_json(const Play& play);
nlohmann::json report_json(const VerificationReport& report);
nlohmann::json fitted_json(const FittedForm& form);

}  // namespace stanley
