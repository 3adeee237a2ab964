#pragma once

#include <nlohmann/json.hpp>

#include "pmt/enumerate.hpp"
#include "pmt/minors.hpp"

namespace pmt {

/// {"contract":[...], "delete":[...], "map":{"hostElem":patternElem}}
nlohmann::json certificate_to_json(const Certificate& cert, int host_n);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json polymatroid_to_json(const Polymatroid& p);

nlohmann::json exclusion_report_to_json(const ExclusionReport& report);

}  // namespace pmt
