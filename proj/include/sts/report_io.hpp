#pragma once

#include <json.hpp>

#include "sts/bounds.hpp"
#include "sts/design.hpp"
#include "sts/search.hpp"

namespace sts {

// Search report as JSON. Timing is left out so that single-worker runs
// produce byte-identical files.
nlohmann::json report_to_json(const Design& d, const SearchReport& report);

// Family record as a flat JSON object; integers too wide for 64 bits are
// written as decimal strings.
nlohmann::json family_record_to_json(const EqualityFamilyRecord& r);

}  // namespace sts
