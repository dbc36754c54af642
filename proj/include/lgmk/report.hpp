#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "lgmk/gammaosc.hpp"

namespace lgmk {

/// Significant digits of every decimal written by the reports.
inline constexpr int kReportDigits = 15;

/// "%.15g" formatting; the same double always yields the same bytes.
std::string format_real(double v);

nlohmann::ordered_json to_json(const GammaReport& r);
/// Header plus one row per report.
std::string to_csv(const std::vector<GammaReport>& reports);

}  // namespace lgmk
