#pragma once

#include <string>

#include "hypsys/search.hpp"

namespace hypsys {

/// JSON array of spectrum entries; see schema/spectrum.schema.json.
/// Coefficients are ascending.
std::string spectrum_json(const SpectrumResult& r);

/// Same columns as the JSON, one row per entry, with a header row. The
/// coefficient list is space-separated inside one field.
std::string spectrum_csv(const SpectrumResult& r);

/// Decimal of log(θ) with `digits` fractional digits.
std::string log_decimal(const RootEnclosure& root, int digits = 14);

}  // namespace hypsys
