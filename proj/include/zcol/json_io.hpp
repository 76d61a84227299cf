#pragma once

#include <string>

#include "zcol/torus.hpp"

namespace zcol {

// Verification report with full witnesses and notes, stable key order,
// two-space indentation, trailing newline.
std::string report_to_json(const VerificationReport& rep);

// One row per report line under the fixed header
// `p,q,r,claimed,computed,status,witness`; fields quoted when they contain a
// comma, quote, or newline.
std::string report_to_csv(const VerificationReport& rep);

// Writes `content` verbatim; IoFailure when the file cannot be written.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace zcol
