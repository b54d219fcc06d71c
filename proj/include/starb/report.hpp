#pragma once

#include <string>
#include <vector>

#include "starb/balloon.hpp"
#include "starb/verifier.hpp"

namespace starb {

/// Machine-readable certification bundle. Output is byte-deterministic for a
/// fixed report (17 significant digits, fixed key order).
std::string report_json(const Report& rep);

/// CSV with one row per check:
/// name,bound_num,bound_den,bound,observed,argmax,extremal,attained,verdict
std::string report_csv(const Report& rep);

/// Human-readable table (7 significant digits).
std::string report_text(const Report& rep);

/// Boundary exports; columns theta, re_w, im_w at 17 significant digits.
std::string boundary_csv(const std::vector<BoundaryPoint>& pts);
std::string boundary_json(const std::vector<BoundaryPoint>& pts);

} // namespace starb
