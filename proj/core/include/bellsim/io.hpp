#pragma once

#include "bellsim/sweep.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace bellsim {

/// Shortest decimal form with 12 significant digits ("%.12g"), negative
/// zero folded into "0".
std::string format_sig12(double v);

/// Fixed-point with 12 decimals, for scalar report lines.
std::string format_fixed12(double v);

/// CSV form of a surface: header "axis1,axis2,value", one row per node in
/// row-major order (axis1 outer), LF-terminated.
void write_surface_csv(std::ostream& os, const Surface& surface);

/// JSON form of a surface: {"grid", "values", "argmax", "argmin"} plus
/// "refined_max"/"refined_min" when present. values is the row-major flat
/// array.
std::string surface_to_json(const Surface& surface, int indent = 2);

/// CSV form of the trade-off table: "x,max_info_gain,success_probability".
void write_tradeoff_csv(std::ostream& os, const std::vector<TradeoffRow>& rows);

std::string tradeoff_to_json(const std::vector<TradeoffRow>& rows, int indent = 2);

}  // namespace bellsim
