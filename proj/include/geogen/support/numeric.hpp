#pragma once

#include <cmath>
#include <string>

namespace geogen {

// Shortest decimal string that parses back to exactly the same double.
// Integral values print without a decimal point.
std::string format_double(double v);

// Formatting for sampled parameters: integers bare, everything else with
// exactly two decimals (sampled values are always 2-decimal).
std::string format_param(double v);

// Round to two decimal places, ties away from zero.
double round2(double v);

bool approx(double a, double b, double rel = 1e-9, double abs = 1e-9);

// Smallest absolute difference between two angles in degrees, reduced
// modulo `period` (360 for plain angles, 90/180 for symmetric shapes).
double angle_diff_deg(double a, double b, double period = 360.0);

// Normalize an angle to [0, 360).
double norm_deg(double a);

}  // namespace geogen
