#include "geogen/support/numeric.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace geogen {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // also normalizes -0
  if (v == std::floor(v) && std::fabs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.0f", v);
    return buf;
  }
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    double back = 0;
    auto [p, ec] = std::from_chars(buf, buf + std::strlen(buf), back);
    (void)p;
    if (ec == std::errc() && back == v) return buf;
  }
  return buf;
}

std::string format_param(double v) {
  if (v == std::floor(v) && std::fabs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.0f", v);
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

bool approx(double a, double b, double rel, double abs) {
  double diff = std::fabs(a - b);
  if (diff <= abs) return true;
  double scale = std::max(std::fabs(a), std::fabs(b));
  return diff <= rel * scale;
}

double norm_deg(double a) {
  double r = std::fmod(a, 360.0);
  if (r < 0) r += 360.0;
  return r;
}

double angle_diff_deg(double a, double b, double period) {
  double d = std::fmod(std::fabs(a - b), period);
  return std::min(d, period - d);
}

}  // namespace geogen
