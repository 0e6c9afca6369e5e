#pragma once

#include <map>
#include <string>

#include "ncb/thcr.hpp"

namespace ncb {

/// Engine configuration with the default desk-scale setup: the rank-one
/// curve y^2 + y = x^3 - x, translation by the generator t = (0, 0), sheaf
/// divisor 3*infinity, and named points p, q on the t-line away from the
/// working twist window.
struct Config {
  Q a1 = 0, a2 = 0, a3 = 1, a4 = -1, a6 = 0;
  CurvePoint translation;
  Divisor base;
  std::map<std::string, CurvePoint> points;
  long max_degree = 8;
  int orbit_cap = 16;
  CurvePoint sample_g;
  CurvePoint sample_h;
  std::string format = "json";
  unsigned long seed = 0;
  std::string cache_dir;

  static Config defaults();

  /// Sections: [curve] a1..a6; [translation] point; [sheaf] base;
  /// [points] name = expr; [engine] max_degree, orbit_cap, sample_g,
  /// sample_h, format. Rationals are written num/den, points as
  /// "infinity", "(x, y)" or "k*t".
  static Config from_file(const std::string& path);

  Curve curve() const { return Curve(a1, a2, a3, a4, a6); }
  Geometry geometry() const;
  Sampler sampler() const;
  ThcrEngine engine() const;

  /// Curve nonsingular, translation of infinite order, named points on the
  /// curve; `ambient` additionally pins deg(base) = 3.
  void validate(bool ambient = true) const;

  CurvePoint named_point(const std::string& name) const;
  CurvePoint parse_point(const std::string& expr) const;
};

/// Divisor literal: terms "c*(x,y)", "c*infinity", "c*name" or "c*k*t"
/// joined by + and -, e.g. "p - 1*sigma... "; see parse_divisor_term.
Divisor parse_divisor(const Config& cfg, const std::string& text);

}  // namespace ncb
