#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pytrip/triple.hpp"

namespace pytrip {

enum class OutputFormat { csv, svg };

struct PlotConfig {
  u64 max_leg = 1000;
  bool ppt_only = false;
  std::vector<u64> overlay_ds;
  u64 canvas_px = 1000;
  OutputFormat format = OutputFormat::svg;
};

/// Throws DomainError for a non-allowable overlay, canvas_px < 100 or max_leg < 3.
void validate(const PlotConfig& cfg);

/// red: x < y (the triple as listed), black: the mirrored point.
enum class Side { red, black };

struct ScatterPoint {
  u64 x = 0;
  u64 y = 0;
  Side side = Side::red;
  Triple source;  // canonical

  friend bool operator==(const ScatterPoint&, const ScatterPoint&) = default;
};

/// Both (a, b) and (b, a) for every (optionally primitive) triple with legs
/// below max_leg, sorted by (x, y).
std::vector<ScatterPoint> scatter_points(const PlotConfig& cfg);

inline constexpr std::string_view kCsvHeader = "a,b,c,primitive,d,d_prime";
inline constexpr std::string_view kRedColor = "#d62728";
inline constexpr std::string_view kBlackColor = "#000000";
inline constexpr std::string_view kParabolaColor = "#1f77b4";
inline constexpr std::string_view kMirrorParabolaColor = "#2ca02c";

/// One row per canonical triple (mirrored points are not repeated).
std::string emit_csv(const std::vector<ScatterPoint>& points);

/// Standalone SVG 1.1 document; identical inputs give identical bytes.
std::string emit_svg(const std::vector<ScatterPoint>& points, const PlotConfig& cfg);

/// Pixel coordinate with three fixed decimals.
std::string format_coord(double v);

/// Writes `doc` to `path`; throws std::runtime_error on failure.
void write_document(const std::string& path, std::string_view doc);

}  // namespace pytrip
