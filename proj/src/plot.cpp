#include "pytrip/plot.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include "pytrip/difference.hpp"
#include "pytrip/euclid.hpp"
#include "pytrip/parabola.hpp"

namespace pytrip {
namespace {

struct Transform {
  double scale;
  double canvas;

  [[nodiscard]] double px(double x) const { return x * scale; }
  [[nodiscard]] double py(double y) const { return canvas - y * scale; }
};

void append_polyline(std::string& out, const std::vector<std::pair<double, double>>& pts, u64 d,
                     std::string_view orientation, std::string_view color) {
  out += "<polyline data-d=\"" + std::to_string(d) + "\" data-orientation=\"";
  out += orientation;
  out += "\" stroke=\"";
  out += color;
  out += "\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += format_coord(pts[i].first);
    out += ',';
    out += format_coord(pts[i].second);
  }
  out += "\"/>\n";
}

}  // namespace

void validate(const PlotConfig& cfg) {
  if (cfg.max_leg < 3) throw DomainError("max_leg must be at least 3");
  if (cfg.canvas_px < 100) throw DomainError("canvas must be at least 100 px");
  for (u64 d : cfg.overlay_ds)
    if (!is_allowable(d)) throw DomainError("overlay d = " + std::to_string(d) + " is not allowable");
}

std::vector<ScatterPoint> scatter_points(const PlotConfig& cfg) {
  validate(cfg);
  std::vector<ScatterPoint> out;
  for (const Triple& t : triples_with_legs_below(cfg.max_leg, cfg.ppt_only)) {
    out.push_back({t.a, t.b, Side::red, t});
    out.push_back({t.b, t.a, Side::black, t});
  }
  std::sort(out.begin(), out.end(), [](const ScatterPoint& l, const ScatterPoint& r) {
    return std::pair{l.x, l.y} < std::pair{r.x, r.y};
  });
  return out;
}

std::string emit_csv(const std::vector<ScatterPoint>& points) {
  std::vector<Triple> rows;
  for (const ScatterPoint& p : points)
    if (p.side == Side::red) rows.push_back(canonicalize(p.source));
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  std::string out{kCsvHeader};
  out += '\n';
  for (const Triple& t : rows) {
    const auto cls = classify(t);
    if (!cls) throw std::logic_error("scatter point from a non-triple");
    out += std::to_string(t.a) + ',' + std::to_string(t.b) + ',' + std::to_string(t.c) + ',' +
           (cls->primitive ? "true" : "false") + ',' + std::to_string(cls->d) + ',' +
           std::to_string(cls->d_prime) + '\n';
  }
  return out;
}

std::string format_coord(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
  if (res.ec != std::errc{}) throw std::logic_error("coordinate formatting failed");
  std::string s(buf, res.ptr);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string emit_svg(const std::vector<ScatterPoint>& points, const PlotConfig& cfg) {
  validate(cfg);
  const double canvas = static_cast<double>(cfg.canvas_px);
  const Transform tf{canvas / static_cast<double>(cfg.max_leg), canvas};
  const std::string size = std::to_string(cfg.canvas_px);
  const std::string radius = format_coord(std::max(1.0, 0.3 * tf.scale));

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size + "\" height=\"" + size +
         "\" viewBox=\"0 0 " + size + ' ' + size + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + size + "\" height=\"" + size + "\" fill=\"#ffffff\"/>\n";
  out += "<g id=\"axes\" stroke=\"#808080\" stroke-width=\"1\">\n";
  out += "<line x1=\"0.000\" y1=\"" + format_coord(canvas) + "\" x2=\"" + format_coord(canvas) + "\" y2=\"" +
         format_coord(canvas) + "\"/>\n";
  out += "<line x1=\"0.000\" y1=\"0.000\" x2=\"0.000\" y2=\"" + format_coord(canvas) + "\"/>\n";
  out += "</g>\n";

  out += "<g id=\"points\" stroke=\"none\">\n";
  for (const ScatterPoint& p : points) {
    out += "<circle cx=\"" + format_coord(tf.px(static_cast<double>(p.x))) + "\" cy=\"" +
           format_coord(tf.py(static_cast<double>(p.y))) + "\" r=\"" + radius + "\" fill=\"";
    out += p.side == Side::red ? kRedColor : kBlackColor;
    out += "\"/>\n";
  }
  out += "</g>\n";

  if (!cfg.overlay_ds.empty()) {
    out += "<g id=\"parabolas\" fill=\"none\" stroke-width=\"0.5\">\n";
    const double limit = static_cast<double>(cfg.max_leg);
    for (u64 d : cfg.overlay_ds) {
      std::vector<std::pair<double, double>> up;
      std::vector<std::pair<double, double>> right;
      // Unit steps from the x-intercept x = d; stop one step past the canvas.
      for (u64 x = d; x <= cfg.max_leg; ++x) {
        const double y = parabola_eval(d, static_cast<std::int64_t>(x)).to_double();
        const double fx = static_cast<double>(x);
        up.emplace_back(tf.px(fx), tf.py(y));
        right.emplace_back(tf.px(y), tf.py(fx));
        if (y > limit) break;
      }
      append_polyline(out, up, d, "up", kParabolaColor);
      append_polyline(out, right, d, "right", kMirrorParabolaColor);
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_document(const std::string& path, std::string_view doc) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f.write(doc.data(), static_cast<std::streamsize>(doc.size()));
  if (!f) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace pytrip
