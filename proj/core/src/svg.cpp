#include "qrgas/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qrgas {

namespace {

struct Axis {
  double lo = 0.0, hi = 1.0;
  bool log = false;

  double map(double v, double px_lo, double px_hi) const {
    double t;
    if (log)
      t = (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
    else
      t = (v - lo) / (hi - lo);
    return px_lo + t * (px_hi - px_lo);
  }

  std::vector<double> ticks() const {
    std::vector<double> out;
    if (log) {
      const int e_lo = static_cast<int>(std::floor(std::log10(lo)));
      const int e_hi = static_cast<int>(std::ceil(std::log10(hi)));
      for (int e = e_lo; e <= e_hi; ++e) {
        const double v = std::pow(10.0, e);
        if (v >= lo * 0.999 && v <= hi * 1.001) out.push_back(v);
      }
      if (out.size() < 2) {
        out = {lo, hi};
      }
    } else {
      const double span = hi - lo;
      const double raw = span / 5.0;
      const double mag = std::pow(10.0, std::floor(std::log10(raw)));
      double step = mag;
      for (double mult : {1.0, 2.0, 5.0, 10.0})
        if (raw <= mult * mag) {
          step = mult * mag;
          break;
        }
      for (double v = std::ceil(lo / step) * step; v <= hi + 0.5 * step; v += step)
        out.push_back(v);
    }
    return out;
  }
};

std::string fmt_tick(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

}  // namespace

void SvgChart::write(const std::filesystem::path& path) const {
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (log_x && !(s.x[i] > 0.0)) continue;
      if (log_y && !(s.y[i] > 0.0)) continue;
      x_lo = std::min(x_lo, s.x[i]);
      x_hi = std::max(x_hi, s.x[i]);
      y_lo = std::min(y_lo, s.y[i]);
      y_hi = std::max(y_hi, s.y[i]);
    }
  }
  if (!(x_lo < x_hi)) x_hi = x_lo + 1.0;
  if (!(y_lo < y_hi)) {
    y_lo -= 0.5;
    y_hi += 0.5;
  }
  if (!log_y) {
    const double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;
  } else {
    y_lo /= 1.5;
    y_hi *= 1.5;
  }

  const Axis ax{x_lo, x_hi, log_x};
  const Axis ay{y_lo, y_hi, log_y};
  const double left = 70, right = width - 20, top = 40, bottom = height - 50;

  std::ofstream out(path);
  if (!out) throw std::runtime_error("SvgChart::write: cannot open " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\" "
         "font-family=\"sans-serif\">"
      << title << "</text>\n";

  for (double t : ax.ticks()) {
    const double px = ax.map(t, left, right);
    out << "<line x1=\"" << px << "\" y1=\"" << top << "\" x2=\"" << px << "\" y2=\"" << bottom
        << "\" stroke=\"#dddddd\"/>\n"
        << "<text x=\"" << px << "\" y=\"" << bottom + 16
        << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">" << fmt_tick(t)
        << "</text>\n";
  }
  for (double t : ay.ticks()) {
    const double py2 = top + bottom - ay.map(t, top, bottom);
    out << "<line x1=\"" << left << "\" y1=\"" << py2 << "\" x2=\"" << right << "\" y2=\"" << py2
        << "\" stroke=\"#dddddd\"/>\n"
        << "<text x=\"" << left - 6 << "\" y=\"" << py2 + 4
        << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << fmt_tick(t)
        << "</text>\n";
  }
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << right - left
      << "\" height=\"" << bottom - top << "\" fill=\"none\" stroke=\"#333333\"/>\n";

  double legend_y = top + 14;
  for (const auto& s : series) {
    std::ostringstream pts;
    bool pen_down = false;
    std::ostringstream polys;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const bool ok = (!log_x || s.x[i] > 0.0) && (!log_y || s.y[i] > 0.0);
      if (!ok) {
        if (pen_down) {
          polys << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.6\""
                << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << " points=\"" << pts.str()
                << "\"/>\n";
          pts.str("");
          pen_down = false;
        }
        continue;
      }
      const double px = ax.map(s.x[i], left, right);
      const double py = top + bottom - ay.map(s.y[i], top, bottom);
      pts << px << ',' << py << ' ';
      pen_down = true;
      if (s.markers)
        polys << "<circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"2.6\" fill=\"" << s.color
              << "\"/>\n";
    }
    if (pen_down)
      polys << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.6\""
            << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << " points=\"" << pts.str()
            << "\"/>\n";
    out << polys.str();
    out << "<line x1=\"" << right - 150 << "\" y1=\"" << legend_y << "\" x2=\"" << right - 120
        << "\" y2=\"" << legend_y << "\" stroke=\"" << s.color << "\" stroke-width=\"2\""
        << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n"
        << "<text x=\"" << right - 114 << "\" y=\"" << legend_y + 4
        << "\" font-size=\"12\" font-family=\"sans-serif\">" << s.label << "</text>\n";
    legend_y += 18;
  }

  out << "<text x=\"" << (left + right) / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << x_label
      << "</text>\n"
      << "<text x=\"16\" y=\"" << (top + bottom) / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
         "transform=\"rotate(-90 16 "
      << (top + bottom) / 2 << ")\">" << y_label << "</text>\n"
      << "</svg>\n";
}

}  // namespace qrgas
