// Self-contained SVG line charts. Plots are a convenience; the CSV outputs
// are the contract.

#ifndef QRGAS_SVG_HPP
#define QRGAS_SVG_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace qrgas {

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#000000";
  bool dashed = false;
  bool markers = false;
};

struct SvgChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  int width = 720;
  int height = 460;
  std::vector<SvgSeries> series;

  void write(const std::filesystem::path& path) const;
};

}  // namespace qrgas

#endif
