#include "qrgas/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qrgas {

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const std::filesystem::path& path, std::span<const CsvColumn> columns) {
  if (columns.empty()) throw std::invalid_argument("write_csv: no columns");
  const std::size_t rows = columns.front().values.size();
  for (const auto& c : columns)
    if (c.values.size() != rows) throw std::invalid_argument("write_csv: ragged columns");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path.string());
  for (std::size_t c = 0; c < columns.size(); ++c)
    out << columns[c].name << (c + 1 < columns.size() ? "," : "\n");
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < columns.size(); ++c)
      out << format_full(columns[c].values[r]) << (c + 1 < columns.size() ? "," : "\n");
  if (!out) throw std::runtime_error("write_csv: write failed for " + path.string());
}

void write_snapshot(const std::filesystem::path& path, std::span<const Particle> particles) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_snapshot: cannot open " + path.string());
  for (const auto& p : particles)
    out << format_full(p.v.x) << ' ' << format_full(p.v.y) << ' ' << format_full(p.v.z) << ' '
        << format_full(p.I) << '\n';
  if (!out) throw std::runtime_error("write_snapshot: write failed for " + path.string());
}

std::vector<Particle> read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_snapshot: cannot open " + path.string());
  std::vector<Particle> particles;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Particle p;
    if (!(ls >> p.v.x >> p.v.y >> p.v.z >> p.I))
      throw std::runtime_error("read_snapshot: malformed line in " + path.string());
    particles.push_back(p);
  }
  return particles;
}

void RunManifest::add_output(const std::filesystem::path& path, std::string kind) {
  outputs_.emplace_back(path.filename().string(), std::move(kind));
}

void RunManifest::write(const std::filesystem::path& path) const {
  nlohmann::ordered_json j;
  j["command"] = command_;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config_) cfg[k] = v;
  j["config"] = cfg;
  nlohmann::ordered_json outs = nlohmann::ordered_json::array();
  for (const auto& [file, kind] : outputs_) outs.push_back({{"file", file}, {"kind", kind}});
  j["outputs"] = outs;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("RunManifest::write: cannot open " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace qrgas
