// File emission: CSV tables (full double precision), particle snapshots, and
// the per-run manifest that lists every emitted file together with the
// resolved configuration for exact replay.

#ifndef QRGAS_IO_HPP
#define QRGAS_IO_HPP

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qrgas/dsmc.hpp"

namespace qrgas {

// One CSV column: name plus values; all columns must have equal length.
struct CsvColumn {
  std::string name;
  std::vector<double> values;
};

// Writes a comma-separated table with a header row; numbers are printed with
// 17 significant digits so rereads are bit-faithful.
void write_csv(const std::filesystem::path& path, std::span<const CsvColumn> columns);

// Columnar text snapshot, one particle per line: "vx vy vz I".
void write_snapshot(const std::filesystem::path& path, std::span<const Particle> particles);
std::vector<Particle> read_snapshot(const std::filesystem::path& path);

// Deterministic run manifest (JSON): resolved configuration key/value pairs
// and the list of emitted files.
class RunManifest {
 public:
  explicit RunManifest(std::string command) : command_(std::move(command)) {}
  void set_config(std::string key, std::string value) { config_[std::move(key)] = std::move(value); }
  void add_output(const std::filesystem::path& path, std::string kind);
  void write(const std::filesystem::path& path) const;

 private:
  std::string command_;
  std::map<std::string, std::string> config_;
  std::vector<std::pair<std::string, std::string>> outputs_;
};

std::string format_full(double v);  // shortest round-trip-exact decimal form

}  // namespace qrgas

#endif
